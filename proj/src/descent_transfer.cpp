#include "sigperm/descent_transfer.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigperm/errors.hpp"
#include "sigperm/statistics.hpp"

namespace sigperm {

namespace {

int sgn(int v) { return v > 0 ? 1 : -1; }

// A sequence of cycles stored as one flat word with fixed boundaries. Entries
// are rewritten in place by position; a magnitude -> position index keeps
// lookups O(1).
class CycleWord {
 public:
  CycleWord(std::vector<int> flat, std::vector<int> starts)
      : entries_(std::move(flat)), starts_(std::move(starts)) {
    const auto len = entries_.size();
    cycle_of_.resize(len);
    position_.assign(len + 2, -1);
    for (std::size_t k = 0; k + 1 < starts_.size(); ++k) {
      for (int p = starts_[k]; p < starts_[k + 1]; ++p) {
        cycle_of_[static_cast<std::size_t>(p)] = static_cast<int>(k);
      }
    }
    for (std::size_t p = 0; p < len; ++p) {
      position_[static_cast<std::size_t>(std::abs(entries_[p]))] = static_cast<int>(p);
    }
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int cycles() const { return static_cast<int>(starts_.size()) - 1; }
  int entry(int p) const { return entries_[static_cast<std::size_t>(p)]; }
  int start(int k) const { return starts_[static_cast<std::size_t>(k)]; }
  int last(int k) const { return starts_[static_cast<std::size_t>(k) + 1] - 1; }
  int cycle_of(int p) const { return cycle_of_[static_cast<std::size_t>(p)]; }
  int position(int magnitude) const { return position_[static_cast<std::size_t>(magnitude)]; }

  int next_in_cycle(int p) const {
    const int k = cycle_of(p);
    return p == last(k) ? start(k) : p + 1;
  }
  int prev_in_cycle(int p) const {
    const int k = cycle_of(p);
    return p == start(k) ? last(k) : p - 1;
  }

  // x, y := sgn(x)|y|, sgn(y)|x|
  void swap(int p, int q) {
    const int x = entry(p);
    const int y = entry(q);
    entries_[static_cast<std::size_t>(p)] = sgn(x) * std::abs(y);
    entries_[static_cast<std::size_t>(q)] = sgn(y) * std::abs(x);
    position_[static_cast<std::size_t>(std::abs(y))] = p;
    position_[static_cast<std::size_t>(std::abs(x))] = q;
  }

  CycleNotation notation(int n) const {
    CycleNotation c{n, {}};
    for (int k = 0; k < cycles(); ++k) {
      c.cycles.push_back(SignedCycle{
          std::vector<int>(entries_.begin() + start(k), entries_.begin() + last(k) + 1)});
    }
    return c;
  }

  const std::vector<int>& flat() const { return entries_; }

 private:
  std::vector<int> entries_;
  std::vector<int> starts_;  // cycles() + 1 offsets, last one == size()
  std::vector<int> cycle_of_;
  std::vector<int> position_;
};

// Image of a magnitude under the permutation whose cycles are the word's cycles.
int image_in_cycles(const CycleWord& w, int magnitude) {
  return w.entry(w.next_in_cycle(w.position(magnitude)));
}

bool descent_in_cycles(const CycleWord& w, int d) {
  return (d == 0 ? 0 : image_in_cycles(w, d)) > image_in_cycles(w, d + 1);
}

// Checks the order and swap properties of the cyclic-to-signed algorithm
// against the live working state. All indices here are 0-based.
class Inspector {
 public:
  Inspector(const SignedPermutation& pi, const CycleWord& work, TransferTrace& trace)
      : pi_(pi),
        initial_(work),
        work_(work),
        trace_(trace),
        n_(pi.degree() - 1),
        involved_(static_cast<std::size_t>(pi.degree()) + 1, 0) {
    for (int k = 0; k < work.cycles(); ++k) {
      trace_.initial_last_magnitudes.push_back(std::abs(work.entry(work.last(k))));
    }
  }

  void snapshot(int j) {
    trace_.steps.push_back(TraceStep{j + 1, work_.notation(n_), {}});
    ++trace_.snapshots_checked;
    check_order_properties(j);
  }

  void begin_batch(int j, int z, int eps) {
    before_.emplace(work_);
    batch_j_ = j;
    batch_z_ = z;
    batch_eps_ = eps;
    batch_swaps_.clear();
  }

  void record_swap(int p, int q) {
    trace_.steps.back().swaps.push_back(SwapEvent{work_.entry(p), work_.entry(q), p, q});
    batch_swaps_.emplace_back(p, q);
    involved_[static_cast<std::size_t>(std::abs(work_.entry(p)))] = 1;
    involved_[static_cast<std::size_t>(std::abs(work_.entry(q)))] = 1;
  }

  void end_batch() {
    ++trace_.batches_checked;
    check_swap_properties();
    before_.reset();
  }

 private:
  void fail(const std::string& what) {
    std::string msg = what + " [pi=";
    for (int v : pi_.images()) msg += std::to_string(v) + ",";
    msg.back() = ']';
    trace_.violations.push_back(std::move(msg));
  }

  bool des_delta(const CycleWord& w, int d) const {
    return is_descent(pi_, d) != descent_in_cycles(w, d);
  }

  void check_order_properties(int j) {
    const CycleWord& w = work_;
    const int m = w.cycles();
    const std::string at = " at j=" + std::to_string(j + 1);

    // (A) relative order inside each cycle is that of the initial cycle.
    for (int k = 0; k < m; ++k) {
      for (int p = w.start(k); p <= w.last(k); ++p) {
        for (int q = p + 1; q <= w.last(k); ++q) {
          if ((w.entry(p) < w.entry(q)) != (initial_.entry(p) < initial_.entry(q))) {
            fail("order property (A): relative order changed in cycle " +
                 std::to_string(k + 1) + at);
          }
        }
      }
    }

    // (B) first entries increase and each dominates every earlier entry.
    int running_max = 0;
    bool have_max = false;
    for (int k = 0; k < m; ++k) {
      const int first = w.entry(w.start(k));
      if (k > 0 && !(w.entry(w.start(k - 1)) < first)) {
        fail("order property (B): first entries not increasing" + at);
      }
      for (int p = w.start(k); p <= w.last(k); ++p) {
        running_max = have_max ? std::max(running_max, w.entry(p)) : w.entry(p);
        have_max = true;
      }
      if (running_max != first) {
        fail("order property (B): cycle " + std::to_string(k + 1) +
             " first entry is not the largest so far" + at);
      }
    }

    // (C) for k > j: pi(|x|) > pi_{k,1} <=> sigma(|x|) >= sigma_{k,1}, with
    // equality exactly for the last entry of cycle k; such x never swapped.
    for (int k = j + 1; k < m; ++k) {
      const int pi_first = initial_.entry(initial_.start(k));
      const int sigma_first = w.entry(w.start(k));
      for (int p = 0; p < w.size(); ++p) {
        const int a = std::abs(w.entry(p));
        const bool large_pi = pi_(a) > pi_first;
        const int img = image_in_cycles(w, a);
        const bool large_sigma = img >= sigma_first;
        if (large_pi != large_sigma) {
          fail("order property (C): equivalence fails for |x|=" + std::to_string(a) +
               ", k=" + std::to_string(k + 1) + at);
        }
        if ((img == sigma_first) != (p == w.last(k))) {
          fail("order property (C): equality case fails for |x|=" + std::to_string(a) + at);
        }
        if (large_pi && involved_[static_cast<std::size_t>(a)] != 0) {
          fail("order property (C): |x|=" + std::to_string(a) + " was swapped" + at);
        }
      }
    }

    // (D) every discrepancy d pairs a last entry of some cycle >= j with a
    // non-last entry further right, oriented as stated.
    for (int d = 1; d <= n_ - 1; ++d) {
      if (!des_delta(w, d)) continue;
      const int pd = w.position(d);
      const int pe = w.position(d + 1);
      auto is_last_from_j = [&](int p) {
        return w.cycle_of(p) >= j && p == w.last(w.cycle_of(p));
      };
      auto right_non_last = [&](int last_p, int other_p) {
        return w.cycle_of(other_p) > w.cycle_of(last_p) && other_p != w.last(w.cycle_of(other_p));
      };
      const bool d_last = is_last_from_j(pd) && right_non_last(pd, pe);
      const bool e_last = is_last_from_j(pe) && right_non_last(pe, pd);
      if (d_last == e_last) {
        fail("order property (D): discrepancy " + std::to_string(d) + " not positioned" + at);
        continue;
      }
      const int x = d_last ? d : d + 1;
      const int other = d_last ? d + 1 : d;
      if (!(pi_(x) > pi_(other)) || !(image_in_cycles(w, x) < image_in_cycles(w, other))) {
        fail("order property (D): discrepancy " + std::to_string(d) + " misoriented" + at);
      }
    }
  }

  void check_swap_properties() {
    const CycleWord& before = *before_;
    const CycleWord& after = work_;
    const int j = batch_j_;
    const int m = before.cycles();
    const std::string at = " at j=" + std::to_string(j + 1);
    if (batch_swaps_.empty()) return;

    std::vector<char> touched(static_cast<std::size_t>(before.size()), 0);
    for (auto [p, q] : batch_swaps_) {
      touched[static_cast<std::size_t>(p)] = 1;
      touched[static_cast<std::size_t>(q)] = 1;
      // (I)
      const int cp = before.cycle_of(p);
      const int cq = before.cycle_of(q);
      if (!((cp == j && cq > j) || (cq == j && cp > j))) {
        fail("swap property (I): swap between cycles " + std::to_string(cp + 1) + " and " +
             std::to_string(cq + 1) + at);
      }
    }

    // (II)
    for (int k = j + 1; k < m; ++k) {
      if (touched[static_cast<std::size_t>(before.last(k))] != 0) {
        fail("swap property (II): last entry of cycle " + std::to_string(k + 1) + " swapped" +
             at);
      }
    }
    const int first_y = batch_swaps_.front().second;
    for (int p = first_y + 1; p < before.size(); ++p) {
      if (touched[static_cast<std::size_t>(p)] != 0) {
        fail("swap property (II): entry right of the first partner swapped" + at);
      }
    }

    // (III)
    if (j + 1 < m) {
      const int threshold = before.entry(before.start(j + 1));
      for (int p = 0; p < before.size(); ++p) {
        if (image_in_cycles(before, std::abs(before.entry(p))) >= threshold &&
            touched[static_cast<std::size_t>(p)] != 0) {
          fail("swap property (III): large entry swapped" + at);
        }
      }
    }

    // (IV) effect on (Des(pi) symdiff Des(sigma)) cap [n-1].
    const int z = batch_z_;
    const int eps = batch_eps_;
    auto in_range = [&](int d) { return d >= 1 && d <= n_ - 1; };
    auto was = [&](int d) { return des_delta(before, d); };
    auto now = [&](int d) { return des_delta(after, d); };
    const int a = std::min(std::abs(z), std::abs(z + eps));
    if (!in_range(a) || !was(a) || now(a)) {
      fail("swap property (IV): discrepancy " + std::to_string(a) + " not removed" + at);
    }
    const int b = std::min(std::abs(z), std::abs(z - eps));
    if (in_range(b) && now(b)) {
      fail("swap property (IV): discrepancy " + std::to_string(b) + " remains" + at);
    }
    const int c = std::min(std::abs(z + eps), std::abs(z + 2 * eps));
    const bool c_in = in_range(c);
    if (c_in) {
      if (was(c) && now(c)) {
        fail("swap property (IV): discrepancy " + std::to_string(c) + " not removed" + at);
      }
      if (!was(c) &&
          image_in_cycles(before, std::abs(z + 2 * eps)) >
              image_in_cycles(before, std::abs(z + eps)) &&
          now(c)) {
        fail("swap property (IV): discrepancy " + std::to_string(c) + " introduced" + at);
      }
    }
    for (int d = 1; d <= n_ - 1; ++d) {
      if (c_in && d == c) continue;
      if (!was(d) && now(d)) {
        fail("swap property (IV): discrepancy " + std::to_string(d) + " introduced" + at);
      }
    }
  }

  const SignedPermutation& pi_;
  const CycleWord initial_;
  const CycleWord& work_;
  TransferTrace& trace_;
  int n_;
  std::vector<char> involved_;

  std::optional<CycleWord> before_;
  int batch_j_ = 0;
  int batch_z_ = 0;
  int batch_eps_ = 0;
  std::vector<std::pair<int, int>> batch_swaps_;
};

}  // namespace

bool p_flag(const SignedPermutation& pi, const SignedPermutation& sigma, int x, int y) {
  const int n = sigma.degree();
  if (pi.degree() != n + 1) {
    throw DomainError("p_flag: expected degrees n+1 and n, got " + std::to_string(pi.degree()) +
                      " and " + std::to_string(n));
  }
  if (x < 0 || y < 0) throw DomainError("p_flag: arguments must be nonnegative");
  if (std::abs(x - y) != 1) return false;
  const int lo = std::min(x, y);
  if (lo < 1 || lo > n - 1) return false;
  return is_descent(pi, lo) != is_descent(sigma, lo);
}

std::vector<int> left_to_right_maxima(const SignedCycle& c) {
  if (c.entries.empty()) throw DomainError("left_to_right_maxima: empty cycle");
  std::vector<int> out{1};
  int best = c.entries.front();
  for (std::size_t i = 1; i < c.entries.size(); ++i) {
    if (c.entries[i] > best) {
      best = c.entries[i];
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

bool in_positive_half(const SignedPermutation& pi) {
  const int big = pi.degree();
  for (int v : pi.images()) {
    if (v == big) return true;
    if (v == -big) return false;
  }
  throw DomainError("in_positive_half: empty permutation");
}

SignedPermutation phi_plus(const SignedPermutation& pi, TransferTrace* trace) {
  const int big = pi.degree();
  if (big < 1 || !is_cyclic(pi)) throw DomainError("phi_plus: input is not cyclic");
  SignedCycle word = cyclic_word(pi, big);
  if (word.entries.back() != big) throw DomainError("phi_plus: -(n+1) appears in the cycle");
  const int n = big - 1;

  // Split at left-to-right maxima; the final maximum is n+1 itself.
  const auto maxima = left_to_right_maxima(word);
  std::vector<int> starts;
  starts.reserve(maxima.size());
  for (std::size_t i = 0; i + 1 < maxima.size(); ++i) starts.push_back(maxima[i] - 1);
  starts.push_back(n);
  word.entries.pop_back();
  CycleWord sigma(std::move(word.entries), std::move(starts));
  const int m = sigma.cycles();

  std::vector<char> des_pi(static_cast<std::size_t>(big), 0);
  for (int d = 0; d < big; ++d) des_pi[static_cast<std::size_t>(d)] = is_descent(pi, d);

  auto p = [&](int x, int y) {
    if (std::abs(x - y) != 1) return false;
    const int lo = std::min(x, y);
    if (lo < 1 || lo > n - 1) return false;
    return (des_pi[static_cast<std::size_t>(lo)] != 0) != descent_in_cycles(sigma, lo);
  };

  std::optional<Inspector> inspector;
  if (trace != nullptr) inspector.emplace(pi, sigma, *trace);

  for (int j = 0; j < m; ++j) {
    if (inspector) inspector->snapshot(j);
    int z = sigma.entry(sigma.last(j));
    const bool down = p(std::abs(z), std::abs(z - 1));
    const bool up = p(std::abs(z), std::abs(z + 1));
    if (!down && !up) continue;
    int eps = up ? 1 : -1;
    if (down && up) {
      const int img_down = pi(std::abs(z - 1));
      const int img_up = pi(std::abs(z + 1));
      if (img_down == img_up) throw std::logic_error("phi_plus: tie in epsilon choice");
      eps = img_up > img_down ? 1 : -1;
    }
    bool first_pass = true;
    while (p(std::abs(z), std::abs(z + eps))) {
      if (inspector) {
        if (!first_pass) inspector->snapshot(j);
        inspector->begin_batch(j, z, eps);
      }
      first_pass = false;
      int xp = sigma.last(j);
      int yp = sigma.position(std::abs(z + eps));
      while (p(std::abs(sigma.entry(xp)), std::abs(sigma.entry(yp)))) {
        const bool hits_first = xp == sigma.start(j) || yp == sigma.start(j);
        if (inspector) inspector->record_swap(xp, yp);
        sigma.swap(xp, yp);
        if (hits_first) {
          if (p(std::abs(sigma.entry(xp)), std::abs(sigma.entry(yp)))) {
            throw std::logic_error("phi_plus: swap loop failed to terminate");
          }
          break;
        }
        xp = sigma.prev_in_cycle(xp);
        yp = sigma.prev_in_cycle(yp);
      }
      if (inspector) inspector->end_batch();
      z = sigma.entry(sigma.last(j));
    }
  }

  std::vector<int> images(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) images[static_cast<std::size_t>(a - 1)] = image_in_cycles(sigma, a);
  return SignedPermutation::from_trusted(std::move(images));
}

SignedPermutation capital_phi(const SignedPermutation& pi) {
  if (pi.degree() < 1 || !is_cyclic(pi)) throw DomainError("capital_phi: input is not cyclic");
  const int n = pi.degree() - 1;
  SignedPermutation s =
      in_positive_half(pi) ? phi_plus(pi) : negate_all(phi_plus(negate_all(pi)));
  // -(-1)phi(-pi) = (-1)(-phi(-pi)), so both halves share the same correction.
  if (n >= 1 && is_descent(pi, 0) != is_descent(s, 0)) return times_neg1(s);
  return s;
}

SignedPermutation psi_plus(const SignedPermutation& sigma) {
  const int n = sigma.degree();
  const int big = n + 1;
  const CycleNotation canon = to_canonical_cycles(sigma);
  const int m = static_cast<int>(canon.cycles.size());

  std::vector<int> flat;
  std::vector<int> starts;
  flat.reserve(static_cast<std::size_t>(big));
  for (const auto& c : canon.cycles) {
    starts.push_back(static_cast<int>(flat.size()));
    flat.insert(flat.end(), c.entries.begin(), c.entries.end());
  }
  starts.push_back(n);  // the length-1 cycle (n+1)
  flat.push_back(big);
  starts.push_back(big);
  CycleWord pi(std::move(flat), std::move(starts));

  // pi is the single cycle read across all the blocks in order.
  auto pi_at = [&](int a) {
    const int p = pi.position(a);
    return pi.entry(p + 1 == big ? 0 : p + 1);
  };
  auto des_pi = [&](int d) { return (d == 0 ? 0 : pi_at(d)) > pi_at(d + 1); };

  std::vector<char> des_sigma(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (int d = 0; d < n; ++d) des_sigma[static_cast<std::size_t>(d)] = is_descent(sigma, d);

  auto p = [&](int x, int y) {
    if (std::abs(x - y) != 1) return false;
    const int lo = std::min(x, y);
    if (lo < 1 || lo > n - 1) return false;
    return des_pi(lo) != (des_sigma[static_cast<std::size_t>(lo)] != 0);
  };

  for (int j = m - 2; j >= 0; --j) {
    int z = pi.entry(pi.last(j));
    const bool down = p(std::abs(z), std::abs(z - 1));
    const bool up = p(std::abs(z), std::abs(z + 1));
    if (!down && !up) continue;
    int eps = up ? 1 : -1;
    if (down && up) {
      const int img_down = pi_at(std::abs(z - 1));
      const int img_up = pi_at(std::abs(z + 1));
      if (img_down == img_up) throw std::logic_error("psi_plus: tie in epsilon choice");
      eps = img_up < img_down ? 1 : -1;
    }
    while (p(std::abs(z), std::abs(z + eps))) {
      int xp = pi.last(j);
      int yp = pi.position(std::abs(z + eps));
      while (p(std::abs(pi.entry(xp)), std::abs(pi.entry(yp)))) {
        const bool hits_first = xp == pi.start(j) || yp == pi.start(j);
        pi.swap(xp, yp);
        if (hits_first) {
          if (p(std::abs(pi.entry(xp)), std::abs(pi.entry(yp)))) {
            throw std::logic_error("psi_plus: swap loop failed to terminate");
          }
          break;
        }
        xp = pi.prev_in_cycle(xp);
        yp = pi.prev_in_cycle(yp);
      }
      z = pi.entry(pi.last(j));
    }
  }

  std::vector<int> images(static_cast<std::size_t>(big));
  for (int a = 1; a <= big; ++a) images[static_cast<std::size_t>(a - 1)] = pi_at(a);
  return SignedPermutation::from_trusted(std::move(images));
}

namespace {

SignedPermutation neg_psi_neg(const SignedPermutation& s) {
  return negate_all(psi_plus(negate_all(s)));
}

int first_image(const SignedPermutation& s) { return s.degree() == 0 ? 0 : s(1); }

}  // namespace

SignedPermutation capital_psi_d(const SignedPermutation& sigma) {
  const bool even = parity_info(sigma).in_d;
  switch (first_image(sigma)) {
    case 1: return even ? psi_plus(sigma) : psi_plus(times_neg1(sigma));
    case -1: return even ? neg_psi_neg(times_neg1(sigma)) : neg_psi_neg(sigma);
    default: return even ? psi_plus(sigma) : neg_psi_neg(sigma);
  }
}

SignedPermutation capital_psi_dbar(const SignedPermutation& sigma) {
  const bool even = parity_info(sigma).in_d;
  switch (first_image(sigma)) {
    case 1: return even ? psi_plus(times_neg1(sigma)) : psi_plus(sigma);
    case -1: return even ? neg_psi_neg(sigma) : neg_psi_neg(times_neg1(sigma));
    default: return even ? neg_psi_neg(sigma) : psi_plus(sigma);
  }
}

std::array<SignedPermutation, 4> preimage_quadruple(const SignedPermutation& sigma) {
  const SignedPermutation flipped = times_neg1(sigma);
  return {psi_plus(sigma), psi_plus(flipped), neg_psi_neg(sigma), neg_psi_neg(flipped)};
}

}  // namespace sigperm

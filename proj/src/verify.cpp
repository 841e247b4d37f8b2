#include "sigperm/verify.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "sigperm/colored.hpp"
#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/elizalde.hpp"
#include "sigperm/errors.hpp"
#include "sigperm/statistics.hpp"
#include "sigperm/text_format.hpp"

namespace sigperm {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 9> kClaims{{
    {Claim::phi_descents, "phi-descents"},
    {Claim::bijection_d, "bijection-D"},
    {Claim::bijection_dbar, "bijection-Dbar"},
    {Claim::inverses, "inverses"},
    {Claim::corollary_counts, "corollary-counts"},
    {Claim::elizalde_equivalence, "elizalde-equivalence"},
    {Claim::colored, "colored"},
    {Claim::moments, "moments"},
    {Claim::order_swap_properties, "order-swap-properties"},
}};

using Check = std::optional<std::string>;

// Keeps the lowest-index failure across workers.
class Outcome {
 public:
  void fail(std::uint64_t index, std::string what) {
    std::lock_guard lock(mutex_);
    if (!first_ || index < first_->first) first_ = {index, std::move(what)};
    failed_.store(true);
  }
  bool failed_before(std::uint64_t index) const {
    if (!failed_.load()) return false;
    std::lock_guard lock(mutex_);
    return first_ && first_->first < index;
  }
  void add_checked(std::uint64_t k) { checked_ += k; }
  std::uint64_t checked() const { return checked_.load(); }
  const std::optional<std::pair<std::uint64_t, std::string>>& first() const { return first_; }

 private:
  mutable std::mutex mutex_;
  std::atomic<bool> failed_{false};
  std::atomic<std::uint64_t> checked_{0};
  std::optional<std::pair<std::uint64_t, std::string>> first_;
};

// `offset` places this domain's indices after earlier scans of the same claim.
void scan(const DomainSpec& d, const VerifyConfig& cfg, Outcome& out, std::uint64_t offset,
          const std::function<Check(const SignedPermutation&)>& check) {
  const std::uint64_t size = checked_cardinality(d, cfg.budget);
  run_sharded(size, cfg.run, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    std::uint64_t index = b;
    std::uint64_t local = 0;
    bool stop = false;
    for_each_in_range(d, b, e, [&](const SignedPermutation& p) {
      if (stop) return;
      const std::uint64_t here = offset + index++;
      ++local;
      if (auto bad = check(p)) {
        out.fail(here, format_one_line(p) + ": " + *bad);
        stop = true;
      }
    });
    out.add_checked(local);
  });
}

void scan_colored(const DomainSpec& d, const VerifyConfig& cfg, Outcome& out, std::uint64_t offset,
                  const std::function<Check(const ColoredPermutation&)>& check) {
  const std::uint64_t size = checked_cardinality(d, cfg.budget);
  run_sharded(size, cfg.run, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    std::uint64_t index = b;
    std::uint64_t local = 0;
    bool stop = false;
    for_each_colored_in_range(d, b, e, [&](const ColoredPermutation& p) {
      if (stop) return;
      const std::uint64_t here = offset + index++;
      ++local;
      if (auto bad = check(p)) {
        out.fail(here, format_colored(p) + ": " + *bad);
        stop = true;
      }
    });
    out.add_checked(local);
  });
}

bool whole_domain(const VerifyConfig& cfg) { return cfg.run.shard.total == 1; }

void require_whole(const VerifyConfig& cfg) {
  if (!whole_domain(cfg)) {
    throw DomainError(std::string(claim_name(cfg.claim)) + " compares totals and cannot be sharded");
  }
}

// Lex rank of the magnitudes times 2^n plus the sign mask.
std::uint64_t fast_rank(const SignedPermutation& s) {
  const int n = s.degree();
  std::uint64_t r = 0;
  std::uint64_t used = 0;
  std::uint64_t signs = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = s(i);
    const int m = std::abs(v);
    const int smaller_unused = m - 1 - std::popcount(used & ((std::uint64_t{1} << (m - 1)) - 1));
    r = r * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_unused);
    used |= std::uint64_t{1} << (m - 1);
    if (v < 0) signs |= std::uint64_t{1} << (i - 1);
  }
  return (r << n) | signs;
}

std::uint64_t colored_rank(const ColoredPermutation& p) {
  const SignedPermutation w = as_signed(p);
  const std::uint64_t r = fast_rank(w) >> p.degree();
  std::uint64_t tau = 0;
  for (auto it = p.tau().rbegin(); it != p.tau().rend(); ++it) {
    tau = tau * static_cast<std::uint64_t>(p.colors()) + static_cast<std::uint64_t>(*it);
  }
  std::uint64_t words = 1;
  for (int i = 0; i < p.degree(); ++i) words *= static_cast<std::uint64_t>(p.colors());
  return r * words + tau;
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t size) : bits_(new std::atomic<std::uint8_t>[size]()), size_(size) {
    for (std::uint64_t i = 0; i < size; ++i) bits_[i].store(0, std::memory_order_relaxed);
  }
  // True when the slot was already taken.
  bool mark(std::uint64_t i) { return bits_[i].exchange(1) != 0; }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < size_; ++i) c += bits_[i].load();
    return c;
  }

 private:
  std::unique_ptr<std::atomic<std::uint8_t>[]> bits_;
  std::uint64_t size_;
};

std::string des_text(const DescentSet& d) {
  std::string s = "{";
  for (int m : d.members()) s += (s.size() > 1 ? "," : "") + std::to_string(m);
  return s + "}";
}

std::vector<int> colored_des_below(const ColoredPermutation& p, int bound) {
  std::vector<int> out;
  for (int d : colored_descent_set(p)) {
    if (d < bound) out.push_back(d);
  }
  return out;
}

void run_phi_descents(const VerifyConfig& cfg, Outcome& out) {
  const int n = cfg.n;
  scan({DomainKind::CB, n + 1}, cfg, out, 0, [n](const SignedPermutation& pi) -> Check {
    const DescentSet want = truncated_descent_set(pi, n);
    const DescentSet got = descent_set(capital_phi(pi));
    if (want == got) return std::nullopt;
    return "Des(Phi) = " + des_text(got) + " but truncated Des = " + des_text(want);
  });
}

void run_bijection(const VerifyConfig& cfg, Outcome& out, VerifyReport& report) {
  const bool d_side = cfg.claim == Claim::bijection_d;
  const int n = cfg.n;
  const DomainSpec domain{d_side ? DomainKind::CD : DomainKind::CDbar, n + 1};
  const DomainSpec target{DomainKind::B, n};
  const auto psi = d_side ? capital_psi_d : capital_psi_dbar;
  std::unique_ptr<Bitmap> seen;
  if (whole_domain(cfg)) seen = std::make_unique<Bitmap>(checked_cardinality(target, cfg.budget));
  scan(domain, cfg, out, 0, [&](const SignedPermutation& pi) -> Check {
    const SignedPermutation s = capital_phi(pi);
    if (s.degree() != n) return "image has the wrong degree";
    if (seen && seen->mark(fast_rank(s))) return "image " + format_one_line(s) + " is hit twice";
    if (psi(s) != pi) return "not recovered from its image " + format_one_line(s);
    return std::nullopt;
  });
  if (seen && !out.first()) {
    const std::uint64_t hit = seen->count();
    const std::uint64_t want = checked_cardinality(target, cfg.budget);
    report.detail = "image size " + std::to_string(hit) + " of " + std::to_string(want);
    if (hit != want) out.fail(~std::uint64_t{0}, "image misses " + std::to_string(want - hit) + " elements");
  }
}

void run_inverses(const VerifyConfig& cfg, Outcome& out) {
  const int n = cfg.n;
  const DomainSpec cyclic{DomainKind::CB, n + 1};
  scan(cyclic, cfg, out, 0, [](const SignedPermutation& pi) -> Check {
    const SignedPermutation s = capital_phi(pi);
    const bool in_d = parity_info(pi).in_d;
    if ((in_d ? capital_psi_d(s) : capital_psi_dbar(s)) != pi) {
      return std::string(in_d ? "Psi_D" : "Psi_Dbar") + "(Phi(pi)) != pi";
    }
    if (in_positive_half(pi) && psi_plus(phi_plus(pi)) != pi) return "psi(phi(pi)) != pi";
    return std::nullopt;
  });
  const std::uint64_t offset = checked_cardinality(cyclic, cfg.budget);
  scan({DomainKind::B, n}, cfg, out, offset, [](const SignedPermutation& s) -> Check {
    const SignedPermutation d = capital_psi_d(s);
    const SignedPermutation dbar = capital_psi_dbar(s);
    const SignedPermutation plus = psi_plus(s);
    if (!is_cyclic(d) || !parity_info(d).in_d) return "Psi_D(s) is not in C_D";
    if (!is_cyclic(dbar) || parity_info(dbar).in_d) return "Psi_Dbar(s) is not in the complement of C_D";
    if (capital_phi(d) != s) return "Phi(Psi_D(s)) != s";
    if (capital_phi(dbar) != s) return "Phi(Psi_Dbar(s)) != s";
    if (!is_cyclic(plus) || !in_positive_half(plus)) return "psi(s) is not in C+";
    if (phi_plus(plus) != s) return "phi(psi(s)) != s";
    return std::nullopt;
  });
}

void run_corollary(const VerifyConfig& cfg, Outcome& out, VerifyReport& report) {
  require_whole(cfg);
  const int n = cfg.n;
  const RefinedTable b = refined_descent_table({DomainKind::B, n}, cfg.run, cfg.budget);
  const RefinedTable d = refined_descent_table({DomainKind::CD, n + 1}, cfg.run, cfg.budget);
  const RefinedTable dbar = refined_descent_table({DomainKind::CDbar, n + 1}, cfg.run, cfg.budget);
  out.add_checked(static_cast<std::uint64_t>(b.total() + d.total() + dbar.total()));
  report.digest = table_digest(b);
  report.detail = std::to_string(b.counts.size()) + " descent sets";
  if (b.counts != d.counts) out.fail(0, "refined tables of B_n and C_D differ");
  if (b.counts != dbar.counts) out.fail(1, "refined tables of B_n and the complement of C_D differ");
}

void run_elizalde(const VerifyConfig& cfg, Outcome& out) {
  scan({DomainKind::CS, cfg.n + 1}, cfg, out, 0, [](const SignedPermutation& pi) -> Check {
    ElizaldeTrace trace;
    const SignedPermutation classic = phi_classic(pi, &trace);
    if (!trace.mismatches.empty()) return trace.mismatches.front();
    const SignedPermutation phi = capital_phi(pi);
    if (classic != phi) return "classic " + format_one_line(classic) + " != Phi " + format_one_line(phi);
    return std::nullopt;
  });
}

void run_colored(const VerifyConfig& cfg, Outcome& out, VerifyReport& report) {
  const int n = cfg.n;
  const int r = cfg.r;
  std::uint64_t offset = 0;
  for (int c = 0; c < r; ++c) {
    const DomainSpec domain{DomainKind::CSnr, n + 1, r, c};
    std::unique_ptr<Bitmap> seen;
    if (whole_domain(cfg)) seen = std::make_unique<Bitmap>(checked_cardinality(domain, cfg.budget));
    scan_colored(domain, cfg, out, offset, [&](const ColoredPermutation& p) -> Check {
      const ColoredPermutation q = colored_phi(p);
      if (colored_des_below(p, n) != colored_des_below(q, n)) return "descents in [n-1] differ";
      if (seen && seen->mark(colored_rank(q))) return "image " + format_colored(q) + " is hit twice";
      if (colored_psi(q, c) != p) return "colored_psi does not recover the input";
      return std::nullopt;
    });
    offset += checked_cardinality(domain, cfg.budget);
  }
  if (!whole_domain(cfg)) return;
  std::uint64_t group = 0;
  for_each_colored_group(n, r, [&](const ColoredPermutation& q) {
    ++group;
    for (int c = 0; c < r; ++c) {
      const ColoredPermutation p = colored_psi(q, c);
      if (!is_cyclic(p) || color_of(p) != c || colored_phi(p) != q) {
        out.fail(offset + group, format_colored(q) + ": colored_psi with color " + std::to_string(c) +
                                     " is not a right inverse");
      }
    }
  });
  out.add_checked(group);
  report.detail = std::to_string(r) + " color classes against " + std::to_string(group) +
                  " elements of S_{n,r}";
}

void run_moments(const VerifyConfig& cfg, Outcome& out, VerifyReport& report) {
  require_whole(cfg);
  const int n = cfg.n;
  if (n < 5) throw DomainError("moments are asserted only for n >= 5");
  std::uint64_t index = 0;
  for (DomainKind k : {DomainKind::B, DomainKind::CB, DomainKind::CD, DomainKind::CDbar}) {
    for (Statistic s : {Statistic::des, Statistic::fmaj}) {
      const DomainSpec d{k, n};
      const DistributionTable t = exact_distribution(d, s, cfg.run, cfg.budget);
      out.add_checked(static_cast<std::uint64_t>(t.total()));
      const MomentReport got = exact_moments(t);
      const MomentReport want = theoretical_moments(s, n);
      if (got != want) {
        out.fail(index, describe(d) + (s == Statistic::des ? " des" : " fmaj") + ": mean " +
                            got.mean.str() + " variance " + got.variance.str() + ", expected " +
                            want.mean.str() + " and " + want.variance.str());
      }
      ++index;
    }
  }
  report.detail = "B, CB, CD, CDbar at n = " + std::to_string(n);
}

Check order_swap_check(const SignedPermutation& pi) {
  TransferTrace trace;
  const SignedPermutation traced = phi_plus(pi, &trace);
  if (!trace.violations.empty()) return trace.violations.front();
  if (traced != phi_plus(pi)) return "traced output differs from the plain run";
  return std::nullopt;
}

void run_order_swap(const VerifyConfig& cfg, Outcome& out, VerifyReport& report) {
  const int n = cfg.n;
  const DomainSpec domain{DomainKind::CB, n + 1};
  if (cfg.samples == 0) {
    scan(domain, cfg, out, 0, [](const SignedPermutation& pi) -> Check {
      if (!in_positive_half(pi)) return std::nullopt;
      return order_swap_check(pi);
    });
    report.detail = "exhaustive over C+ (C- elements skipped)";
    return;
  }
  run_sharded(cfg.samples, cfg.run, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      if (out.failed_before(i)) break;
      CounterRng rng(cfg.seed, i);
      SignedPermutation pi = sample(domain, rng);
      if (!in_positive_half(pi)) pi = negate_all(pi);
      if (auto bad = order_swap_check(pi)) out.fail(i, format_one_line(pi) + ": " + *bad);
      out.add_checked(1);
    }
  });
  report.detail = std::to_string(cfg.samples) + " seeded samples, seed " + std::to_string(cfg.seed);
}

}  // namespace

std::string_view claim_name(Claim c) {
  for (auto [k, name] : kClaims) {
    if (k == c) return name;
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view name) {
  for (auto [k, n] : kClaims) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::uint64_t table_digest(const RefinedTable& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, c] : t.counts) feed(std::to_string(k) + ":" + c.str() + "\n");
  return h;
}

VerifyReport verify(const VerifyConfig& cfg) {
  if (cfg.n < 0) throw DomainError("n must be nonnegative");
  if (cfg.claim == Claim::colored && cfg.r < 1) throw DomainError("r must be at least 1");
  VerifyReport report;
  report.claim = cfg.claim;
  Outcome out;
  switch (cfg.claim) {
    case Claim::phi_descents: run_phi_descents(cfg, out); break;
    case Claim::bijection_d:
    case Claim::bijection_dbar: run_bijection(cfg, out, report); break;
    case Claim::inverses: run_inverses(cfg, out); break;
    case Claim::corollary_counts: run_corollary(cfg, out, report); break;
    case Claim::elizalde_equivalence: run_elizalde(cfg, out); break;
    case Claim::colored: run_colored(cfg, out, report); break;
    case Claim::moments: run_moments(cfg, out, report); break;
    case Claim::order_swap_properties: run_order_swap(cfg, out, report); break;
  }
  report.checked = out.checked();
  if (out.first()) {
    report.passed = false;
    report.counterexample = out.first()->second;
  }
  return report;
}

}  // namespace sigperm

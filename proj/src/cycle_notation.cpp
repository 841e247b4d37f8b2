#include "sigperm/cycle_notation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sigperm/errors.hpp"

namespace sigperm {

CycleNotation cycle_decomposition(const SignedPermutation& sigma) {
  const int n = sigma.degree();
  CycleNotation out{n, {}};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    // The entry for magnitude `start` is sigma(a_l) where a_l precedes it,
    // so walk forward and fix the sign of the first entry at the end.
    SignedCycle c;
    int a = start;
    do {
      seen[static_cast<std::size_t>(a)] = true;
      const int next = sigma(a);
      c.entries.push_back(next);
      a = std::abs(next);
    } while (a != start);
    // entries currently hold sigma(a_1), sigma(a_2), ..., sigma(a_l) = e_1 a_1;
    // rotate right by one so that the entry with magnitude `start` is first.
    std::rotate(c.entries.rbegin(), c.entries.rbegin() + 1, c.entries.rend());
    out.cycles.push_back(std::move(c));
  }
  return out;
}

CycleNotation to_canonical_cycles(const SignedPermutation& sigma) {
  CycleNotation out = cycle_decomposition(sigma);
  for (auto& c : out.cycles) {
    auto it = std::max_element(c.entries.begin(), c.entries.end());
    std::rotate(c.entries.begin(), it, c.entries.end());
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const SignedCycle& a, const SignedCycle& b) {
              return a.entries.front() < b.entries.front();
            });
  return out;
}

SignedPermutation from_cycles(const CycleNotation& c) {
  if (c.n < 0 || c.n > kMaxDegree) throw MalformedNotation("invalid degree");
  const auto n = static_cast<std::size_t>(c.n);
  std::vector<int> images(n, 0);
  std::vector<bool> seen(n + 1, false);
  std::size_t total = 0;
  for (const auto& cyc : c.cycles) {
    if (cyc.entries.empty()) throw MalformedNotation("empty cycle");
    for (int e : cyc.entries) {
      const auto mag = static_cast<std::size_t>(std::abs(static_cast<long>(e)));
      if (e == 0 || mag > n) {
        throw MalformedNotation("cycle entry " + std::to_string(e) + " outside [+-" +
                                std::to_string(n) + "]");
      }
      if (seen[mag]) throw MalformedNotation("magnitude " + std::to_string(mag) + " repeated");
      seen[mag] = true;
      ++total;
    }
    const auto len = cyc.entries.size();
    for (std::size_t i = 0; i < len; ++i) {
      const int from = std::abs(cyc.entries[i]);
      images[static_cast<std::size_t>(from) - 1] = cyc.entries[(i + 1) % len];
    }
  }
  if (total != n) {
    throw MalformedNotation("cycles cover " + std::to_string(total) + " of " +
                            std::to_string(n) + " magnitudes");
  }
  return SignedPermutation::from_trusted(std::move(images));
}

bool is_cyclic(const SignedPermutation& sigma) {
  const int n = sigma.degree();
  if (n == 0) return false;
  int a = 1;
  int len = 0;
  do {
    a = std::abs(sigma(a));
    ++len;
  } while (a != 1);
  return len == n;
}

SignedCycle cyclic_word(const SignedPermutation& sigma, int last_magnitude) {
  const int n = sigma.degree();
  if (last_magnitude < 1 || last_magnitude > n) {
    throw DomainError("magnitude " + std::to_string(last_magnitude) + " outside [1," +
                      std::to_string(n) + "]");
  }
  SignedCycle c;
  c.entries.reserve(static_cast<std::size_t>(n));
  int a = last_magnitude;
  do {
    const int next = sigma(a);
    c.entries.push_back(next);
    a = std::abs(next);
  } while (a != last_magnitude);
  if (static_cast<int>(c.entries.size()) != n) throw DomainError("permutation is not cyclic");
  return c;
}

SignedCycle rotate_cycle_to_end(const SignedCycle& c, int magnitude) {
  auto it = std::find_if(c.entries.begin(), c.entries.end(),
                         [&](int e) { return std::abs(e) == magnitude; });
  if (it == c.entries.end()) {
    throw DomainError("magnitude " + std::to_string(magnitude) + " not in cycle");
  }
  SignedCycle out = c;
  const auto shift = (it - c.entries.begin()) + 1;
  std::rotate(out.entries.begin(), out.entries.begin() + shift, out.entries.end());
  return out;
}

SignedCycle concat_with_sentinel(const std::vector<SignedCycle>& cycles, int sentinel) {
  SignedCycle out;
  for (const auto& c : cycles) {
    for (int e : c.entries) {
      if (std::abs(e) == sentinel) {
        throw DomainError("sentinel " + std::to_string(sentinel) + " already present");
      }
      out.entries.push_back(e);
    }
  }
  out.entries.push_back(sentinel);
  return out;
}

bool is_canonical(const CycleNotation& c) {
  for (std::size_t k = 0; k < c.cycles.size(); ++k) {
    const auto& e = c.cycles[k].entries;
    if (e.empty()) return false;
    if (*std::max_element(e.begin(), e.end()) != e.front()) return false;
    if (k > 0 && !(c.cycles[k - 1].entries.front() < e.front())) return false;
  }
  return true;
}

}  // namespace sigperm

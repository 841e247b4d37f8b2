#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "sigperm/signed_permutation.hpp"

// Independent reference code for the tests: plain loops over every signed
// permutation, nothing shared with the library beyond the value type.
namespace oracle {

inline std::vector<sigperm::SignedPermutation> all_signed(int n) {
  std::vector<sigperm::SignedPermutation> out;
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v(a);
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      }
      out.emplace_back(v);
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline int image(const sigperm::SignedPermutation& s, int i) {
  const int v = s.images()[static_cast<std::size_t>(std::abs(i)) - 1];
  return i > 0 ? v : -v;
}

// Number of cycles: orbits of {1..n} under |sigma| on magnitudes.
inline int cycle_count(const sigperm::SignedPermutation& s) {
  const int n = s.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = std::abs(image(s, j))) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  return count;
}

inline bool cyclic(const sigperm::SignedPermutation& s) {
  return s.degree() > 0 && cycle_count(s) == 1;
}

inline std::set<int> descents(const sigperm::SignedPermutation& s, int limit) {
  std::set<int> d;
  for (int i = 0; i < limit; ++i) {
    const int left = i == 0 ? 0 : image(s, i);
    if (left > image(s, i + 1)) d.insert(i);
  }
  return d;
}

inline int negatives(const sigperm::SignedPermutation& s) {
  return static_cast<int>(std::count_if(s.images().begin(), s.images().end(), [](int v) { return v < 0; }));
}

inline bool positive_half(const sigperm::SignedPermutation& s) {
  // Walk the cycle from n: the sign on n in the notation is the sign with
  // which n is reached, i.e. the sign of the image of the predecessor.
  const int n = s.degree();
  for (int i = 1; i <= n; ++i) {
    if (std::abs(image(s, i)) == n) return image(s, i) > 0;
  }
  return false;
}

}  // namespace oracle

#pragma once

#include <cstdint>
#include <vector>

#include "sigperm/signed_permutation.hpp"

namespace sigperm {

// Descent sets are word-sized bit sets; refined tables key on them directly.
inline constexpr int kMaxDescentSetDegree = 63;

/// Subset of {0, 1, ..., n-1}; bit i set <=> i is a member.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::uint64_t bits);
  static DescentSet from_members(int n, const std::vector<int>& members);

  int degree() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(int i) const noexcept {
    return i >= 0 && i < n_ && ((bits_ >> i) & 1u) != 0;
  }
  int size() const noexcept;
  std::int64_t sum() const noexcept;
  std::vector<int> members() const;

  bool operator==(const DescentSet&) const = default;
  auto operator<=>(const DescentSet&) const = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

struct StatRecord {
  std::int64_t des = 0;
  std::int64_t maj = 0;
  std::int64_t neg = 0;
  std::int64_t fmaj = 0;

  bool operator==(const StatRecord&) const = default;
};

enum class Statistic { des, maj, neg, fmaj };

// i in Des(sigma) <=> sigma(i) > sigma(i+1), with sigma(0) = 0.
inline bool is_descent(const SignedPermutation& sigma, int i) noexcept {
  const int left = i == 0 ? 0 : sigma(i);
  return left > sigma(i + 1);
}

DescentSet descent_set(const SignedPermutation& sigma);

// Des(pi) restricted to {0,...,bound-1}, re-homed at degree `bound`.
// Requires bound == pi.degree() - 1.
DescentSet truncated_descent_set(const SignedPermutation& pi, int bound);

// Works at any degree; does not build a DescentSet.
StatRecord stats(const SignedPermutation& sigma) noexcept;

std::int64_t stat_value(const StatRecord& s, Statistic which) noexcept;

}  // namespace sigperm

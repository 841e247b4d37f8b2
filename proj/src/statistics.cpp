#include "sigperm/statistics.hpp"

#include <bit>
#include <string>

#include "sigperm/errors.hpp"

namespace sigperm {

DescentSet::DescentSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxDescentSetDegree) {
    throw DomainError("descent sets support degree <= " +
                      std::to_string(kMaxDescentSetDegree));
  }
  if (n < 64 && (bits >> n) != 0) throw DomainError("descent set member outside {0..n-1}");
}

DescentSet DescentSet::from_members(int n, const std::vector<int>& members) {
  std::uint64_t bits = 0;
  for (int m : members) {
    if (m < 0 || m >= n) throw DomainError("descent set member " + std::to_string(m));
    bits |= std::uint64_t{1} << m;
  }
  return DescentSet(n, bits);
}

int DescentSet::size() const noexcept { return std::popcount(bits_); }

std::int64_t DescentSet::sum() const noexcept {
  std::int64_t s = 0;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) s += std::countr_zero(b);
  return s;
}

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

DescentSet descent_set(const SignedPermutation& sigma) {
  const int n = sigma.degree();
  if (n > kMaxDescentSetDegree) {
    throw DomainError("descent_set: degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxDescentSetDegree));
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (is_descent(sigma, i)) bits |= std::uint64_t{1} << i;
  }
  return DescentSet(n, bits);
}

DescentSet truncated_descent_set(const SignedPermutation& pi, int bound) {
  if (bound != pi.degree() - 1) {
    throw DomainError("truncated_descent_set: bound " + std::to_string(bound) +
                      " does not equal degree - 1 = " + std::to_string(pi.degree() - 1));
  }
  if (bound > kMaxDescentSetDegree) throw DomainError("truncated_descent_set: degree too large");
  std::uint64_t bits = 0;
  for (int i = 0; i < bound; ++i) {
    if (is_descent(pi, i)) bits |= std::uint64_t{1} << i;
  }
  return DescentSet(bound, bits);
}

StatRecord stats(const SignedPermutation& sigma) noexcept {
  StatRecord r;
  const int n = sigma.degree();
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    const int cur = sigma(i);
    if (prev > cur) {
      ++r.des;
      r.maj += i - 1;
    }
    r.neg += cur < 0;
    prev = cur;
  }
  r.fmaj = 2 * r.maj + r.neg;
  return r;
}

std::int64_t stat_value(const StatRecord& s, Statistic which) noexcept {
  switch (which) {
    case Statistic::des: return s.des;
    case Statistic::maj: return s.maj;
    case Statistic::neg: return s.neg;
    case Statistic::fmaj: return s.fmaj;
  }
  return 0;
}

}  // namespace sigperm

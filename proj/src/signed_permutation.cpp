#include "sigperm/signed_permutation.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "sigperm/errors.hpp"

namespace sigperm {

namespace {

void validate(const std::vector<int>& images) {
  const auto n = images.size();
  if (n > static_cast<std::size_t>(kMaxDegree)) {
    throw DomainError("degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    const auto mag = static_cast<std::size_t>(std::abs(static_cast<long>(v)));
    if (v == 0 || mag > n) {
      throw MalformedNotation("image " + std::to_string(v) + " at position " +
                              std::to_string(i + 1) + " is outside [+-" +
                              std::to_string(n) + "]");
    }
    if (seen[mag]) {
      throw MalformedNotation("magnitude " + std::to_string(mag) + " repeated");
    }
    seen[mag] = true;
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  validate(images_);
}

SignedPermutation::SignedPermutation(std::initializer_list<int> images)
    : SignedPermutation(std::vector<int>(images)) {}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0 || n > kMaxDegree) throw DomainError("invalid degree " + std::to_string(n));
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return from_trusted(std::move(v));
}

SignedPermutation SignedPermutation::from_trusted(std::vector<int> images) {
  SignedPermutation p;
  p.images_ = std::move(images);
  return p;
}

int SignedPermutation::apply(int i) const {
  if (i == 0 || std::abs(i) > degree()) {
    throw DomainError("argument " + std::to_string(i) + " outside [+-" +
                      std::to_string(degree()) + "]");
  }
  return (*this)(i);
}

SignedPermutation compose(const SignedPermutation& pi, const SignedPermutation& sigma) {
  if (pi.degree() != sigma.degree()) {
    throw DomainError("compose: degree mismatch " + std::to_string(pi.degree()) + " vs " +
                      std::to_string(sigma.degree()));
  }
  std::vector<int> out(sigma.images().begin(), sigma.images().end());
  for (int& v : out) v = pi(v);
  return SignedPermutation::from_trusted(std::move(out));
}

SignedPermutation inverse(const SignedPermutation& sigma) {
  std::vector<int> out(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i) {
    // sigma(i) = v  <=>  sigma^{-1}(|v|) = sgn(v) * i
    const int v = sigma(i);
    out[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation::from_trusted(std::move(out));
}

SignedPermutation negate_all(const SignedPermutation& pi) {
  std::vector<int> out(pi.images().begin(), pi.images().end());
  for (int& v : out) v = -v;
  return SignedPermutation::from_trusted(std::move(out));
}

SignedPermutation times_neg1(const SignedPermutation& sigma) {
  std::vector<int> out(sigma.images().begin(), sigma.images().end());
  for (int& v : out) {
    if (v == 1 || v == -1) v = -v;
  }
  return SignedPermutation::from_trusted(std::move(out));
}

ParityInfo parity_info(const SignedPermutation& sigma) noexcept {
  int neg = 0;
  for (int v : sigma.images()) neg += v < 0;
  return {neg, neg % 2 == 0};
}

}  // namespace sigperm

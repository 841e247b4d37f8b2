#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sigperm {

// Largest supported degree.
inline constexpr int kMaxDegree = 1 << 20;

/// An element of the hyperoctahedral group B_n in one-line notation.
///
/// Only the images of 1..n are stored; sigma(-i) = -sigma(i) is implied.
/// The constructor validates, every other member assumes a valid value.
class SignedPermutation {
 public:
  SignedPermutation() = default;  // the empty permutation, identity of B_0
  explicit SignedPermutation(std::vector<int> images);
  SignedPermutation(std::initializer_list<int> images);

  static SignedPermutation identity(int n);

  // Skips validation; caller guarantees a valid image sequence.
  static SignedPermutation from_trusted(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  std::span<const int> images() const noexcept { return images_; }

  // sigma(i) for 1 <= |i| <= n.
  int apply(int i) const;
  int operator()(int i) const noexcept {
    return i > 0 ? images_[i - 1] : -images_[-i - 1];
  }

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> images_;
};

// result(i) = pi(sigma(i)); composition is right to left.
SignedPermutation compose(const SignedPermutation& pi, const SignedPermutation& sigma);
SignedPermutation inverse(const SignedPermutation& sigma);

// [-1,-2,...,-n] * pi: every image negated.
SignedPermutation negate_all(const SignedPermutation& pi);

// (-1) * sigma where (-1) = [-1,2,...,n]: the image of magnitude 1 flips sign.
SignedPermutation times_neg1(const SignedPermutation& sigma);

struct ParityInfo {
  int negative_count = 0;
  bool in_d = true;
  bool operator==(const ParityInfo&) const = default;
};

ParityInfo parity_info(const SignedPermutation& sigma) noexcept;

}  // namespace sigperm

#pragma once

#include <cstdint>
#include <vector>

#include "sigperm/signed_permutation.hpp"

namespace sigperm {

/// An element (omega, tau) of the colored permutation group S_{n,r}.
///
/// omega is a plain permutation of [n] in one-line notation and tau(i) is the
/// color carried by the image omega(i). Colored values compare by the key
/// (color, magnitude).
class ColoredPermutation {
 public:
  ColoredPermutation(int r, std::vector<int> omega, std::vector<int> tau);

  int degree() const noexcept { return static_cast<int>(omega_.size()); }
  int colors() const noexcept { return r_; }
  const std::vector<int>& omega() const noexcept { return omega_; }
  const std::vector<int>& tau() const noexcept { return tau_; }

  bool operator==(const ColoredPermutation&) const = default;
  auto operator<=>(const ColoredPermutation&) const = default;

 private:
  int r_ = 1;
  std::vector<int> omega_;
  std::vector<int> tau_;
};

struct ColoredStats {
  std::int64_t des = 0;
  std::int64_t maj = 0;
  std::int64_t col = 0;
  std::int64_t fmaj = 0;

  bool operator==(const ColoredStats&) const = default;
};

// Descent positions in [n]; position n compares against the color-0 fixed
// point n+1, so n is a descent exactly when tau(n) != 0.
std::vector<int> colored_descent_set(const ColoredPermutation& p);

ColoredStats colored_stats(const ColoredPermutation& p);

// Sum of tau modulo r.
int color_of(const ColoredPermutation& p);

// omega is a single cycle of length n (colors do not affect cyclicity).
bool is_cyclic(const ColoredPermutation& p);

// (phi_classic(omega), tau restricted to [n]) for cyclic p of degree n+1.
ColoredPermutation colored_phi(const ColoredPermutation& p);

// Inverse of colored_phi on the cyclic elements of color `target_color`.
ColoredPermutation colored_psi(const ColoredPermutation& p, int target_color);

// omega viewed as an all-positive signed permutation.
SignedPermutation as_signed(const ColoredPermutation& p);

}  // namespace sigperm

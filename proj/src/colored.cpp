#include "sigperm/colored.hpp"

#include <string>
#include <utility>

#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/elizalde.hpp"
#include "sigperm/errors.hpp"

namespace sigperm {

ColoredPermutation::ColoredPermutation(int r, std::vector<int> omega, std::vector<int> tau)
    : r_(r), omega_(std::move(omega)), tau_(std::move(tau)) {
  if (r_ < 1) throw DomainError("colored permutation needs r >= 1");
  if (tau_.size() != omega_.size()) throw DomainError("omega and tau lengths differ");
  for (int v : omega_) {
    if (v < 1) throw MalformedNotation("omega image " + std::to_string(v) + " is not positive");
  }
  SignedPermutation check(omega_);  // validates the bijection
  for (int c : tau_) {
    if (c < 0 || c >= r_) {
      throw MalformedNotation("color " + std::to_string(c) + " outside Z_" + std::to_string(r_));
    }
  }
}

SignedPermutation as_signed(const ColoredPermutation& p) {
  return SignedPermutation::from_trusted(p.omega());
}

std::vector<int> colored_descent_set(const ColoredPermutation& p) {
  const auto& w = p.omega();
  const auto& t = p.tau();
  const auto n = w.size();
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (t[i] > t[i + 1] || (t[i] == t[i + 1] && w[i] > w[i + 1])) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  if (n > 0 && t[n - 1] != 0) out.push_back(static_cast<int>(n));
  return out;
}

ColoredStats colored_stats(const ColoredPermutation& p) {
  ColoredStats s;
  const int n = p.degree();
  for (int d : colored_descent_set(p)) {
    ++s.des;
    if (d < n) s.maj += d;
  }
  for (int c : p.tau()) s.col += c;
  s.fmaj = p.colors() * s.maj + s.col;
  return s;
}

int color_of(const ColoredPermutation& p) {
  std::int64_t sum = 0;
  for (int c : p.tau()) sum += c;
  return static_cast<int>(sum % p.colors());
}

bool is_cyclic(const ColoredPermutation& p) { return is_cyclic(as_signed(p)); }

ColoredPermutation colored_phi(const ColoredPermutation& p) {
  if (!is_cyclic(p)) throw DomainError("colored_phi: omega is not a single cycle");
  const SignedPermutation image = phi_classic(as_signed(p));
  std::vector<int> tau(p.tau().begin(), p.tau().end() - 1);
  return ColoredPermutation(p.colors(), std::vector<int>(image.images().begin(), image.images().end()),
                            std::move(tau));
}

ColoredPermutation colored_psi(const ColoredPermutation& p, int target_color) {
  const int r = p.colors();
  if (target_color < 0 || target_color >= r) {
    throw DomainError("colored_psi: color " + std::to_string(target_color) + " outside Z_" +
                      std::to_string(r));
  }
  const SignedPermutation cyc = psi_plus(as_signed(p));
  std::vector<int> tau = p.tau();
  tau.push_back(((target_color - color_of(p)) % r + r) % r);
  return ColoredPermutation(r, std::vector<int>(cyc.images().begin(), cyc.images().end()),
                            std::move(tau));
}

}  // namespace sigperm

#include "sigperm/elizalde.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/errors.hpp"

namespace sigperm {

namespace {

// sigma as a list of cycles of positive values.
struct Cycles {
  std::vector<std::vector<int>> cycles;

  std::pair<int, int> locate(int v) const {
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const auto& c = cycles[k];
      auto it = std::find(c.begin(), c.end(), v);
      if (it != c.end()) return {static_cast<int>(k), static_cast<int>(it - c.begin())};
    }
    throw std::logic_error("phi_classic: value missing from cycles");
  }

  int image(int v) const {
    auto [k, i] = locate(v);
    const auto& c = cycles[static_cast<std::size_t>(k)];
    return c[(static_cast<std::size_t>(i) + 1) % c.size()];
  }

  int& at(std::pair<int, int> where) {
    return cycles[static_cast<std::size_t>(where.first)][static_cast<std::size_t>(where.second)];
  }

  std::pair<int, int> preceding(std::pair<int, int> where) const {
    const auto len = static_cast<int>(cycles[static_cast<std::size_t>(where.first)].size());
    return {where.first, (where.second + len - 1) % len};
  }

  SignedPermutation to_permutation(int n) const {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        images[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
      }
    }
    return SignedPermutation::from_trusted(std::move(images));
  }
};

}  // namespace

SignedPermutation phi_classic(const SignedPermutation& pi, ElizaldeTrace* trace) {
  const int big = pi.degree();
  for (int v : pi.images()) {
    if (v < 0) throw DomainError("phi_classic: input has a negative image");
  }
  if (big < 1 || !is_cyclic(pi)) throw DomainError("phi_classic: input is not cyclic");
  const int n = big - 1;

  // The cycle of pi written with n+1 last, cut at its left-to-right maxima.
  std::vector<int> word;
  for (int a = pi(big); a != big; a = pi(a)) word.push_back(a);
  Cycles sigma;
  int best = 0;
  for (int v : word) {
    if (v > best) {
      best = v;
      sigma.cycles.emplace_back();
    }
    sigma.cycles.back().push_back(v);
  }

  auto triggers = [&](int z, int eps) {
    const int w = z + eps;
    if (w < 1 || w > n) return false;
    return pi(z) > pi(w) && sigma.image(z) < sigma.image(w);
  };
  auto audit = [&](bool decided, int x, int y, bool continuation) {
    if (trace == nullptr) return;
    ++(continuation ? trace->continuation_checks : trace->trigger_checks);
    const char* what = continuation ? "continuation" : "trigger";
    const SignedPermutation current = sigma.to_permutation(n);
    if (decided != p_flag(pi, current, x, y)) {
      trace->mismatches.push_back(std::string(what) + " disagrees with p_flag at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
    }
  };

  const int m = static_cast<int>(sigma.cycles.size());
  for (int j = 0; j < m; ++j) {
    auto& own = sigma.cycles[static_cast<std::size_t>(j)];
    int z = own.back();
    const bool down = triggers(z, -1);
    const bool up = triggers(z, 1);
    audit(down, z, z - 1, false);
    audit(up, z, z + 1, false);
    if (!down && !up) continue;
    int eps = up ? 1 : -1;
    if (up && down) eps = pi(z + 1) > pi(z - 1) ? 1 : -1;

    while (true) {
      const bool go = triggers(z, eps);
      audit(go, z, z + eps, false);
      if (!go) break;
      auto wx = sigma.locate(z);
      auto wy = sigma.locate(z + eps);
      while (true) {
        std::swap(sigma.at(wx), sigma.at(wy));
        const bool first = (wx.first == j && wx.second == 0) || (wy.first == j && wy.second == 0);
        if (first) break;
        const auto px = sigma.preceding(wx);
        const auto py = sigma.preceding(wy);
        const int a = sigma.at(px);
        const int b = sigma.at(py);
        const bool adjacent = a - b == 1 || b - a == 1;
        audit(adjacent, a, b, true);
        if (!adjacent) break;
        wx = px;
        wy = py;
      }
      z = own.back();
    }
  }
  return sigma.to_permutation(n);
}

}  // namespace sigperm

#include <doctest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/enumeration.hpp"
#include "sigperm/errors.hpp"
#include "sigperm/statistics.hpp"

using namespace sigperm;

namespace {
SignedPermutation cyc(std::vector<int> entries) {
  const int n = static_cast<int>(entries.size());
  return from_cycles(CycleNotation{n, {SignedCycle{std::move(entries)}}});
}
}  // namespace

TEST_CASE("p_flag on the worked example state") {
  const SignedPermutation pi = cyc({-4, -1, 2, 5, -3, -6, 7});
  const SignedPermutation sigma =
      from_cycles(CycleNotation{6, {SignedCycle{{-4}}, SignedCycle{{-1}}, SignedCycle{{2}}, SignedCycle{{5, -3, -6}}}});
  CHECK(p_flag(pi, sigma, 4, 5));
  CHECK_FALSE(p_flag(pi, sigma, 4, 3));
  CHECK_FALSE(p_flag(pi, sigma, 7, 3));
  CHECK_THROWS_AS(p_flag(pi, pi, 1, 2), DomainError);
}

TEST_CASE("left-to-right maxima") {
  CHECK(left_to_right_maxima(SignedCycle{{-4, -1, 2, 5, -3, -6, 7}}) == std::vector<int>{1, 2, 3, 4, 7});
  CHECK(left_to_right_maxima(SignedCycle{{1, 2, 3}}) == std::vector<int>{1, 2, 3});
  CHECK(left_to_right_maxima(SignedCycle{{3, 2, -1}}) == std::vector<int>{1});
}

TEST_CASE("phi_plus worked examples") {
  CHECK(phi_plus(cyc({-4, -1, 2, 5, -3, -6, 7})) == SignedPermutation{-1, 2, -6, -3, -5, 4});
  CHECK(phi_plus(cyc({1, -4, 8, -6, 11, 2, -3, 7, -5, 10, 12, 9, 13})) ==
        SignedPermutation{-5, -3, 2, 7, 8, 10, -4, -6, 12, 11, 1, 9});
  CHECK(descent_set(SignedPermutation{-5, -3, 2, 7, 8, 10, -4, -6, 12, 11, 1, 9}).members() ==
        std::vector<int>{0, 6, 7, 9, 10});
  CHECK(phi_plus(cyc({1, 2})) == SignedPermutation{1});
  CHECK_THROWS_AS(phi_plus(SignedPermutation{2, 1, 3}), DomainError);
  CHECK_THROWS_AS(phi_plus(cyc({1, -2})), DomainError);
}

TEST_CASE("Phi worked examples") {
  CHECK(capital_phi(cyc({-4, -1, 2, 5, -3, -6, 7})) == SignedPermutation{1, 2, -6, -3, -5, 4});
  const SignedPermutation s = capital_phi(cyc({3, 4, 8, -1, 5, 7, 2, -6, -9}));
  CHECK(s == SignedPermutation{4, -1, 5, 8, 7, -6, 3, 2});
  CHECK(descent_set(s).members() == std::vector<int>{1, 4, 5, 7});
  CHECK(capital_phi(cyc({1, 2})) == SignedPermutation{1});
  CHECK_THROWS_AS(capital_phi(SignedPermutation{2, 1, 3}), DomainError);
}

TEST_CASE("psi_plus examples") {
  CHECK(psi_plus(SignedPermutation{-1, 2, -6, -3, -5, 4}) == cyc({-4, -1, 2, 5, -3, -6, 7}));
  CHECK(psi_plus(SignedPermutation{1}) == cyc({1, 2}));
  CHECK(psi_plus(SignedPermutation{-5, -3, 2, 7, 8, 10, -4, -6, 12, 11, 1, 9}) ==
        cyc({1, -4, 8, -6, 11, 2, -3, 7, -5, 10, 12, 9, 13}));
}

TEST_CASE("Psi_D and Psi_Dbar on B_3 and B_4") {
  CHECK(capital_psi_d(SignedPermutation{1}) == cyc({1, 2}));
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : oracle::all_signed(n)) {
      const SignedPermutation d = capital_psi_d(s);
      const SignedPermutation dbar = capital_psi_dbar(s);
      CHECK(oracle::cyclic(d));
      CHECK(oracle::cyclic(dbar));
      CHECK(oracle::negatives(d) % 2 == 0);
      CHECK(oracle::negatives(dbar) % 2 == 1);
      CHECK(capital_phi(d) == s);
      CHECK(capital_phi(dbar) == s);
      CHECK(d != dbar);
      const auto want = oracle::descents(s, n);
      CHECK(oracle::descents(capital_phi(d), n) == want);
    }
  }
}

TEST_CASE("preimage quadruple partitions the fibre of {s, (-1)s}") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : oracle::all_signed(n)) {
      const auto q = preimage_quadruple(s);
      std::set<SignedPermutation> distinct(q.begin(), q.end());
      CHECK(distinct.size() == 4);
      CHECK(oracle::positive_half(q[0]));
      CHECK(oracle::positive_half(q[1]));
      CHECK_FALSE(oracle::positive_half(q[2]));
      CHECK_FALSE(oracle::positive_half(q[3]));
      int in_d = 0;
      for (const auto& p : q) {
        const SignedPermutation image = capital_phi(p);
        CHECK((image == s || image == times_neg1(s)));
        in_d += oracle::negatives(p) % 2 == 0;
      }
      CHECK(in_d == 2);
    }
  }
}

TEST_CASE("exhaustive transfer properties against the oracle") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    std::set<SignedPermutation> images_d, images_dbar, images_plus;
    std::size_t violations = 0;
    std::size_t positive = 0;
    for (const auto& pi : oracle::all_signed(n + 1)) {
      if (!oracle::cyclic(pi)) continue;
      const SignedPermutation s = capital_phi(pi);
      REQUIRE(s.degree() == n);
      CHECK(oracle::descents(s, n) == oracle::descents(pi, n));
      const bool in_d = oracle::negatives(pi) % 2 == 0;
      (in_d ? images_d : images_dbar).insert(s);
      CHECK((in_d ? capital_psi_d(s) : capital_psi_dbar(s)) == pi);
      CHECK(in_positive_half(pi) == oracle::positive_half(pi));
      if (oracle::positive_half(pi)) {
        ++positive;
        TransferTrace trace;
        const SignedPermutation p = phi_plus(pi, &trace);
        CHECK(p == phi_plus(pi));
        violations += trace.violations.size();
        images_plus.insert(p);
        CHECK(psi_plus(p) == pi);
        const int des_gap = static_cast<int>(stats(pi).des - stats(s).des);
        CHECK((des_gap == 0 || des_gap == 1));
      }
    }
    CHECK(violations == 0);
    const std::size_t bn = oracle::all_signed(n).size();
    CHECK(images_d.size() == bn);
    CHECK(images_dbar.size() == bn);
    CHECK(images_plus.size() == bn);
    CHECK(positive == bn);
  }
}

TEST_CASE("trace records snapshots and the initial split") {
  TransferTrace trace;
  phi_plus(cyc({-4, -1, 2, 5, -3, -6, 7}), &trace);
  CHECK(trace.violations.empty());
  CHECK(trace.snapshots_checked > 0);
  CHECK_FALSE(trace.steps.empty());
  CHECK(trace.initial_last_magnitudes == std::vector<int>{4, 1, 2, 6});
}

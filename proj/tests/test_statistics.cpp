#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "sigperm/errors.hpp"
#include "sigperm/statistics.hpp"

using namespace sigperm;

TEST_CASE("descent sets") {
  CHECK(descent_set(SignedPermutation{-3, 1, 2, -5, -4, 6}).members() == std::vector<int>{0, 3});
  CHECK(descent_set(SignedPermutation{2, 5, -6, -1, -3, 7, -4}).members() == std::vector<int>{2, 4, 6});
  CHECK(descent_set(SignedPermutation::identity(5)).members().empty());
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : oracle::all_signed(n)) {
      const auto want = oracle::descents(s, n);
      const auto got = descent_set(s).members();
      CHECK(std::vector<int>(want.begin(), want.end()) == got);
    }
  }
}

TEST_CASE("truncated descent sets") {
  CHECK(truncated_descent_set(SignedPermutation{2, 5, -6, -1, -3, 7, -4}, 6).members() ==
        std::vector<int>{2, 4});
  CHECK(truncated_descent_set(SignedPermutation{5, -6, 4, 8, 7, -9, 2, -1, 3}, 8).members() ==
        std::vector<int>{1, 4, 5, 7});
  CHECK(truncated_descent_set(SignedPermutation::identity(4), 3).members().empty());
  CHECK_THROWS_AS(truncated_descent_set(SignedPermutation::identity(4), 2), DomainError);
}

TEST_CASE("statistic records") {
  CHECK(stats(SignedPermutation{-3, 1, 2, -5, -4, 6}) == StatRecord{2, 3, 3, 9});
  CHECK(stats(SignedPermutation::identity(6)) == StatRecord{0, 0, 0, 0});
  CHECK(stats(SignedPermutation{-1}) == StatRecord{1, 0, 1, 1});
  for (const auto& s : oracle::all_signed(4)) {
    const auto d = oracle::descents(s, 4);
    std::int64_t maj = 0;
    for (int i : d) maj += i;
    const StatRecord r = stats(s);
    CHECK(r.des == static_cast<std::int64_t>(d.size()));
    CHECK(r.maj == maj);
    CHECK(r.neg == oracle::negatives(s));
    CHECK(r.fmaj == 2 * maj + r.neg);
    CHECK(stat_value(r, Statistic::fmaj) == r.fmaj);
  }
}

TEST_CASE("des over B_2") {
  std::map<std::int64_t, int> law;
  for (const auto& s : oracle::all_signed(2)) ++law[stats(s).des];
  CHECK(law == std::map<std::int64_t, int>{{0, 1}, {1, 6}, {2, 1}});
}

TEST_CASE("DescentSet validation") {
  CHECK_THROWS_AS(DescentSet(3, 0b1000), DomainError);
  CHECK_THROWS_AS(DescentSet::from_members(3, {3}), DomainError);
  const DescentSet d = DescentSet::from_members(5, {1, 4});
  CHECK(d.size() == 2);
  CHECK(d.sum() == 5);
  CHECK(d.contains(4));
  CHECK_FALSE(d.contains(0));
  CHECK_THROWS_AS(descent_set(SignedPermutation::identity(64)), DomainError);
  CHECK(stats(SignedPermutation::identity(1000)).des == 0);
}

#include <doctest.h>

#include "oracle.hpp"
#include "sigperm/enumeration.hpp"
#include "sigperm/errors.hpp"
#include "sigperm/signed_permutation.hpp"

using namespace sigperm;

TEST_CASE("apply follows the sign rule") {
  const SignedPermutation s{-3, 1, 2, -5, -4, 6};
  CHECK(s.apply(1) == -3);
  CHECK(s.apply(-4) == 5);
  CHECK(SignedPermutation::identity(3).apply(-2) == -2);
  CHECK_THROWS_AS(s.apply(0), DomainError);
  CHECK_THROWS_AS(s.apply(7), DomainError);
  CHECK_THROWS_AS(s.apply(-7), DomainError);
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(SignedPermutation({1, 1}), MalformedNotation);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), MalformedNotation);
  CHECK_THROWS_AS(SignedPermutation({0}), MalformedNotation);
  CHECK_THROWS_AS(SignedPermutation({3, 1}), MalformedNotation);
  CHECK(SignedPermutation{}.degree() == 0);
}

TEST_CASE("compose is right to left") {
  const SignedPermutation pi{1, -3, -2, 5, 6, 4};
  const SignedPermutation sigma{-3, 1, 2, -5, -4, 6};
  CHECK(compose(pi, sigma) == SignedPermutation{2, 1, -3, -6, -5, 4});
  CHECK(compose(SignedPermutation::identity(6), sigma) == sigma);
  CHECK_THROWS_AS(compose(pi, SignedPermutation::identity(5)), DomainError);

  CounterRng rng(11);
  for (int k = 0; k < 20; ++k) {
    const SignedPermutation s = sample({DomainKind::B, 6}, rng);
    CHECK(compose(s, inverse(s)) == SignedPermutation::identity(6));
    for (int i = -6; i <= 6; ++i) {
      if (i != 0) CHECK(compose(s, inverse(s)).apply(i) == i);
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(SignedPermutation{2, 1}) == SignedPermutation{2, 1});
  CHECK(inverse(SignedPermutation{-2, 1}) == SignedPermutation{2, -1});
  CHECK(inverse(SignedPermutation::identity(5)) == SignedPermutation::identity(5));
  for (const auto& s : oracle::all_signed(3)) {
    const SignedPermutation t = inverse(s);
    for (int i = 1; i <= 3; ++i) CHECK(oracle::image(t, oracle::image(s, i)) == i);
  }
}

TEST_CASE("negate_all and times_neg1") {
  CHECK(negate_all(SignedPermutation{5, -6, 4, 8, 7, -9, 2, -1, 3}) ==
        SignedPermutation{-5, 6, -4, -8, -7, 9, -2, 1, -3});
  CHECK(negate_all(SignedPermutation::identity(2)) == SignedPermutation{-1, -2});
  CHECK(times_neg1(SignedPermutation{-1, 2, -6, -3, -5, 4}) == SignedPermutation{1, 2, -6, -3, -5, 4});
  CHECK(times_neg1(SignedPermutation{3, 1, 2}) == SignedPermutation{3, -1, 2});
  for (const auto& s : oracle::all_signed(3)) {
    CHECK(negate_all(negate_all(s)) == s);
    CHECK(times_neg1(times_neg1(s)) == s);
    // (-1)s is composition with [-1,2,...,n] on the left.
    CHECK(times_neg1(s) == compose(SignedPermutation{-1, 2, 3}, s));
  }
}

TEST_CASE("parity_info") {
  CHECK(parity_info(SignedPermutation{1, -3, -2, 5, 6, 4}) == ParityInfo{2, true});
  CHECK(parity_info(SignedPermutation{-3, 1, 2, -5, -4, 6}) == ParityInfo{3, false});
  CHECK(parity_info(SignedPermutation::identity(4)) == ParityInfo{0, true});
  CHECK(parity_info(SignedPermutation{}) == ParityInfo{0, true});
}

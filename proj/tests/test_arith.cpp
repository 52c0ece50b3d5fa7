#include <doctest.h>

#include <random>

#include "dtcert/arith.hpp"

using namespace dtcert;

TEST_CASE("gcd examples") {
  CHECK(gcd(6, 4) == 2);
  CHECK(gcd(3, 7) == 1);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(5, 0) == 5);
  CHECK_THROWS_AS(gcd(0, 0), InvalidInput);
  CHECK_THROWS_AS(gcd(-2, 4), InvalidInput);
}

TEST_CASE("gcd properties") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> d(0, 100000);
  for (int it = 0; it < 2000; ++it) {
    const Int a = d(rng) + 1, b = d(rng), c = d(rng) + 1;
    CHECK(gcd(a, b) == gcd(b, a));
    CHECK(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)));
    CHECK(gcd(a, 0) == a);
    CHECK(a % gcd(a, b) == 0);
    CHECK(b % gcd(a, b) == 0);
  }
}

TEST_CASE("triple validation keeps order") {
  const Triple t(7, 3, 2);
  CHECK(t.p() == 7);
  CHECK(t.r() == 2);
  CHECK(t.sorted() == Triple(2, 3, 7));
  CHECK_FALSE(t.is_strictly_increasing());
  CHECK_THROWS_AS(Triple(1, 3, 7), InvalidInput);
  CHECK(t.to_string() == "(7,3,2)");
}

TEST_CASE("pairwise coprime") {
  CHECK(is_pairwise_coprime({2, 3, 7}));
  CHECK_FALSE(is_pairwise_coprime({2, 4, 7}));
  CHECK(is_pairwise_coprime({3, 5, 7}));
  CHECK_FALSE(is_pairwise_coprime({3, 5, 9}));
}

TEST_CASE("quarter genus parity") {
  CHECK(quarter_genus_is_odd(3, 7));
  CHECK(quarter_genus_is_odd(3, 11));
  CHECK_FALSE(quarter_genus_is_odd(3, 5));
  CHECK_FALSE(quarter_genus_is_odd(5, 7));
  CHECK(quarter_genus_is_odd(7, 11));

  CHECK_THROWS_AS(quarter_genus_is_odd(4, 7), PreconditionError);
  CHECK_THROWS_AS(quarter_genus_is_odd(3, 9), PreconditionError);
  CHECK_THROWS_AS(quarter_genus_is_odd(1, 7), PreconditionError);

  for (Int q = 3; q < 80; q += 2)
    for (Int r = 3; r < 80; r += 2) {
      if (gcd(q, r) != 1) continue;
      CHECK(quarter_genus_is_odd(q, r) == quarter_genus_is_odd(r, q));
    }
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_mul(1 << 20, 1 << 20) == (Int{1} << 40));
  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-8, 2) == -4);
}

#include <doctest.h>

#include <algorithm>
#include <array>

#include "dtcert/milnor_fiber.hpp"
#include "dtcert/torus_knot.hpp"
#include "oracles.hpp"

using namespace dtcert;

TEST_CASE("milnor number") {
  CHECK(milnor_number(2, 3, 5) == 8);
  CHECK(milnor_number(2, 3, 7) == 12);
  CHECK(milnor_number(2, 2, 3) == 2);
  CHECK_THROWS_AS(milnor_number(1, 3, 5), PreconditionError);
}

TEST_CASE("lattice count examples") {
  CHECK(brieskorn_count(2, 2, 3) == LatticeCount{0, 2, 0});
  CHECK(brieskorn_count(2, 3, 5) == LatticeCount{0, 8, 0});
  CHECK(brieskorn_count(2, 3, 7) == LatticeCount{2, 10, 0});
}

TEST_CASE("frozen values from a rational brute-force enumeration") {
  // Computed offline by enumerating i/p + j/q + k/r with exact fractions.
  CHECK(brieskorn_count(2, 3, 11) == LatticeCount{2, 18, 0});
  CHECK(brieskorn_count(2, 7, 11) == LatticeCount{10, 50, 0});
  CHECK(brieskorn_count(3, 4, 5) == LatticeCount{4, 20, 0});
  CHECK(brieskorn_count(4, 6, 9) == LatticeCount{26, 92, 2});
  CHECK(brieskorn_count(3, 3, 3) == LatticeCount{0, 6, 2});
  CHECK(brieskorn_count(2, 4, 6) == LatticeCount{2, 13, 0});
  CHECK(brieskorn_count(2, 2, 2) == LatticeCount{0, 1, 0});
}

TEST_CASE("fast count matches exhaustive enumeration") {
  for (Int p = 2; p <= 7; ++p)
    for (Int q = p; q <= 10; ++q)
      for (Int r = q; r <= 14; ++r) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        CHECK(brieskorn_count(p, q, r) == oracle::exhaustive_brieskorn(p, q, r));
      }
  CHECK(brieskorn_count(5, 12, 31) == oracle::exhaustive_brieskorn(5, 12, 31));
  CHECK(brieskorn_count(6, 10, 15) == oracle::exhaustive_brieskorn(6, 10, 15));
}

TEST_CASE("count is symmetric and independent of the thread split") {
  const std::array<Int, 3> base{5, 8, 13};
  auto perm = base;
  const LatticeCount ref = brieskorn_count(base[0], base[1], base[2]);
  do {
    CHECK(brieskorn_count(perm[0], perm[1], perm[2]) == ref);
    CHECK(invariants(perm[0], perm[1], perm[2]) == invariants(base[0], base[1], base[2]));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (unsigned jobs : {1u, 2u, 3u, 8u, 64u}) {
    CHECK(brieskorn_count(37, 41, 1001, jobs) == brieskorn_count(37, 41, 1001, 1));
  }
}

TEST_CASE("counts sum to the Milnor number; coprime triples have nullity 0") {
  for (Int p = 2; p <= 9; ++p)
    for (Int q = p; q <= 15; ++q)
      for (Int r = q; r <= 30; r += 3) {
        const auto c = brieskorn_count(p, q, r);
        CHECK(c.sigma_plus + c.sigma_minus + c.nullity == milnor_number(p, q, r));
        if (is_pairwise_coprime({p, q, r})) CHECK(c.nullity == 0);
      }
}

TEST_CASE("assembled invariants") {
  const auto e8 = invariants(2, 3, 5);
  CHECK(e8.mu == 8);
  CHECK(e8.sigma == -8);
  CHECK(e8.b_plus() == 0);
  CHECK(e8.b_minus() == 8);
  CHECK(e8.d3 == Rational(3, 2));

  const auto m237 = invariants(2, 3, 7);
  CHECK(m237.mu == 12);
  CHECK(m237.sigma == -8);
  CHECK(m237.b_plus() == 2);
  CHECK(m237.d3 == Rational(-1, 2));

  const auto m223 = invariants(2, 2, 3);
  CHECK(m223.mu == 2);
  CHECK(m223.sigma == -2);
  CHECK(m223.b_plus() == 0);

  CHECK(invariants(Triple(7, 3, 2)) == m237);
}

TEST_CASE("d3 is a half-integer for coprime triples") {
  for (Int q = 3; q < 40; q += 2)
    for (Int r = q + 2; r < 40; r += 2) {
      if (gcd(q, r) != 1) continue;
      const Rational twice = invariants(2, q, r).d3 * 2;
      CHECK(denominator(twice) == 1);
      CHECK(denominator(invariants(2, q, r).d3) == 2);
    }
}

TEST_CASE("b+ via genus and signature") {
  CHECK(b_plus_via_lemma(3, 7) == 2);
  CHECK(b_plus_via_lemma(3, 5) == 0);
  CHECK(b_plus_via_lemma(3, 11) == 2);
  CHECK(b_plus_via_lemma(3, 11) % 4 == 2);
  CHECK(b_plus_via_lemma(3, 11, SignatureMethod::seifert) == 2);
  CHECK_THROWS_AS(b_plus_via_lemma(3, 9), PreconditionError);
  CHECK_THROWS_AS(b_plus_via_lemma(2, 7), PreconditionError);
}

TEST_CASE("lattice b+ agrees with genus + signature/2 and sigma is divisible by 8") {
  for (Int q = 3; q <= 45; q += 2)
    for (Int r = q + 2; r <= 45; r += 2) {
      if (gcd(q, r) != 1) continue;
      const auto inv = invariants(2, q, r);
      CHECK(inv.mu == 2 * slice_genus(q, r));
      CHECK(inv.sigma_plus == b_plus_via_lemma(q, r));
      CHECK(inv.sigma % 8 == 0);
    }
}

TEST_CASE("canonical spin^c hypothesis") {
  CHECK(is_spin_with_canonical_spinc(2, 3, 7));
  CHECK(is_spin_with_canonical_spinc(3, 4, 5));
  CHECK(is_spin_with_canonical_spinc(2, 2, 3));
}

TEST_CASE("large exponents stay exact") {
  const auto c = brieskorn_count(2, 10007, 10009);
  CHECK(c.sigma_plus + c.sigma_minus + c.nullity == milnor_number(2, 10007, 10009));
  CHECK(c.nullity == 0);
  CHECK((c.sigma_plus - c.sigma_minus) % 8 == 0);
}

#include <doctest.h>

#include <random>

#include "dtcert/signature.hpp"
#include "oracles.hpp"

using namespace dtcert;

TEST_CASE("signature of small fixed matrices") {
  const auto id = symmetric_signature(IntMatrix::Identity(3, 3));
  CHECK(id == SignatureResult{3, 0, 3, 0});

  const auto zero = symmetric_signature(IntMatrix::Zero(2, 2));
  CHECK(zero == SignatureResult{0, 2, 0, 0});

  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  CHECK(symmetric_signature(h) == SignatureResult{0, 0, 1, 1});

  const auto empty = symmetric_signature(IntMatrix(0, 0));
  CHECK(empty.dimension() == 0);
}

TEST_CASE("hyperbolic step inside a larger block") {
  // Zero diagonal throughout; the pivot must come from an off-diagonal pair.
  IntMatrix m(4, 4);
  m << 0, 2, 0, 0,
       2, 0, 3, 0,
       0, 3, 0, 1,
       0, 0, 1, 0;
  const auto s = symmetric_signature(m);
  CHECK(s == oracle::float_signature(m));
  CHECK(s.nullity == 0);
  CHECK(s.signature == 0);
}

TEST_CASE("non-symmetric or non-square input is rejected") {
  IntMatrix m(2, 2);
  m << 1, 2, 3, 4;
  CHECK_THROWS_AS(symmetric_signature(m), InvalidInput);
  CHECK_THROWS_AS(symmetric_signature(IntMatrix::Zero(2, 3)), InvalidInput);
}

TEST_CASE("E8 form is negative definite") {
  // Negative E8 lattice (Dynkin diagram with branch at node 2).
  IntMatrix e8 = IntMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) e8(i, i) = -2;
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
  for (auto [a, b] : edges) e8(a, b) = e8(b, a) = 1;
  CHECK(symmetric_signature(e8) == SignatureResult{-8, 0, 0, 8});
  CHECK(oracle::exact_determinant(e8) == 1);
}

TEST_CASE("random symmetric matrices agree with floating eigenvalues") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 9);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.5);
  for (int it = 0; it < 400; ++it) {
    const int n = size(rng);
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = sparse(rng) ? 0 : entry(rng);
    // Rank-deficient cases: duplicate a row/column now and then.
    if (n > 2 && it % 5 == 0) {
      m.row(n - 1) = m.row(0);
      m.col(n - 1) = m.col(0);
    }
    const auto exact = symmetric_signature(m);
    CHECK(exact.dimension() == n);
    CHECK(exact.signature == exact.positive_count - exact.negative_count);
    CHECK(exact == oracle::float_signature(m, 1e-6));
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int it = 0; it < 100; ++it) {
    const int n = 6;
    IntMatrix m(n, n), p = IntMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) p(i, j) = entry(rng);  // unipotent, invertible
    const IntMatrix congruent = p.transpose() * m * p;
    CHECK(symmetric_signature(congruent) == symmetric_signature(m));
  }
}

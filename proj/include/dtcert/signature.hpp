#pragma once

// Exact signature of symmetric matrices by congruence diagonalization.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "dtcert/arith.hpp"

namespace dtcert {

/// Exact rational scalar. Expression templates are off so that the type
/// composes with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

struct SignatureResult {
  Int signature = 0;
  Int nullity = 0;
  Int positive_count = 0;
  Int negative_count = 0;

  Int dimension() const { return positive_count + negative_count + nullity; }
  friend bool operator==(const SignatureResult&, const SignatureResult&) = default;
};

namespace detail {

template <typename Scalar>
int sign_of(const Scalar& x) {
  return x > Scalar(0) ? 1 : (x < Scalar(0) ? -1 : 0);
}

// Pivot choice: the leading diagonal entry when it is nonzero (keeps banded
// input banded), otherwise the nonzero diagonal entry of smallest magnitude.
template <typename Scalar>
Eigen::Index pick_diagonal_pivot(const DenseMatrix<Scalar>& a, Eigen::Index from) {
  if (a(from, from) != Scalar(0)) return from;
  Eigen::Index best = -1;
  for (Eigen::Index i = from + 1; i < a.rows(); ++i) {
    if (a(i, i) == Scalar(0)) continue;
    if (best < 0 || abs(a(i, i)) < abs(a(best, best))) best = i;
  }
  return best;
}

template <typename Scalar>
void swap_symmetric(DenseMatrix<Scalar>& a, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  a.col(i).swap(a.col(j));
}

}  // namespace detail

/// Counts positive, negative and zero entries of a diagonal matrix congruent
/// to `m` over the field `Field`. All arithmetic is exact; `Field` must be an
/// ordered field (the default is GMP rationals).
///
/// When every remaining diagonal entry vanishes but some off-diagonal entry
/// a(i,j) does not, adding row/column j to row/column i produces the nonzero
/// pivot a(i,i) = 2 a(i,j) (hyperbolic-pair step).
template <typename Field = Rational, typename Derived>
SignatureResult symmetric_signature(const Eigen::MatrixBase<Derived>& m) {
  using Index = Eigen::Index;
  if (m.rows() != m.cols()) throw InvalidInput("symmetric_signature: matrix is not square");
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw InvalidInput("symmetric_signature: matrix is not symmetric");

  DenseMatrix<Field> a = m.template cast<Field>();
  SignatureResult out;
  Index k = 0;
  while (k < n) {
    Index pivot = detail::pick_diagonal_pivot(a, k);
    if (pivot < 0) {
      Index pi = -1, pj = -1;
      for (Index i = k; i < n && pi < 0; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (a(i, j) != Field(0)) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // trailing block is zero
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    detail::swap_symmetric(a, k, pivot);

    const Field d = a(k, k);
    std::vector<Index> support;
    for (Index i = k + 1; i < n; ++i)
      if (a(i, k) != Field(0)) support.push_back(i);
    // Schur complement update, restricted to rows and columns where column k is nonzero.
    for (std::size_t x = 0; x < support.size(); ++x) {
      const Index i = support[x];
      const Field f = a(i, k) / d;
      for (std::size_t y = 0; y <= x; ++y) {
        const Index j = support[y];
        a(i, j) -= f * a(j, k);
        if (j != i) a(j, i) = a(i, j);
      }
    }
    for (Index i : support) {
      a(i, k) = Field(0);
      a(k, i) = Field(0);
    }

    if (detail::sign_of(d) > 0)
      ++out.positive_count;
    else
      ++out.negative_count;
    ++k;
  }
  out.nullity = n - out.positive_count - out.negative_count;
  out.signature = out.positive_count - out.negative_count;
  return out;
}

}  // namespace dtcert

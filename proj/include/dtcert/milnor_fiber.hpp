#pragma once

// Intersection-form data of the Brieskorn-Pham Milnor fiber
//   M_c(p,q,r) = {x^p + y^q + z^r = eps} ∩ B^6
// from the classical lattice-point count, and the d3 invariant of the
// canonical contact structure on its boundary.

#include "dtcert/arith.hpp"
#include "dtcert/signature.hpp"

namespace dtcert {

/// Classification of the points i/p + j/q + k/r (0 < i < p, 0 < j < q, 0 < k < r).
struct LatticeCount {
  Int sigma_plus = 0;   // fractional part mod 2 in (0,1)
  Int sigma_minus = 0;  // fractional part mod 2 in (1,2)
  Int nullity = 0;      // the sum is an integer

  friend bool operator==(const LatticeCount&, const LatticeCount&) = default;
};

struct MilnorInvariants {
  Int mu = 0;
  Int sigma_plus = 0;
  Int sigma_minus = 0;
  Int nullity = 0;
  Int sigma = 0;
  Rational d3;

  Int b_plus() const { return sigma_plus; }
  Int b_minus() const { return sigma_minus; }

  friend bool operator==(const MilnorInvariants&, const MilnorInvariants&) = default;
};

enum class SignatureMethod { count, seifert };

/// (p-1)(q-1)(r-1).
Int milnor_number(Int p, Int q, Int r);

/// Lattice count in O(min(p,q,r) * log) time. `jobs > 1` splits the outer
/// index range across threads; the result does not depend on `jobs`.
LatticeCount brieskorn_count(Int p, Int q, Int r, unsigned jobs = 1);

MilnorInvariants invariants(Int p, Int q, Int r, unsigned jobs = 1);
inline MilnorInvariants invariants(const Triple& t, unsigned jobs = 1) { return invariants(t.p(), t.q(), t.r(), jobs); }

/// -sigma/4 - b_plus - 1/2 for an almost-complex filling with the given data.
Rational d3_of_filling(Int sigma, Int b_plus);

/// b+(M_c(2,q,r)) as g(T(q,r)) + sigma(T(q,r))/2 for odd coprime q, r >= 3.
Int b_plus_via_lemma(Int q, Int r, SignatureMethod method = SignatureMethod::count);

/// The canonical bundle of a Milnor fiber is trivial, so the canonical spin^c
/// structure comes from a spin structure. Always true.
constexpr bool is_spin_with_canonical_spinc(Int /*p*/, Int /*q*/, Int /*r*/) { return true; }

}  // namespace dtcert

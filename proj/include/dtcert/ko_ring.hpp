#pragma once

// KO^0(S^1) = Z[l]/(l^2 - 1, 2l - 2), with l the Moebius line bundle, and the
// framing bookkeeping that separates the mapping torus of a diffeomorphism
// from the product family.

#include <optional>
#include <string>

#include "dtcert/arith.hpp"

namespace dtcert::ko {

/// t*(l-1) + n*1, with t taken mod 2.
class Element {
 public:
  constexpr Element() = default;
  constexpr Element(Int torsion, Int rank) : t_(((torsion % 2) + 2) % 2), n_(rank) {}

  static constexpr Element one() { return {0, 1}; }
  static constexpr Element moebius() { return {1, 1}; }  // l = (l-1) + 1

  constexpr Int torsion() const { return t_; }
  constexpr Int rank() const { return n_; }

  friend constexpr bool operator==(const Element&, const Element&) = default;

 private:
  Int t_ = 0;
  Int n_ = 0;
};

std::string to_string(const Element& x);

/// Stable framing class of a bundle over S^1, an element of Z/2.
struct FramingClass {
  Int c = 0;
  friend constexpr bool operator==(const FramingClass&, const FramingClass&) = default;
};

/// H^+ of the mapping torus of a diffeomorphism acting by -1 on a
/// (4k+2)-dimensional subspace: R^{b+ - 4k - 2} ⊕ l^{4k+2}.
struct EigenDecomposition {
  Int b_plus = 0;
  Int k = 0;
};

Element add(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element mul_l(const Element& x);

/// Pullback along the connected double cover S^1 -> S^1, which trivializes l.
Element pullback_double_cover(const Element& x);

/// Effect of changing the stable framing by `delta` on the family invariant:
/// the Thom class twists by l under the nontrivial change.
Element framing_change(const Element& x, FramingClass delta);

/// Framing class separating the pulled-back framing of R^{b+-4k-2} ⊕ (2l)^{2k+1}
/// from the product framing: (2k+1) mod 2.
FramingClass pullback_framing_class(const EigenDecomposition& e);

struct LedgerOutcome {
  /// Set when the -1 eigenspace dimension is not of the form 4k+2.
  std::optional<std::string> failed_hypothesis;
  bool exotic = false;
  Int torsion_pulled_back = 0;
  Int torsion_reframed = 0;

  bool hypotheses_hold() const { return !failed_hypothesis.has_value(); }
};

/// Symbolic replay of the comparison between the pulled-back family and the
/// reframed family, for a -1 eigenspace of dimension `d`.
LedgerOutcome exoticness_ledger(Int d, bool psi0_is_unit);

}  // namespace dtcert::ko

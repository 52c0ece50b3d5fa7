#include "dtcert/ko_ring.hpp"

namespace dtcert::ko {

std::string to_string(const Element& x) {
  return "(" + std::to_string(x.torsion()) + "," + std::to_string(x.rank()) + ")";
}

Element add(const Element& x, const Element& y) {
  return {x.torsion() + y.torsion(), checked_add(x.rank(), y.rank())};
}

// (t1 (l-1) + n1)(t2 (l-1) + n2) = t1 t2 (l-1)^2 + (t1 n2 + t2 n1)(l-1) + n1 n2,
// and (l-1)^2 = -2(l-1) = 0.
Element mul(const Element& x, const Element& y) {
  const Int torsion = (x.torsion() * (y.rank() & 1)) + (y.torsion() * (x.rank() & 1));
  return {torsion, checked_mul(x.rank(), y.rank())};
}

Element mul_l(const Element& x) { return {x.torsion() + (x.rank() & 1), x.rank()}; }

Element pullback_double_cover(const Element& x) { return {0, x.rank()}; }

Element framing_change(const Element& x, FramingClass delta) { return (delta.c & 1) ? mul_l(x) : x; }

FramingClass pullback_framing_class(const EigenDecomposition& e) {
  if (e.k < 0 || e.b_plus < 0 || e.b_plus - 4 * e.k - 2 < 0) {
    throw PreconditionError("pullback_framing_class: need b_plus >= 4k + 2, got b_plus=" + std::to_string(e.b_plus) +
                            " k=" + std::to_string(e.k));
  }
  // One framing f_{2l} on each l ⊕ l summand; each pulls back to a generator of pi_1(SO(2)).
  return {(2 * e.k + 1) % 2};
}

LedgerOutcome exoticness_ledger(Int d, bool psi0_is_unit) {
  LedgerOutcome out;
  if (d < 0) {
    out.failed_hypothesis = "eigenspace dimension is nonnegative";
    return out;
  }
  if (d % 2 != 0) {
    out.failed_hypothesis = "eigenspace dimension is even";
    return out;
  }
  if (d % 4 == 0) {
    out.failed_hypothesis = "eigenspace dimension is not divisible by 4";
    return out;
  }
  const EigenDecomposition split{d, (d - 2) / 4};
  const Int rank = psi0_is_unit ? 1 : 0;

  // The torsion part of the mapping-torus invariant is unknown; the
  // comparison must come out the same for either value.
  bool first = true;
  for (Int t : {Int{0}, Int{1}}) {
    const Element family{t, rank};
    const Element pulled = pullback_double_cover(family);
    const Element reframed = framing_change(pulled, pullback_framing_class(split));
    const bool differs = pulled.torsion() != reframed.torsion();
    if (!first && differs != out.exotic) throw ConsistencyError("exoticness_ledger: torsion-dependent outcome");
    out.exotic = differs;
    out.torsion_pulled_back = pulled.torsion();
    out.torsion_reframed = reframed.torsion();
    first = false;
  }
  return out;
}

}  // namespace dtcert::ko

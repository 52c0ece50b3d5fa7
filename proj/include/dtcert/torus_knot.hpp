#pragma once

// Torus knot invariants: slice genus, and the signature computed both from a
// Seifert matrix of the positive braid closure and from the lattice count of
// the double branched cover.

#include <vector>

#include "dtcert/arith.hpp"
#include "dtcert/signature.hpp"

namespace dtcert {

/// Positive braid word. Letter i stands for the generator crossing strands i and i+1.
class BraidWord {
 public:
  BraidWord(Int strands, std::vector<Int> letters);

  Int strands() const { return strands_; }
  const std::vector<Int>& letters() const { return letters_; }

  /// Number of components of the braid closure.
  Int closure_components() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  Int strands_;
  std::vector<Int> letters_;
};

/// Seifert form of the fiber surface of a positive braid closure, in the basis
/// of loops running between consecutive bands of one column.
struct SeifertMatrix {
  IntMatrix entries;

  Eigen::Index dimension() const { return entries.rows(); }
  IntMatrix symmetrized() const { return entries + entries.transpose(); }
};

/// Dimension ceiling for the Seifert route, measured as 2g = (q-1)(r-1).
inline constexpr Int kDefaultSeifertDimensionLimit = 600;

Int slice_genus(Int q, Int r);

/// (s_1 s_2 ... s_{q-1})^r on q strands.
BraidWord torus_braid(Int q, Int r);

SeifertMatrix seifert_matrix(const BraidWord& b);

Int knot_signature_seifert(Int q, Int r, Int dimension_limit = kDefaultSeifertDimensionLimit);

Int knot_signature_count(Int q, Int r);

}  // namespace dtcert

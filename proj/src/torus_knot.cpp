#include "dtcert/torus_knot.hpp"

#include <algorithm>
#include <numeric>

#include "dtcert/milnor_fiber.hpp"

namespace dtcert {

BraidWord::BraidWord(Int strands, std::vector<Int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw InvalidInput("braid word needs at least 2 strands");
  for (Int g : letters_) {
    if (g < 1 || g > strands_ - 1) {
      throw InvalidInput("braid letter " + std::to_string(g) + " outside [1, " + std::to_string(strands_ - 1) + "]");
    }
  }
}

Int BraidWord::closure_components() const {
  std::vector<Int> perm(static_cast<std::size_t>(strands_));
  std::iota(perm.begin(), perm.end(), Int{0});
  for (Int g : letters_) std::swap(perm[static_cast<std::size_t>(g - 1)], perm[static_cast<std::size_t>(g)]);

  std::vector<bool> seen(perm.size(), false);
  Int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

Int slice_genus(Int q, Int r) {
  if (q < 2 || r < 2) throw PreconditionError("slice_genus: q and r must be at least 2");
  if (gcd(q, r) != 1) throw PreconditionError("slice_genus: q and r must be coprime");
  return checked_mul(q - 1, r - 1) / 2;
}

BraidWord torus_braid(Int q, Int r) {
  if (q < 2 || r < 2) throw PreconditionError("torus_braid: q and r must be at least 2");
  std::vector<Int> letters;
  letters.reserve(static_cast<std::size_t>(checked_mul(q - 1, r)));
  for (Int rep = 0; rep < r; ++rep)
    for (Int g = 1; g < q; ++g) letters.push_back(g);
  return {q, std::move(letters)};
}

namespace {

// A loop on the fiber surface: it leaves the disc stack through band `first`
// of `column` and comes back through the next band `second` of that column.
struct BandLoop {
  Int column;
  std::size_t first;
  std::size_t second;
};

std::vector<BandLoop> band_loops(const BraidWord& b) {
  std::vector<BandLoop> loops;
  for (Int c = 1; c < b.strands(); ++c) {
    std::size_t prev = 0;
    bool have_prev = false;
    for (std::size_t k = 0; k < b.letters().size(); ++k) {
      if (b.letters()[k] != c) continue;
      if (have_prev) loops.push_back({c, prev, k});
      prev = k;
      have_prev = true;
    }
  }
  // Ordered by position in the word, which makes the Seifert form banded.
  std::stable_sort(loops.begin(), loops.end(), [](const BandLoop& x, const BandLoop& y) { return x.first < y.first; });
  return loops;
}

}  // namespace

SeifertMatrix seifert_matrix(const BraidWord& b) {
  if (b.closure_components() != 1) {
    throw UnsupportedInput("seifert_matrix: braid closure has " + std::to_string(b.closure_components()) +
                           " components, only knots are supported");
  }
  const auto loops = band_loops(b);
  const auto n = static_cast<Eigen::Index>(loops.size());
  IntMatrix v = IntMatrix::Zero(n, n);

  // Linking numbers of a loop with the positive push-off of another, for a
  // surface built from positive half-twisted bands. The convention makes
  // the right-handed trefoil have signature -2.
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto& a = loops[static_cast<std::size_t>(x)];
    v(x, x) = -1;
    for (Eigen::Index y = 0; y < n; ++y) {
      const auto& c = loops[static_cast<std::size_t>(y)];
      if (c.column == a.column && c.first == a.second) {
        v(x, y) = 1;
      } else if (c.column == a.column + 1) {
        if (a.first < c.first && c.first < a.second && a.second < c.second) v(x, y) = -1;
        if (c.first < a.first && a.first < c.second && c.second < a.second) v(x, y) = 1;
      }
    }
  }
  return {std::move(v)};
}

Int knot_signature_seifert(Int q, Int r, Int dimension_limit) {
  if (q < 2 || r < 2 || gcd(q, r) != 1) throw PreconditionError("knot_signature_seifert: q, r must be coprime and >= 2");
  const Int dim = checked_mul(q - 1, r - 1);
  if (dim > dimension_limit) {
    throw UnsupportedInput("knot_signature_seifert: Seifert form dimension " + std::to_string(dim) +
                           " exceeds limit " + std::to_string(dimension_limit));
  }
  const SeifertMatrix v = seifert_matrix(torus_braid(q, r));
  return symmetric_signature(v.symmetrized()).signature;
}

Int knot_signature_count(Int q, Int r) {
  if (q < 2 || r < 2 || gcd(q, r) != 1) throw PreconditionError("knot_signature_count: q, r must be coprime and >= 2");
  const LatticeCount c = brieskorn_count(2, q, r);
  return c.sigma_plus - c.sigma_minus;
}

}  // namespace dtcert

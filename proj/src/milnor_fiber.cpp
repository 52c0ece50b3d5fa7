#include "dtcert/milnor_fiber.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <vector>

#include "dtcert/torus_knot.hpp"

namespace dtcert {

namespace {

using Wide = __int128;

Int narrow(Wide x) {
  if (x > static_cast<Wide>(INT64_MAX) || x < static_cast<Wide>(INT64_MIN)) {
    throw std::overflow_error("lattice count does not fit in 64 bits");
  }
  return static_cast<Int>(x);
}

// sum_{t=0}^{n-1} floor((a t + b) / m) for n, a, b >= 0 and m > 0.
template <typename W>
W floor_sum(W n, W m, W a, W b) {
  W ans = 0;
  while (true) {
    if (a >= m) {
      ans += n * (n - 1) / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    const W y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    std::swap(m, a);
  }
  return ans;
}

template <typename W>
W floor_div_w(W a, W b) {
  W q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Number of (j,k) with 1 <= j < b, 1 <= k < c and j*c + k*b <= x.
template <typename W>
W pairs_at_most(W b, W c, W x) {
  auto clip = [&](W j) { return std::clamp<W>(j, 0, b - 1); };
  const W full = clip(floor_div_w<W>(x - b * (c - 1), c));  // rows with every k admissible
  const W some = clip(floor_div_w<W>(x - b, c));            // rows with at least k = 1
  W total = (c - 1) * full;
  if (some > full) total += floor_sum<W>(some - full, b, c, x - some * c);
  return total;
}

// Counts for outer indices i in [i_begin, i_end) of the smallest exponent a.
// Only N < M and N = M are counted: (i,j,k) -> (a-i, b-j, c-k) sends s to
// 3 - s, so #{s > 2} = #{s < 1} and #{s = 2} = #{s = 1}. When the exponents
// are pairwise coprime s is never an integer.
template <typename W>
std::array<Wide, 3> count_range(W a, W b, W c, W i_begin, W i_end, bool coprime) {
  W below = 0, at = 0;
  for (W i = i_begin; i < i_end; ++i) {
    const W rest = b * c * (a - i);  // M - i*b*c, where N = i*b*c + a*(j*c + k*b) and M = a*b*c
    const W lt = pairs_at_most<W>(b, c, floor_div_w<W>(rest - 1, a));
    below += lt;
    if (!coprime && rest % a == 0) at += pairs_at_most<W>(b, c, rest / a) - lt;
  }
  const Wide all = static_cast<Wide>((b - 1) * (c - 1)) * (i_end - i_begin);
  const Wide plus = 2 * static_cast<Wide>(below);
  const Wide null = 2 * static_cast<Wide>(at);
  return {plus, all - plus - null, null};
}

std::array<Wide, 3> count_range_any(Wide a, Wide b, Wide c, Wide lo, Wide hi, bool coprime) {
  // Intermediates are bounded by abc + bc, and inside floor_sum by b^2 c.
  const long double bound = static_cast<long double>(a) * b * c * 3 + static_cast<long double>(b) * b * c;
  if (bound < 9.0e18L) {
    return count_range<Int>(static_cast<Int>(a), static_cast<Int>(b), static_cast<Int>(c), static_cast<Int>(lo),
                            static_cast<Int>(hi), coprime);
  }
  return count_range<Wide>(a, b, c, lo, hi, coprime);
}

}  // namespace

Int milnor_number(Int p, Int q, Int r) {
  if (p < 2 || q < 2 || r < 2) throw PreconditionError("milnor_number: exponents must be at least 2");
  return checked_mul(checked_mul(p - 1, q - 1), r - 1);
}

LatticeCount brieskorn_count(Int p, Int q, Int r, unsigned jobs) {
  if (p < 2 || q < 2 || r < 2) throw PreconditionError("brieskorn_count: exponents must be at least 2");
  // The count is symmetric; iterate the smallest exponent in the outer loop.
  std::array<Int, 3> e{p, q, r};
  std::sort(e.begin(), e.end());
  const Wide a = e[0], b = e[1], c = e[2];
  if (static_cast<long double>(a) * b * c * 3 + static_cast<long double>(b) * b * c > 1e36L) {
    throw std::overflow_error("brieskorn_count: exponents too large");
  }

  const bool coprime = is_pairwise_coprime({e[0], e[1], e[2]});
  const Wide outer = a - 1;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<Wide>(outer, 256))));
  std::vector<std::array<Wide, 3>> parts(jobs);
  if (jobs == 1) {
    parts[0] = count_range_any(a, b, c, 1, a, coprime);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const Wide lo = 1 + outer * w / jobs;
      const Wide hi = 1 + outer * (w + 1) / jobs;
      workers.emplace_back([&, w, lo, hi] { parts[w] = count_range_any(a, b, c, lo, hi, coprime); });
    }
    for (auto& t : workers) t.join();
  }
  Wide plus = 0, minus = 0, null = 0;
  for (const auto& part : parts) {
    plus += part[0];
    minus += part[1];
    null += part[2];
  }
  return {narrow(plus), narrow(minus), narrow(null)};
}

Rational d3_of_filling(Int sigma, Int b_plus) {
  return Rational(-sigma, 4) - Rational(b_plus) - Rational(1, 2);
}

MilnorInvariants invariants(Int p, Int q, Int r, unsigned jobs) {
  const Int mu = milnor_number(p, q, r);
  const LatticeCount c = brieskorn_count(p, q, r, jobs);
  if (c.sigma_plus + c.sigma_minus + c.nullity != mu) {
    throw ConsistencyError("lattice count does not sum to the Milnor number for " + Triple(p, q, r).to_string());
  }
  MilnorInvariants inv;
  inv.mu = mu;
  inv.sigma_plus = c.sigma_plus;
  inv.sigma_minus = c.sigma_minus;
  inv.nullity = c.nullity;
  inv.sigma = c.sigma_plus - c.sigma_minus;
  inv.d3 = d3_of_filling(inv.sigma, inv.sigma_plus);
  return inv;
}

Int b_plus_via_lemma(Int q, Int r, SignatureMethod method) {
  if (q < 3 || r < 3 || q % 2 == 0 || r % 2 == 0 || gcd(q, r) != 1) {
    throw PreconditionError("b_plus_via_lemma: q and r must be odd, coprime and at least 3");
  }
  const Int g = slice_genus(q, r);
  const Int sigma = method == SignatureMethod::count ? knot_signature_count(q, r) : knot_signature_seifert(q, r);
  if (sigma % 2 != 0) {
    throw ConsistencyError("torus knot T(" + std::to_string(q) + "," + std::to_string(r) + ") has odd signature " +
                           std::to_string(sigma));
  }
  return g + sigma / 2;
}

}  // namespace dtcert

#include "dtcert/arith.hpp"

#include <algorithm>

namespace dtcert {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Triple::Triple(Int p, Int q, Int r) : v_{p, q, r} {
  if (p < 2 || q < 2 || r < 2) {
    throw InvalidInput("triple exponents must be at least 2, got (" + std::to_string(p) + "," +
                       std::to_string(q) + "," + std::to_string(r) + ")");
  }
}

Triple Triple::sorted() const {
  auto s = v_;
  std::sort(s.begin(), s.end());
  return {s[0], s[1], s[2]};
}

std::string Triple::to_string() const {
  return "(" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," + std::to_string(v_[2]) + ")";
}

Int gcd(Int a, Int b) {
  if (a < 0 || b < 0) throw InvalidInput("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw InvalidInput("gcd: both arguments are zero");
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_pairwise_coprime(const Triple& t) {
  return gcd(t.p(), t.q()) == 1 && gcd(t.q(), t.r()) == 1 && gcd(t.p(), t.r()) == 1;
}

bool quarter_genus_is_odd(Int q, Int r) {
  if (q < 3 || r < 3) throw PreconditionError("quarter_genus_is_odd: q and r must be at least 3");
  if (q % 2 == 0 || r % 2 == 0) throw PreconditionError("quarter_genus_is_odd: q and r must be odd");
  if (gcd(q, r) != 1) throw PreconditionError("quarter_genus_is_odd: q and r must be coprime");
  const Int quarter = checked_mul(q - 1, r - 1) / 4;
  return quarter % 2 == 1;
}

}  // namespace dtcert

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtcert {

using Int = std::int64_t;

/// Input outside the documented domain of an operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside what the algorithm supports.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Checked 64-bit arithmetic. Throws std::overflow_error on wrap.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Floor division for any sign of the numerator; the divisor must be positive.
Int floor_div(Int a, Int b);

/// Exponent triple (p,q,r) of the Brieskorn-Pham polynomial x^p + y^q + z^r.
/// Order is kept as given.
class Triple {
 public:
  Triple(Int p, Int q, Int r);

  Int p() const { return v_[0]; }
  Int q() const { return v_[1]; }
  Int r() const { return v_[2]; }
  const std::array<Int, 3>& values() const { return v_; }

  /// The same exponents in ascending order.
  Triple sorted() const;
  bool is_strictly_increasing() const { return v_[0] < v_[1] && v_[1] < v_[2]; }

  std::string to_string() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<Int, 3> v_;
};

Int gcd(Int a, Int b);

bool is_pairwise_coprime(const Triple& t);

/// Whether (q-1)(r-1)/4 is odd. Requires q, r odd, coprime and at least 3.
bool quarter_genus_is_odd(Int q, Int r);

}  // namespace dtcert

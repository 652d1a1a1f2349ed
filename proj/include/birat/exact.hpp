#ifndef BIRAT_EXACT_HPP
#define BIRAT_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace birat {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Thrown when two values that must share a point configuration do not.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input that violates a documented precondition.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An invariant the mathematics guarantees was observed to fail.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

}  // namespace checked

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Int>>;

RationalMatrix to_rational(const IntMatrix& m);

// Inertia (positive, negative, zero) of a symmetric rational matrix, by
// congruence diagonalization.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia symmetric_inertia(RationalMatrix m);

// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m);

int rank(RationalMatrix m);

// Does there exist x >= 0 with columns * x = target?  Columns are the
// generators; solved by an exact two-phase simplex with Bland's rule.
bool in_cone(const std::vector<std::vector<Rational>>& generators,
             const std::vector<Rational>& target);

}  // namespace birat

#endif  // BIRAT_EXACT_HPP

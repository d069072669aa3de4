#pragma once

// Scalar types used across the library.
//
// Every numeric routine is a template over the scalar type. Three scalars are
// instantiated:
//   Rational        exact rational arithmetic (GMP); the default session mode
//   double          float mode, equality against zero uses a tolerance
//   QuadraticSurd   exact arithmetic in Q(sqrt(d)) for a single square-free d,
//                   used to instantiate solution families whose constraints
//                   have irrational roots

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gw/errors.hpp"

namespace gw {

using Rational = mpq_class;
using Integer = mpz_class;

/// Absolute tolerance for float-mode comparisons against zero.
inline constexpr double kDefaultTolerance = 1e-9;

/// Parses "p", "-p" or "p/q". Throws Error(InvalidInput) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// A numeric literal as typed by a user: rationals stay exact, anything with
/// a decimal point or exponent is read as a double.
using NumberLiteral = std::variant<Rational, double>;
NumberLiteral parse_number(std::string_view text);

std::string to_string(const Rational& x);

/// Elements a + b*sqrt(d) with rational a, b and square-free integer d > 1.
/// An element with b == 0 is a plain rational and combines with any radicand.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Rational& r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational a, Rational b, long radicand);

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  long radicand() const { return radicand_; }
  bool is_rational() const { return sgn(surd_) == 0; }
  bool is_zero() const { return sgn(rational_) == 0 && sgn(surd_) == 0; }
  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);

  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).is_zero(); }

 private:
  long common_radicand(const QuadraticSurd& o) const;

  Rational rational_;
  Rational surd_;
  long radicand_ = 1;
};

/// Exact square root of a non-negative rational, as an element of
/// Q(sqrt(d)). Throws Error(InvalidInput) for negative input.
QuadraticSurd sqrt_rational(const Rational& r);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x, double /*tol*/ = 0) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::string str(const Rational& x) { return to_string(x); }
  static int sign(const Rational& x) { return sgn(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return r.get_d(); }
  static bool is_zero(double x, double tol = kDefaultTolerance) { return std::abs(x) < tol; }
  static double to_double(double x) { return x; }
  static std::string str(double x);
  static int sign(double x) { return (x > 0) - (x < 0); }
};

template <>
struct ScalarTraits<QuadraticSurd> {
  static constexpr bool exact = true;
  static QuadraticSurd from_rational(const Rational& r) { return QuadraticSurd(r); }
  static bool is_zero(const QuadraticSurd& x, double /*tol*/ = 0) { return x.is_zero(); }
  static double to_double(const QuadraticSurd& x) { return x.to_double(); }
  static std::string str(const QuadraticSurd& x) { return x.str(); }
  static int sign(const QuadraticSurd& x) { return x.sign(); }
};

template <class S>
S lift(const Rational& r) {
  return ScalarTraits<S>::from_rational(r);
}

/// Relative comparison used in float mode; exact types compare exactly.
template <class S>
bool approx_equal(const S& a, const S& b, double tol = kDefaultTolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return ScalarTraits<S>::is_zero(a - b);
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
  }
}

}  // namespace gw

#pragma once

// Sparse multivariate polynomials with rational coefficients. Variables are
// numbered 0, 1, ...; monomials are ordered lexicographically with variable 0
// most significant, and printed highest term first.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gw/scalar.hpp"

namespace gw {

/// Exponent vector with trailing zeros trimmed, so the constant monomial is
/// the empty vector regardless of how many variables are in play.
using Monomial = std::vector<unsigned>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                    // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Monomial exponents, const Rational& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  unsigned degree() const;
  /// Highest exponent of one variable.
  unsigned degree_in(std::size_t var) const;
  /// Sorted indices of the variables that occur.
  std::vector<std::size_t> variables() const;
  Rational coefficient(const Monomial& m) const;
  /// Coefficient of the lex-greatest term; zero for the zero polynomial.
  Rational leading_coefficient() const;
  /// Divided by its leading coefficient (zero stays zero).
  Polynomial monic() const;
  /// Equal up to a nonzero rational factor.
  bool proportional_to(const Polynomial& other) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial derivative(std::size_t var) const;

  /// values[i] is substituted for variable i; T needs +, * and lift<T>.
  template <class T>
  T evaluate(std::span<const T> values) const;

  /// Variables are printed through labels; missing labels fall back to x<i>.
  std::string str(const std::vector<std::string>& labels = {}) const;

 private:
  TermMap terms_;
};

template <>
struct ScalarTraits<Polynomial> {
  static constexpr bool exact = true;
  static Polynomial from_rational(const Rational& r) { return Polynomial(r); }
  static bool is_zero(const Polynomial& x, double /*tol*/ = 0) { return x.is_zero(); }
  static std::string str(const Polynomial& x) { return x.str(); }
};

template <class T>
T Polynomial::evaluate(std::span<const T> values) const {
  T acc = lift<T>(Rational(0));
  for (const auto& [mono, coeff] : terms_) {
    T term = lift<T>(coeff);
    for (std::size_t v = 0; v < mono.size(); ++v) {
      for (unsigned e = 0; e < mono[v]; ++e) term = term * values[v];
    }
    acc = acc + term;
  }
  return acc;
}

/// Sorted, de-duplicated monic forms; the canonical shape of a constraint set.
std::vector<Polynomial> canonical_constraints(std::vector<Polynomial> polys);

}  // namespace gw

#pragma once

// Compact Lie algebras as structure-constant tensors over a fixed basis.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "gw/matrix.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// One structure constant: [e_a, e_b] has coefficient `value` on e_g.
struct StructureEntry {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t g = 0;
  Rational value;
};

/// Basis triple on which the Jacobi identity fails.
struct JacobiWitness {
  std::size_t a, b, c;
};

class LieAlgebra {
 public:
  template <class S>
  struct Term {
    std::size_t index;
    S value;
  };

  /// Entries may list (a,b) only, or both (a,b) and (b,a); missing partners
  /// are filled by antisymmetry. Throws Error(InvalidAlgebra) if the entries
  /// contradict antisymmetry or the Jacobi identity, and
  /// Error(NotCompactSemisimple) if the ad-trace Gram matrix is not positive
  /// definite.
  LieAlgebra(std::vector<std::string> labels, const std::vector<StructureEntry>& entries);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws Error(InvalidInput) for an unknown label.
  std::size_t index_of(std::string_view label) const;

  /// Nonzero terms of [e_a, e_b].
  template <class S>
  const std::vector<Term<std::conditional_t<std::is_same_v<S, double>, double, Rational>>>& terms(
      std::size_t a, std::size_t b) const {
    if constexpr (std::is_same_v<S, double>) {
      return terms_f_[a * dim() + b];
    } else {
      return terms_[a * dim() + b];
    }
  }

  Rational structure_constant(std::size_t a, std::size_t b, std::size_t g) const;

  /// gram(a,b) = B(e_a, e_b) = -trace(ad e_a o ad e_b), fixed at construction.
  template <class S>
  const Matrix<std::conditional_t<std::is_same_v<S, double>, double, Rational>>& gram() const {
    if constexpr (std::is_same_v<S, double>) {
      return gram_f_;
    } else {
      return gram_;
    }
  }
  const Matrix<Rational>& gram() const { return gram_; }

  /// Nonzero constants with a < b, sorted by (a, b, g).
  std::vector<StructureEntry> structure_entries() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Term<Rational>>> terms_;
  std::vector<std::vector<Term<double>>> terms_f_;
  Matrix<Rational> gram_;
  Matrix<double> gram_f_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// -trace(ad e_a o ad e_b) from the structure constants alone.
Matrix<Rational> killing_gram(const LieAlgebra& algebra);

/// First basis triple violating the Jacobi identity, if any.
std::optional<JacobiWitness> find_jacobi_violation(const LieAlgebra& algebra);

/// so(n) on e_ij = E_ij - E_ji, i < j, in lexicographic order.
/// Throws Error(InvalidDimension) for n < 3.
AlgebraPtr build_so_basis(int n);

/// su(2) on (ih, X_a, Y_a) with [ih, X_a] = Y_a, [ih, Y_a] = -X_a,
/// [X_a, Y_a] = ih.
AlgebraPtr build_su2_basis();

/// Block direct sum; labels get an "@<part number>" suffix (1-based).
/// Throws Error(InvalidInput) on an empty list.
AlgebraPtr build_direct_sum(std::span<const AlgebraPtr> parts);

/// The same algebra on a new basis whose i-th vector has old coordinates
/// rows(i, *). Throws Error(InvalidInput) if the rows are not a basis.
AlgebraPtr change_basis(const LieAlgebra& algebra, const Matrix<Rational>& rows,
                        std::vector<std::string> labels);

std::string so_label(int i, int j, int n);

namespace detail {

template <class S>
bool exactly_zero(const S& x) {
  if constexpr (std::is_same_v<S, double>) {
    return x == 0.0;
  } else if constexpr (std::is_same_v<S, Rational>) {
    return sgn(x) == 0;
  } else {
    return x.is_zero();
  }
}

}  // namespace detail

/// Coefficients over the basis of one particular algebra.
template <class S>
class AlgebraVector {
 public:
  explicit AlgebraVector(AlgebraPtr algebra)
      : algebra_(std::move(algebra)), coeffs_(algebra_->dim(), S(0)) {}

  AlgebraVector(AlgebraPtr algebra, std::vector<S> coeffs)
      : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_->dim()) {
      throw Error(ErrorCode::InvalidInput, "coefficient count " + std::to_string(coeffs_.size()) +
                                               " does not match algebra dimension " +
                                               std::to_string(algebra_->dim()));
    }
  }

  static AlgebraVector basis(AlgebraPtr algebra, std::size_t i) {
    AlgebraVector v(std::move(algebra));
    v.coeffs_.at(i) = S(1);
    return v;
  }

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const S> coeffs() const { return coeffs_; }
  S& operator[](std::size_t i) { return coeffs_[i]; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero(double tol = kDefaultTolerance) const {
    for (const auto& c : coeffs_) {
      if (!ScalarTraits<S>::is_zero(c, tol)) return false;
    }
    return true;
  }

  void require_same_algebra(const AlgebraVector& o) const {
    if (algebra_ != o.algebra_) throw Error(ErrorCode::AlgebraMismatch, "vectors belong to different algebras");
  }

  AlgebraVector& operator+=(const AlgebraVector& o) {
    require_same_algebra(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlgebraVector& operator-=(const AlgebraVector& o) {
    require_same_algebra(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlgebraVector& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const S& s, AlgebraVector a) { return a *= s; }

  friend bool operator==(const AlgebraVector& a, const AlgebraVector& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<S> coeffs_;
};

/// Contraction against the structure tensor. Throws Error(AlgebraMismatch).
template <class S>
AlgebraVector<S> bracket(const AlgebraVector<S>& u, const AlgebraVector<S>& v) {
  u.require_same_algebra(v);
  const LieAlgebra& alg = u.algebra();
  const std::size_t n = alg.dim();
  std::vector<S> out(n, S(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (detail::exactly_zero(u[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (detail::exactly_zero(v[b])) continue;
      const S uv = u[a] * v[b];
      for (const auto& t : alg.terms<S>(a, b)) out[t.index] += uv * S(t.value);
    }
  }
  return AlgebraVector<S>(u.algebra_ptr(), std::move(out));
}

/// B(u, v) through the Gram matrix.
template <class S>
S killing(const AlgebraVector<S>& u, const AlgebraVector<S>& v) {
  u.require_same_algebra(v);
  const auto& g = u.algebra().template gram<S>();
  const std::size_t n = u.size();
  S acc(0);
  for (std::size_t a = 0; a < n; ++a) {
    if (detail::exactly_zero(u[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (detail::exactly_zero(v[b]) || detail::exactly_zero(g(a, b))) continue;
      acc += u[a] * S(g(a, b)) * v[b];
    }
  }
  return acc;
}

/// Converts coefficients between scalar types (exact -> double or exact ->
/// exact extension).
template <class To, class From>
AlgebraVector<To> convert(const AlgebraVector<From>& v) {
  std::vector<To> c;
  c.reserve(v.size());
  for (const auto& x : v.coeffs()) {
    if constexpr (std::is_same_v<To, double>) {
      c.push_back(ScalarTraits<From>::to_double(x));
    } else {
      c.push_back(To(x));
    }
  }
  return AlgebraVector<To>(v.algebra_ptr(), std::move(c));
}

}  // namespace gw

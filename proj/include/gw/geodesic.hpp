#pragma once

// Invariant metrics, the geodesic-vector criterion, the linear system for
// the k-component of a geodesic vector, and the rank test for its solvability.

#include <array>
#include <optional>
#include <vector>

#include "gw/decomposition.hpp"
#include "gw/polynomial.hpp"

namespace gw {

/// <x, y> = l1 B|m1 + l2 B|m2 + l3 B|m3. Float metrics are converted to
/// rationals exactly (every double is a dyadic rational).
class InvariantMetric {
 public:
  /// Throws Error(InvalidMetric) unless every lambda is positive.
  InvariantMetric(Rational l1, Rational l2, Rational l3);

  const Rational& lambda(int i) const { return lambda_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<Rational, 3>& lambdas() const { return lambda_; }
  bool is_standard() const { return lambda_[0] == lambda_[1] && lambda_[1] == lambda_[2]; }
  std::string str() const;

  friend bool operator==(const InvariantMetric& a, const InvariantMetric& b) { return a.lambda_ == b.lambda_; }

 private:
  std::array<Rational, 3> lambda_;
};

/// The associated operator: multiplication by l_i on m_i, zero on k.
template <class S>
AlgebraVector<S> apply_metric(const AlgebraVector<S>& v, const InvariantMetric& g, const SpaceDescriptor& d) {
  if (v.algebra_ptr() != d.algebra_ptr()) {
    throw Error(ErrorCode::AlgebraMismatch, "vector is not over the algebra of space " + d.name());
  }
  AlgebraVector<S> out(v.algebra_ptr());
  for (int i = 1; i <= 3; ++i) {
    const S l = lift<S>(g.lambda(i));
    for (std::size_t idx : d.indices(static_cast<Part>(static_cast<int>(Part::m1) + i - 1))) out[idx] = l * v[idx];
  }
  return out;
}

/// Sum of l_i B(proj_i u, proj_i v); k-components do not contribute.
template <class S>
S inner_product(const AlgebraVector<S>& u, const AlgebraVector<S>& v, const InvariantMetric& g,
                const SpaceDescriptor& d) {
  u.require_same_algebra(v);
  if (u.algebra_ptr() != d.algebra_ptr()) {
    throw Error(ErrorCode::AlgebraMismatch, "vector is not over the algebra of space " + d.name());
  }
  const auto& gram = d.algebra().template gram<S>();
  S acc = lift<S>(Rational(0));
  for (int i = 1; i <= 3; ++i) {
    const auto& idx = d.indices(static_cast<Part>(static_cast<int>(Part::m1) + i - 1));
    S block = lift<S>(Rational(0));
    for (std::size_t a : idx) {
      if (detail::exactly_zero(u[a])) continue;
      for (std::size_t b : idx) {
        if (detail::exactly_zero(v[b]) || detail::exactly_zero(gram(a, b))) continue;
        block = block + u[a] * S(gram(a, b)) * v[b];
      }
    }
    acc = acc + lift<S>(g.lambda(i)) * block;
  }
  return acc;
}

/// True when some k-coordinate is nonzero (inner products ignore it).
template <class S>
bool has_k_component(const AlgebraVector<S>& v, const SpaceDescriptor& d) {
  for (std::size_t i : d.indices(Part::k)) {
    if (!detail::exactly_zero(v[i])) return true;
  }
  return false;
}

/// r_e(X) = <[X, e]_m, X_m> for each m-basis vector e, in Part::m order.
/// No zero check; usable with polynomial coefficients.
template <class S>
std::vector<S> geodesic_residuals(const AlgebraVector<S>& x, const InvariantMetric& g, const SpaceDescriptor& d) {
  const AlgebraVector<S> xm = project(x, d, Part::m);
  std::vector<S> out;
  out.reserve(d.indices(Part::m).size());
  for (std::size_t e : d.indices(Part::m)) {
    const auto be = bracket(x, AlgebraVector<S>::basis(x.algebra_ptr(), e));
    out.push_back(inner_product(be, xm, g, d));
  }
  return out;
}

template <class S>
struct GeodesicCheck {
  bool geodesic = false;
  std::vector<S> residuals;
};

/// Throws Error(ZeroVector).
template <class S>
GeodesicCheck<S> is_geodesic_vector(const AlgebraVector<S>& x, const InvariantMetric& g, const SpaceDescriptor& d,
                                    double tol = kDefaultTolerance) {
  if (x.is_zero(tol)) throw Error(ErrorCode::ZeroVector, "geodesic vectors are nonzero");
  GeodesicCheck<S> out;
  out.residuals = geodesic_residuals(x, g, d);
  out.geodesic = true;
  for (const auto& r : out.residuals) {
    if (!ScalarTraits<S>::is_zero(r, tol)) out.geodesic = false;
  }
  return out;
}

/// A x_k = b for the k-coordinates x_k of a geodesic vector x_k + x_m.
template <class S>
struct GeodesicSystem {
  Matrix<S> a;
  std::vector<S> b;
  /// Basis indices of the m-vectors labelling the rows, in Part::m order.
  std::vector<std::size_t> rows;
  /// Basis indices of k labelling the columns.
  std::vector<std::size_t> cols;
};

namespace detail {

template <class S>
void require_m_vector(const AlgebraVector<S>& xm, const SpaceDescriptor& d, double tol) {
  if (xm.algebra_ptr() != d.algebra_ptr()) {
    throw Error(ErrorCode::AlgebraMismatch, "vector is not over the algebra of space " + d.name());
  }
  for (std::size_t i : d.indices(Part::k)) {
    if (!ScalarTraits<S>::is_zero(xm[i], tol)) {
      throw Error(ErrorCode::SupportViolation, "x_m has a nonzero k-coordinate " + d.algebra().label(i));
    }
  }
  if (xm.is_zero(tol)) throw Error(ErrorCode::ZeroVector, "x_m must be nonzero");
}

}  // namespace detail

/// Row e: sum_i x_i <[e_i, e]_m, x_m> = -<[x_m, e]_m, x_m>, multiplied by -1
/// so that the matrix carries the leading minus sign.
/// Throws Error(ZeroVector) or Error(SupportViolation).
template <class S>
GeodesicSystem<S> assemble_system(const AlgebraVector<S>& xm, const InvariantMetric& g, const SpaceDescriptor& d,
                                  double tol = kDefaultTolerance) {
  detail::require_m_vector(xm, d, tol);
  GeodesicSystem<S> sys;
  sys.rows = d.indices(Part::m);
  sys.cols = d.indices(Part::k);
  sys.a = Matrix<S>(sys.rows.size(), sys.cols.size());
  sys.b.reserve(sys.rows.size());
  const AlgebraPtr& alg = xm.algebra_ptr();
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto e = AlgebraVector<S>::basis(alg, sys.rows[r]);
    for (std::size_t c = 0; c < sys.cols.size(); ++c) {
      const auto be = bracket(AlgebraVector<S>::basis(alg, sys.cols[c]), e);
      sys.a(r, c) = -inner_product(be, xm, g, d);
    }
    sys.b.push_back(inner_product(bracket(xm, e), xm, g, d));
  }
  return sys;
}

template <class S>
struct Completion {
  GeodesicSystem<S> system;
  std::size_t rank_a = 0;
  std::size_t rank_ab = 0;
  /// x_k as a full algebra vector; present iff rank_a == rank_ab.
  std::optional<AlgebraVector<S>> xk;
};

/// Exact: Bareiss ranks and the echelon solution with free variables zero.
/// Throws Error(ZeroVector) or Error(SupportViolation).
Completion<Rational> completion_exists(const AlgebraVector<Rational>& xm, const InvariantMetric& g,
                                       const SpaceDescriptor& d);

/// Float: SVD ranks and the minimum-norm solution.
Completion<double> completion_exists(const AlgebraVector<double>& xm, const InvariantMetric& g,
                                     const SpaceDescriptor& d, double tol = kDefaultTolerance);

struct Prop13Result {
  /// [a + x, Lx] lies in k.
  bool bracket_in_k = false;
  /// <[a, x], y> = <x, [x, y]_m> for every m-basis vector y.
  bool transport = false;
  /// <[a + x, y]_m, x> = 0 for every m-basis vector y.
  bool geodesic = false;
  bool agree() const { return bracket_in_k == transport && transport == geodesic; }
};

/// Throws Error(SupportViolation) if a is not in k or x not in m, and
/// Error(ZeroVector) for x = 0.
template <class S>
Prop13Result check_prop13(const AlgebraVector<S>& a, const AlgebraVector<S>& x, const InvariantMetric& g,
                          const SpaceDescriptor& d, double tol = kDefaultTolerance) {
  detail::require_m_vector(x, d, tol);
  a.require_same_algebra(x);
  for (std::size_t i : d.indices(Part::m)) {
    if (!ScalarTraits<S>::is_zero(a[i], tol)) {
      throw Error(ErrorCode::SupportViolation, "a has a nonzero m-coordinate " + d.algebra().label(i));
    }
  }
  const AlgebraVector<S> ax = a + x;
  Prop13Result out;
  out.bracket_in_k = project(bracket(ax, apply_metric(x, g, d)), d, Part::m).is_zero(tol);
  out.transport = true;
  out.geodesic = true;
  const AlgebraVector<S> a_x = bracket(a, x);
  for (std::size_t e : d.indices(Part::m)) {
    const auto y = AlgebraVector<S>::basis(x.algebra_ptr(), e);
    const S lhs = inner_product(a_x, y, g, d);
    const S rhs = inner_product(x, project(bracket(x, y), d, Part::m), g, d);
    if (!ScalarTraits<S>::is_zero(lhs - rhs, tol)) out.transport = false;
    if (!ScalarTraits<S>::is_zero(inner_product(bracket(ax, y), x, g, d), tol)) out.geodesic = false;
  }
  return out;
}

/// The residuals r_e as polynomials in all basis coordinates of g
/// (variable i is the coefficient of basis vector i).
std::vector<Polynomial> residual_polynomials(const SpaceDescriptor& d, const InvariantMetric& g);

}  // namespace gw

#include "gw/geodesic.hpp"

#include "gw/exact_linalg.hpp"
#include "gw/float_linalg.hpp"

namespace gw {

InvariantMetric::InvariantMetric(Rational l1, Rational l2, Rational l3) : lambda_{std::move(l1), std::move(l2), std::move(l3)} {
  for (auto& l : lambda_) {
    l.canonicalize();
    if (sgn(l) <= 0) throw Error(ErrorCode::InvalidMetric, "metric parameters must be positive, got " + to_string(l));
  }
}

std::string InvariantMetric::str() const {
  return to_string(lambda_[0]) + "," + to_string(lambda_[1]) + "," + to_string(lambda_[2]);
}

namespace {

template <class S>
void round_trip(const Completion<S>& c, const AlgebraVector<S>& xm, const InvariantMetric& g, const SpaceDescriptor& d,
                double tol) {
#ifdef GW_ROUND_TRIP_CHECKS
  if (!c.xk) return;
  // Float solutions carry rounding of order tol * |A| * |x_k|; scale the test accordingly.
  double check_tol = tol;
  if constexpr (!ScalarTraits<S>::exact) {
    double mag = 1;
    for (double v : xm.coeffs()) mag = std::max(mag, std::abs(v));
    for (double v : c.xk->coeffs()) mag = std::max(mag, std::abs(v));
    check_tol = tol * mag * mag * 10;
  }
  if (!is_geodesic_vector(*c.xk + xm, g, d, check_tol).geodesic) {
    throw Error(ErrorCode::Internal, "completion of x_m does not pass the geodesic criterion");
  }
#else
  (void)c;
  (void)xm;
  (void)g;
  (void)d;
  (void)tol;
#endif
}

}  // namespace

Completion<Rational> completion_exists(const AlgebraVector<Rational>& xm, const InvariantMetric& g,
                                       const SpaceDescriptor& d) {
  Completion<Rational> out;
  out.system = assemble_system(xm, g, d);
  const auto r = bareiss_solve(out.system.a, out.system.b);
  out.rank_a = r.rank_a;
  out.rank_ab = r.rank_ab;
  if (r.solution) {
    AlgebraVector<Rational> xk(xm.algebra_ptr());
    for (std::size_t c = 0; c < out.system.cols.size(); ++c) xk[out.system.cols[c]] = (*r.solution)[c];
    out.xk = std::move(xk);
  }
  round_trip(out, xm, g, d, 0);
  return out;
}

Completion<double> completion_exists(const AlgebraVector<double>& xm, const InvariantMetric& g,
                                     const SpaceDescriptor& d, double tol) {
  Completion<double> out;
  out.system = assemble_system(xm, g, d, tol);
  const auto r = svd_solve(out.system.a, out.system.b, tol);
  out.rank_a = r.rank_a;
  out.rank_ab = r.rank_ab;
  if (r.solution) {
    AlgebraVector<double> xk(xm.algebra_ptr());
    for (std::size_t c = 0; c < out.system.cols.size(); ++c) xk[out.system.cols[c]] = (*r.solution)[c];
    out.xk = std::move(xk);
  }
  round_trip(out, xm, g, d, tol);
  return out;
}

std::vector<Polynomial> residual_polynomials(const SpaceDescriptor& d, const InvariantMetric& g) {
  const std::size_t n = d.algebra().dim();
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(Polynomial::variable(i));
  const AlgebraVector<Polynomial> x(d.algebra_ptr(), std::move(coeffs));
  return geodesic_residuals(x, g, d);
}

}  // namespace gw

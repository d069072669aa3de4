#include "gw/euler_arnold.hpp"

#include <cmath>

namespace gw {

FlowResult euler_arnold_flow(const AlgebraVector<double>& v0, const InvariantMetric& g, const SpaceDescriptor& d,
                             double t_end, double dt, std::size_t record_every) {
  if (d.dim_k() != 0) throw Error(ErrorCode::UnsupportedSpace, "Euler-Arnold flow needs k = 0, space " + d.name());
  if (!(dt > 0) || !(t_end >= dt)) throw Error(ErrorCode::InvalidInput, "need dt > 0 and T >= dt");
  if (v0.is_zero()) throw Error(ErrorCode::ZeroVector, "initial velocity must be nonzero");
  if (v0.algebra_ptr() != d.algebra_ptr()) {
    throw Error(ErrorCode::AlgebraMismatch, "vector is not over the algebra of space " + d.name());
  }
  if (record_every == 0) record_every = 1;

  const std::size_t n = v0.size();
  std::vector<double> inv_lambda(n, 0);
  for (int i = 1; i <= 3; ++i) {
    const double l = g.lambda(i).get_d();
    for (std::size_t idx : d.indices(static_cast<Part>(static_cast<int>(Part::m1) + i - 1))) inv_lambda[idx] = 1 / l;
  }
  auto rhs = [&](const AlgebraVector<double>& v) {
    auto w = bracket(apply_metric(v, g, d), v);
    for (std::size_t i = 0; i < n; ++i) w[i] *= inv_lambda[i];
    return w;
  };

  FlowResult out;
  const double e0 = inner_product(v0, v0, g, d);
  auto record = [&](double t, const AlgebraVector<double>& v, double drift) {
    out.times.push_back(t);
    out.states.emplace_back(v.coeffs().begin(), v.coeffs().end());
    out.energy.push_back(inner_product(v, v, g, d));
    out.drift_log.push_back(drift);
  };
  record(0, v0, 0);

  AlgebraVector<double> v = v0;
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  for (std::size_t s = 1; s <= steps; ++s) {
    const auto k1 = rhs(v);
    const auto k2 = rhs(v + (dt / 2) * k1);
    const auto k3 = rhs(v + (dt / 2) * k2);
    const auto k4 = rhs(v + dt * k3);
    v = v + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const auto diff = v - v0;
    const double drift = std::sqrt(std::max(0.0, inner_product(diff, diff, g, d)));
    out.drift = std::max(out.drift, drift);
    out.energy_drift = std::max(out.energy_drift, std::abs(inner_product(v, v, g, d) - e0) / e0);
    if (s % record_every == 0 || s == steps) record(static_cast<double>(s) * dt, v, drift);
  }
  out.steps = steps;
  return out;
}

}  // namespace gw

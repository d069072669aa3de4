#pragma once

// Euler-Arnold flow L v' = [L v, v] for a left-invariant metric on a Lie
// group (spaces with k = 0). Its equilibria are the geodesic vectors.

#include <vector>

#include "gw/geodesic.hpp"

namespace gw {

struct FlowResult {
  /// Recorded samples (every `record_every` steps plus the final state).
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> energy;
  std::vector<double> drift_log;
  /// Max over all steps of the metric norm of v(t) - v(0).
  double drift = 0;
  /// Max over all steps of |<v,v> - <v0,v0>| / <v0,v0>.
  double energy_drift = 0;
  std::size_t steps = 0;
};

/// Classical RK4 with fixed step. Throws Error(UnsupportedSpace) if k is
/// nonempty, Error(InvalidInput) unless dt > 0 and t_end >= dt, and
/// Error(ZeroVector) for v0 = 0.
FlowResult euler_arnold_flow(const AlgebraVector<double>& v0, const InvariantMetric& g, const SpaceDescriptor& d,
                             double t_end, double dt, std::size_t record_every = 100);

}  // namespace gw

#pragma once

#include <optional>
#include <vector>

#include "gw/matrix.hpp"
#include "gw/scalar.hpp"

namespace gw {

struct FloatAugmentedRank {
  std::size_t rank_a = 0;
  std::size_t rank_ab = 0;
  /// Minimum-norm solution; present iff rank_a == rank_ab.
  std::optional<std::vector<double>> solution;
};

/// Singular values above max(tol * sigma_max, tol) count towards the rank.
/// Both ranks share the threshold derived from [A | b].
FloatAugmentedRank svd_solve(const Matrix<double>& a, const std::vector<double>& b,
                             double tol = kDefaultTolerance);

std::size_t svd_rank(const Matrix<double>& a, double tol = kDefaultTolerance);

/// Minimum-norm least-squares solution of J x = r (pseudo-inverse applied to r).
std::vector<double> min_norm_solve(const Matrix<double>& j, const std::vector<double>& r,
                                   double rel_tol = 1e-12);

}  // namespace gw

#pragma once

#include <optional>
#include <vector>

#include "gw/matrix.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// Result of fraction-free elimination of the augmented matrix [A | b].
struct AugmentedRank {
  std::size_t rank_a = 0;
  std::size_t rank_ab = 0;
  /// Echelon particular solution with free variables set to zero; present
  /// iff rank_a == rank_ab.
  std::optional<std::vector<Rational>> solution;
};

/// Bareiss elimination over the integers after clearing row denominators.
/// One pass yields rank(A), rank(A|b) and, when consistent, a solution.
AugmentedRank bareiss_solve(const Matrix<Rational>& a, const std::vector<Rational>& b);

/// Rank of a rational matrix by the same elimination.
std::size_t bareiss_rank(const Matrix<Rational>& a);

/// Inverse of a square rational matrix (Gauss-Jordan). Throws
/// Error(InvalidInput) if singular.
Matrix<Rational> inverse(const Matrix<Rational>& a);

/// Determinants of the leading principal minors are all positive.
bool is_positive_definite(const Matrix<Rational>& a);

}  // namespace gw

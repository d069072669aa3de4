#pragma once

// Closed-form geodesic-vector enumeration for SU(2)/{e} and SO(4)/SO(2),
// and a Newton sampler for the full quadratic system on any space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gw/geodesic.hpp"
#include "gw/random.hpp"

namespace gw {

/// A basis coordinate solved from one of the family's constraints.
struct DependentParam {
  std::string label;
  /// Index into SolutionFamily::constraints; the constraint must be linear
  /// or purely quadratic in this coordinate once earlier values are known.
  std::size_t constraint = 0;
};

/// Geodesic vectors X = sum of coordinate * basis vector. Every basis
/// coordinate is exactly one of: fixed to zero, free, or dependent.
/// Constraint polynomials use the basis index as variable number.
struct SolutionFamily {
  std::string branch;
  std::vector<std::string> free_params;
  std::vector<std::string> fixed_zero;
  /// Coordinates asserted nonzero (a subset of free and dependent).
  std::vector<std::string> nonzero;
  std::vector<DependentParam> dependent;
  std::vector<Polynomial> constraints;
  std::string description;
};

/// One line, fixed field order; the format golden files compare against.
std::string to_text(const SolutionFamily& f, const LieAlgebra& algebra);

/// Families on catalog("su2_trivial"). Throws Error(InvalidMetric).
std::vector<SolutionFamily> enumerate_su2(const InvariantMetric& g);

/// Families on catalog("stiefel_n", {4}).
std::vector<SolutionFamily> enumerate_stiefel4(const InvariantMetric& g);

/// A random point of the family: free coordinates are nonzero rationals,
/// dependent coordinates are solved in order (square roots land in a
/// quadratic field). Returns nullopt if no valid point was found within
/// the retry budget.
std::optional<AlgebraVector<QuadraticSurd>> instantiate(const SolutionFamily& f, const SpaceDescriptor& d, Rng& rng);

/// Coefficient distance from x (scaled to unit length, first nonzero
/// coordinate positive) to the family's Zariski closure, by Gauss-Newton
/// projection onto {fixed zeros, constraints}.
double family_distance(const AlgebraVector<double>& x, const SolutionFamily& f, const SpaceDescriptor& d);

/// Scale to unit Euclidean coefficient norm, sign so that the first
/// coordinate above 1e-9 in magnitude is positive.
AlgebraVector<double> normalize_direction(const AlgebraVector<double>& x);

struct SamplerStats {
  std::size_t attempts = 0;
  std::size_t converged = 0;
  std::size_t distinct = 0;
};

/// Damped Gauss-Newton on the residual map over all coordinates of g from
/// seeded random starts on the unit sphere. Returns distinct converged
/// solutions (residual norm < 1e-12), normalized, sorted, de-duplicated at
/// distance 1e-6.
std::vector<AlgebraVector<double>> sample_geodesic_vectors(const SpaceDescriptor& d, const InvariantMetric& g,
                                                           std::size_t attempts, std::uint64_t seed = kDefaultSeed,
                                                           SamplerStats* stats = nullptr);

/// Verdict on a vector shape as stated in the literature for SO(4)/SO(2).
enum class ShapeVerdict {
  /// Every residual vanishes on the shape (given its stated constraints).
  confirmed,
  /// Some residual is a nonzero monomial in coordinates asserted nonzero.
  refuted,
  /// Some residual is a monomial forcing a coordinate of the shape to zero.
  forces_zero,
  /// Residuals survive that are not implied by the stated constraints.
  conditional,
};

const char* to_string(ShapeVerdict v);

/// A vector shape: each basis coordinate as a linear form in parameters.
struct ListedShape {
  std::string metric_case;
  std::string branch;
  std::string text;
  std::vector<std::string> params;
  /// Parameters asserted nonzero.
  std::vector<std::size_t> nonzero_params;
  /// Coordinate i of X (indexed by basis) as a polynomial in the parameters.
  std::vector<Polynomial> coords;
  /// Stated relations, in basis coordinates.
  std::vector<Polynomial> constraints;
};

struct ShapeAudit {
  ListedShape shape;
  InvariantMetric metric;
  ShapeVerdict verdict = ShapeVerdict::confirmed;
  /// Residuals that survive substitution, printed in the parameters.
  std::vector<std::string> surviving;
  /// Index of the emitted family with the same support, zero set, nonzero
  /// set and constraints (confirmed shapes only).
  std::optional<std::size_t> matched_family;
};

/// The four metric cases with representatives (1,1,2), (1,2,1), (2,1,1), (1,2,3).
std::vector<InvariantMetric> stiefel4_case_metrics();

/// Vector shapes listed case by case in the SO(4)/SO(2) example.
std::vector<ListedShape> stiefel4_listed_shapes(const SpaceDescriptor& d);

/// "l1=l2=l3", "l1=l2!=l3", "l1=l3!=l2", "l2=l3!=l1" or "distinct".
std::string metric_pattern(const InvariantMetric& g);

/// Audits the shapes listed for the coincidence pattern of g against the
/// residuals at g and matches confirmed shapes to emitted families. Empty
/// for the standard metric.
std::vector<ShapeAudit> audit_stiefel4_shapes(const InvariantMetric& g);

}  // namespace gw

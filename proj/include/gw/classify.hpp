#pragma once

// g.o. metric decision by probing the rank test over a fixed set of m-vectors.
// A failing probe is a proof; passing every probe is evidence only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gw/geodesic.hpp"
#include "gw/random.hpp"

namespace gw {

struct Probe {
  AlgebraVector<Rational> x;
  /// Module pair (i, j) of a structured probe in m_i + m_j; (0, 0) for random probes.
  int i = 0;
  int j = 0;
  bool structured() const { return i != 0; }
  /// "m1+m2", "m1+m3", "m2+m3" or "random".
  std::string kind() const;
};

/// Structured probes come first, pair by pair in the order (1,2), (1,3),
/// (2,3); within a pair every c1 e + c2 f with e in m_i, f in m_j and
/// (c1, c2) in {(1,1), (1,-1), (1,2), (2,1)}. Random probes follow, every
/// m-coordinate uniform on {-3..3} without 0.
struct ProbePlan {
  std::vector<Probe> probes;
  std::size_t structured_count = 0;
  std::size_t random_count = 0;
  std::uint64_t seed = kDefaultSeed;
};

ProbePlan make_probe_plan(const SpaceDescriptor& d, std::size_t random_count = 200, std::uint64_t seed = kDefaultSeed);

struct MetricResult {
  InvariantMetric metric;
  bool pass = true;
  /// Index into the plan of the first probe without completion.
  std::optional<std::size_t> witness;
  std::size_t probes_run = 0;
  /// Probes whose right-hand side was not identically zero.
  std::size_t rhs_nonzero = 0;
};

/// Runs the rank test on the probes in plan order and stops at the first failure.
MetricResult is_go_metric(const SpaceDescriptor& d, const InvariantMetric& g, const ProbePlan& plan);

enum class Verdict { go_for_all_metrics, go_iff_standard, undetermined };

const char* to_string(Verdict v);

/// All 27 metrics of {1,2,3}^3 in lexicographic order, then
/// random_count metrics with integer entries uniform on 1..9.
std::vector<InvariantMetric> metric_grid(std::size_t random_count = 50, std::uint64_t seed = kDefaultSeed);

struct GOClassification {
  Verdict verdict = Verdict::undetermined;
  std::vector<MetricResult> results;
  /// First non-standard failing metric (index into results).
  std::optional<std::size_t> witness_metric;
  std::size_t probe_count = 0;
  std::uint64_t seed = kDefaultSeed;
};

GOClassification classify_space(const SpaceDescriptor& d, const std::vector<InvariantMetric>& metrics,
                                 const ProbePlan& plan);

}  // namespace gw

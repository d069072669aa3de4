#include "gw/classify.hpp"

namespace gw {

std::string Probe::kind() const {
  if (!structured()) return "random";
  return "m" + std::to_string(i) + "+m" + std::to_string(j);
}

ProbePlan make_probe_plan(const SpaceDescriptor& d, std::size_t random_count, std::uint64_t seed) {
  static const int grid[4][2] = {{1, 1}, {1, -1}, {1, 2}, {2, 1}};
  static const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  ProbePlan plan;
  plan.seed = seed;
  const AlgebraPtr& alg = d.algebra_ptr();
  for (const auto& p : pairs) {
    const auto& mi = d.indices(static_cast<Part>(static_cast<int>(Part::m1) + p[0] - 1));
    const auto& mj = d.indices(static_cast<Part>(static_cast<int>(Part::m1) + p[1] - 1));
    for (std::size_t e : mi) {
      for (std::size_t f : mj) {
        for (const auto& c : grid) {
          AlgebraVector<Rational> x(alg);
          x[e] = c[0];
          x[f] = c[1];
          plan.probes.push_back({std::move(x), p[0], p[1]});
        }
      }
    }
  }
  plan.structured_count = plan.probes.size();
  Rng rng(seed);
  for (std::size_t n = 0; n < random_count; ++n) {
    AlgebraVector<Rational> x(alg);
    for (std::size_t idx : d.indices(Part::m)) x[idx] = rng.nonzero_int(3);
    plan.probes.push_back({std::move(x), 0, 0});
  }
  plan.random_count = random_count;
  return plan;
}

MetricResult is_go_metric(const SpaceDescriptor& d, const InvariantMetric& g, const ProbePlan& plan) {
  MetricResult out{g, true, std::nullopt, 0, 0};
  for (std::size_t p = 0; p < plan.probes.size(); ++p) {
    const auto c = completion_exists(plan.probes[p].x, g, d);
    ++out.probes_run;
    for (const auto& b : c.system.b) {
      if (sgn(b) != 0) {
        ++out.rhs_nonzero;
        break;
      }
    }
    if (!c.xk) {
      out.pass = false;
      out.witness = p;
      break;
    }
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::go_for_all_metrics: return "go_for_all_metrics";
    case Verdict::go_iff_standard: return "go_iff_standard";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

std::vector<InvariantMetric> metric_grid(std::size_t random_count, std::uint64_t seed) {
  std::vector<InvariantMetric> out;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        out.emplace_back(a, b, c);
      }
    }
  }
  Rng rng(mix_seed(seed, 1));
  for (std::size_t n = 0; n < random_count; ++n) {
    const long a = rng.uniform_int(1, 9), b = rng.uniform_int(1, 9), c = rng.uniform_int(1, 9);
    out.emplace_back(a, b, c);
  }
  return out;
}

GOClassification classify_space(const SpaceDescriptor& d, const std::vector<InvariantMetric>& metrics,
                                const ProbePlan& plan) {
  GOClassification out;
  out.probe_count = plan.probes.size();
  out.seed = plan.seed;
  bool all_pass = true;
  bool iff_standard = true;
  for (const auto& g : metrics) {
    out.results.push_back(is_go_metric(d, g, plan));
    const auto& r = out.results.back();
    all_pass = all_pass && r.pass;
    iff_standard = iff_standard && (r.pass == g.is_standard());
    if (!r.pass && !g.is_standard() && !out.witness_metric) out.witness_metric = out.results.size() - 1;
  }
  if (all_pass) {
    out.verdict = Verdict::go_for_all_metrics;
  } else if (iff_standard && out.witness_metric) {
    out.verdict = Verdict::go_iff_standard;
  }
  return out;
}

}  // namespace gw

#include <algorithm>
#include <cmath>

#include "gw/float_linalg.hpp"
#include "gw/solve_small.hpp"

namespace gw {

namespace {

// A polynomial flattened for repeated double evaluation.
class FloatPoly {
 public:
  explicit FloatPoly(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c.get_d(), {}};
      for (std::size_t v = 0; v < m.size(); ++v) {
        for (unsigned e = 0; e < m[v]; ++e) t.vars.push_back(v);
      }
      terms_.push_back(std::move(t));
    }
  }

  double operator()(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& t : terms_) {
      double v = t.coeff;
      for (std::size_t i : t.vars) v *= x[i];
      acc += v;
    }
    return acc;
  }

 private:
  struct Term {
    double coeff;
    std::vector<std::size_t> vars;
  };
  std::vector<Term> terms_;
};

// A polynomial map with its Jacobian, restricted to a subset of variables.
struct PolySystem {
  std::vector<FloatPoly> f;
  std::vector<std::vector<FloatPoly>> jac;  // jac[row][k] = d f_row / d x_{vars[k]}
  std::vector<std::size_t> vars;

  PolySystem(const std::vector<Polynomial>& polys, std::vector<std::size_t> active) : vars(std::move(active)) {
    for (const auto& p : polys) {
      f.emplace_back(p);
      std::vector<FloatPoly> row;
      for (std::size_t v : vars) row.emplace_back(p.derivative(v));
      jac.push_back(std::move(row));
    }
  }

  std::vector<double> value(const std::vector<double>& x) const {
    std::vector<double> out;
    out.reserve(f.size());
    for (const auto& p : f) out.push_back(p(x));
    return out;
  }

  Matrix<double> jacobian(const std::vector<double>& x) const {
    Matrix<double> j(f.size(), vars.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
      for (std::size_t k = 0; k < vars.size(); ++k) j(r, k) = jac[r][k](x);
    }
    return j;
  }
};

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double n = norm(v);
  for (double& x : v) x /= n;
}

constexpr double kSnap = 1e-5;

// Damped Newton (minimum-norm tangent steps) on the unit sphere over sys.vars.
// Returns the final residual norm.
double newton(const PolySystem& sys, std::vector<double>& x) {
  auto fx = sys.value(x);
  double r = norm(fx);
  int polish = 0;
  for (int it = 0; it < 200; ++it) {
    if (r < 1e-12 && ++polish > 3) break;
    // Homogeneous residuals: J x = 2 F, so an unconstrained step can be
    // purely radial. Pin the step to the sphere's tangent space.
    const Matrix<double> j = sys.jacobian(x);
    Matrix<double> aug(j.rows() + 1, j.cols());
    for (std::size_t r = 0; r < j.rows(); ++r)
      for (std::size_t c = 0; c < j.cols(); ++c) aug(r, c) = j(r, c);
    for (std::size_t k = 0; k < sys.vars.size(); ++k) aug(j.rows(), k) = x[sys.vars[k]];
    std::vector<double> rhs = fx;
    rhs.push_back(0);
    const auto delta = min_norm_solve(aug, rhs);
    double step = 1;
    bool accepted = false;
    for (int half = 0; half < 40; ++half, step *= 0.5) {
      std::vector<double> cand = x;
      for (std::size_t k = 0; k < sys.vars.size(); ++k) cand[sys.vars[k]] -= step * delta[k];
      normalize(cand);
      const auto fc = sys.value(cand);
      const double rc = norm(fc);
      if (rc <= r) {
        x = std::move(cand);
        fx = fc;
        r = rc;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return r;
}

}  // namespace

AlgebraVector<double> normalize_direction(const AlgebraVector<double>& x) {
  std::vector<double> v(x.coeffs().begin(), x.coeffs().end());
  const double n = norm(v);
  if (n == 0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  double sign = 1;
  for (double c : v) {
    if (std::abs(c) > 1e-9 * n) {
      sign = c > 0 ? 1 : -1;
      break;
    }
  }
  for (double& c : v) c *= sign / n;
  return AlgebraVector<double>(x.algebra_ptr(), std::move(v));
}

double family_distance(const AlgebraVector<double>& x, const SolutionFamily& f, const SpaceDescriptor& d) {
  const LieAlgebra& alg = d.algebra();
  const auto start = normalize_direction(x);
  std::vector<double> y(start.coeffs().begin(), start.coeffs().end());
  std::vector<bool> fixed(alg.dim(), false);
  for (const auto& label : f.fixed_zero) {
    const std::size_t i = alg.index_of(label);
    fixed[i] = true;
    y[i] = 0;
  }
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!fixed[i]) active.push_back(i);
  }
  if (!f.constraints.empty()) {
    const PolySystem sys(f.constraints, active);
    for (int it = 0; it < 100; ++it) {
      const auto c = sys.value(y);
      if (norm(c) < 1e-15) break;
      const auto step = min_norm_solve(sys.jacobian(y), c);
      for (std::size_t k = 0; k < active.size(); ++k) y[active[k]] -= step[k];
    }
  }
  double dist = 0;
  for (std::size_t i = 0; i < y.size(); ++i) dist += (y[i] - start[i]) * (y[i] - start[i]);
  return std::sqrt(dist);
}

std::vector<AlgebraVector<double>> sample_geodesic_vectors(const SpaceDescriptor& d, const InvariantMetric& g,
                                                           std::size_t attempts, std::uint64_t seed,
                                                           SamplerStats* stats) {
  const std::size_t n = d.algebra().dim();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const auto polys = residual_polynomials(d, g);
  const PolySystem sys(polys, all);

  std::vector<std::vector<double>> found;
  std::size_t converged = 0;
  for (std::size_t a = 0; a < attempts; ++a) {
    Rng rng(mix_seed(seed, a));
    std::vector<double> x(n);
    for (double& c : x) c = rng.normal();
    normalize(x);
    double r = newton(sys, x);
    if (r < 1e-12) {
      // Near a singular stratum Newton stalls at distance ~ sqrt(residual);
      // snap tiny coordinates to zero and re-polish on the rest.
      std::vector<double> snapped = x;
      std::vector<std::size_t> active;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(snapped[i]) < kSnap) snapped[i] = 0;
        else active.push_back(i);
      }
      if (active.size() < n && !active.empty()) {
        const PolySystem reduced(polys, active);
        const double rs = newton(reduced, snapped);
        if (rs < 1e-12) {
          x = std::move(snapped);
          r = rs;
        }
      }
    }
    if (r < 1e-12) {
      ++converged;
      const auto v = normalize_direction(AlgebraVector<double>(d.algebra_ptr(), x));
      found.emplace_back(v.coeffs().begin(), v.coeffs().end());
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<AlgebraVector<double>> out;
  std::vector<std::vector<double>> kept;
  for (const auto& v : found) {
    bool dup = false;
    for (const auto& k : kept) {
      double dist = 0;
      for (std::size_t i = 0; i < n; ++i) dist += (v[i] - k[i]) * (v[i] - k[i]);
      if (std::sqrt(dist) < 1e-6) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      kept.push_back(v);
      out.emplace_back(d.algebra_ptr(), v);
    }
  }
  if (stats) *stats = {attempts, converged, out.size()};
  return out;
}

}  // namespace gw

#include "gw/solve_small.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "gw/catalog.hpp"

namespace gw {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

void require_positive(const InvariantMetric& g) {
  // The metric type already rejects non-positive entries; kept as the
  // documented precondition of both enumerators.
  for (const auto& l : g.lambdas()) {
    if (sgn(l) <= 0) throw Error(ErrorCode::InvalidMetric, "metric parameters must be positive");
  }
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back(i);
  }
  return out;
}

// Substitutes zero for the listed basis coordinates.
Polynomial restrict_to(const Polynomial& p, const std::set<std::size_t>& zero, std::size_t dim) {
  std::vector<Polynomial> vals;
  vals.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) vals.push_back(zero.count(i) ? Polynomial() : Polynomial::variable(i));
  return p.evaluate<Polynomial>(vals);
}

Monomial mono2(std::size_t a, std::size_t b) {
  Monomial m(std::max(a, b) + 1, 0);
  ++m[a];
  ++m[b];
  return m;
}

std::string describe(const SolutionFamily& f, const LieAlgebra& alg) {
  std::vector<std::string> supp;
  std::set<std::string> zero(f.fixed_zero.begin(), f.fixed_zero.end());
  for (const auto& l : alg.labels()) {
    if (!zero.count(l)) supp.push_back(l);
  }
  std::string out = "span{" + join(supp) + "}";
  if (!f.constraints.empty()) {
    std::vector<std::string> cs;
    for (const auto& c : f.constraints) cs.push_back(c.str(alg.labels()) + " = 0");
    out += " with " + join(cs, ", ");
  }
  if (!f.nonzero.empty()) out += "; " + join(f.nonzero, ", ") + " nonzero";
  return out;
}

// Fills in labels in basis order, canonical constraints, dependent indices
// and the description.
SolutionFamily finish(const LieAlgebra& alg, std::string branch, const std::set<std::size_t>& zero,
                      const std::set<std::size_t>& nonzero, std::vector<Polynomial> constraints,
                      const std::vector<std::pair<std::size_t, Polynomial>>& dependent) {
  SolutionFamily f;
  f.branch = std::move(branch);
  f.constraints = canonical_constraints(std::move(constraints));
  std::set<std::size_t> dep;
  for (const auto& [var, poly] : dependent) {
    dep.insert(var);
    std::size_t idx = f.constraints.size();
    for (std::size_t c = 0; c < f.constraints.size(); ++c) {
      if (f.constraints[c].proportional_to(poly)) idx = c;
    }
    if (idx == f.constraints.size()) throw Error(ErrorCode::Internal, "dependent coordinate without its constraint");
    f.dependent.push_back({alg.label(var), idx});
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (zero.count(i)) {
      f.fixed_zero.push_back(alg.label(i));
    } else if (!dep.count(i)) {
      f.free_params.push_back(alg.label(i));
    }
    if (nonzero.count(i)) f.nonzero.push_back(alg.label(i));
  }
  f.description = describe(f, alg);
  return f;
}

}  // namespace

std::string metric_pattern(const InvariantMetric& g) {
  const auto& l = g.lambdas();
  if (l[0] == l[1] && l[1] == l[2]) return "l1=l2=l3";
  if (l[0] == l[1]) return "l1=l2!=l3";
  if (l[0] == l[2]) return "l1=l3!=l2";
  if (l[1] == l[2]) return "l2=l3!=l1";
  return "distinct";
}

std::string to_text(const SolutionFamily& f, const LieAlgebra& algebra) {
  std::vector<std::string> dep, cons;
  for (const auto& d : f.dependent) dep.push_back(d.label + "<-c" + std::to_string(d.constraint));
  for (std::size_t i = 0; i < f.constraints.size(); ++i) {
    cons.push_back("c" + std::to_string(i) + ": " + f.constraints[i].str(algebra.labels()) + " = 0");
  }
  return "branch=" + f.branch + " free=[" + join(f.free_params, ",") + "] zero=[" + join(f.fixed_zero, ",") +
         "] nonzero=[" + join(f.nonzero, ",") + "] dependent=[" + join(dep, ",") + "] constraints=[" +
         join(cons, "; ") + "]";
}

std::vector<SolutionFamily> enumerate_su2(const InvariantMetric& g) {
  require_positive(g);
  const SpaceDescriptor d = catalog("su2_trivial");
  const LieAlgebra& alg = d.algebra();
  const std::size_t n = alg.dim();
  // Each residual is a single monomial; a support containing all variables
  // of a surviving monomial admits no point with those coordinates nonzero.
  std::vector<std::vector<std::size_t>> forbidden;
  for (const auto& r : residual_polynomials(d, g)) {
    if (r.is_zero()) continue;
    if (!r.is_monomial()) throw Error(ErrorCode::Internal, "su(2) residual is not a monomial: " + r.str(alg.labels()));
    forbidden.push_back(support(r.terms().begin()->first));
  }
  std::vector<unsigned> valid;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& f : forbidden) {
      bool inside = true;
      for (std::size_t v : f) inside = inside && (mask >> v & 1u);
      if (inside) ok = false;
    }
    if (ok) valid.push_back(mask);
  }
  std::vector<unsigned> maximal;
  for (unsigned m : valid) {
    bool dominated = false;
    for (unsigned o : valid) dominated = dominated || (o != m && (o & m) == m);
    if (!dominated) maximal.push_back(m);
  }
  std::sort(maximal.begin(), maximal.end(), [](unsigned a, unsigned b) {
    return (a & -a) != (b & -b) ? (a & -a) < (b & -b) : a < b;
  });
  std::vector<SolutionFamily> out;
  for (unsigned m : maximal) {
    std::set<std::size_t> zero;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m >> i & 1u)) zero.insert(i);
    }
    out.push_back(finish(alg, metric_pattern(g), zero, {}, {}, {}));
  }
  return out;
}

std::vector<SolutionFamily> enumerate_stiefel4(const InvariantMetric& g) {
  require_positive(g);
  const SpaceDescriptor d = catalog("stiefel_n", {4});
  const LieAlgebra& alg = d.algebra();
  const std::size_t n = alg.dim();
  const std::size_t e12 = alg.index_of("e12"), e13 = alg.index_of("e13"), e14 = alg.index_of("e14"),
                    e23 = alg.index_of("e23"), e24 = alg.index_of("e24"), e34 = alg.index_of("e34");
  const auto res = residual_polynomials(d, g);
  std::map<std::size_t, Polynomial> row;
  for (std::size_t r = 0; r < res.size(); ++r) row[d.indices(Part::m)[r]] = res[r];

  if (std::all_of(res.begin(), res.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    return {finish(alg, "standard", {}, {}, {}, {})};
  }

  // Row e12 couples e13 e23 and e14 e24; the other four rows each pair an
  // e34-term with an e12-term.
  struct Pair {
    std::size_t row, p_var, q_var;
    Rational p, q;
  };
  const Rational g1 = row[e12].coefficient(mono2(e13, e23));
  const Rational g2 = row[e12].coefficient(mono2(e14, e24));
  std::array<Pair, 4> rows{{{e13, e14, e23, 0, 0}, {e14, e13, e24, 0, 0}, {e23, e24, e13, 0, 0}, {e24, e23, e14, 0, 0}}};
  auto check_support = [&](std::size_t r, std::vector<Monomial> allowed) {
    for (const auto& [m, c] : row[r].terms()) {
      if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
        throw Error(ErrorCode::Internal, "unexpected term in residual of " + alg.label(r));
      }
    }
  };
  check_support(e12, {mono2(e13, e23), mono2(e14, e24)});
  for (auto& pr : rows) {
    pr.p = row[pr.row].coefficient(mono2(e34, pr.p_var));
    pr.q = row[pr.row].coefficient(mono2(e12, pr.q_var));
    check_support(pr.row, {mono2(e34, pr.p_var), mono2(e12, pr.q_var)});
    if (sgn(pr.p) == 0) throw Error(ErrorCode::Internal, "vanishing e34-coefficient in row " + alg.label(pr.row));
  }
  const Pair &r13 = rows[0], &r14 = rows[1], &r23 = rows[2], &r24 = rows[3];

  std::vector<SolutionFamily> out;
  auto restricted = [&](const std::set<std::size_t>& zero) {
    std::vector<Polynomial> cs;
    for (const auto& r : res) {
      Polynomial p = restrict_to(r, zero, n);
      if (!p.is_zero()) cs.push_back(std::move(p));
    }
    return cs;
  };
  // Residual row e12 is the only constraint left once e34 e12 = 0; solve it
  // for e24 (or e23) when both of its terms survive.
  auto e12_row_family = [&](const std::string& branch, const std::set<std::size_t>& zero,
                            const std::set<std::size_t>& nonzero) {
    auto cs = restricted(zero);
    std::vector<std::pair<std::size_t, Polynomial>> dep;
    if (!cs.empty()) {
      if (cs.size() != 1 || cs[0].terms().size() != 2) {
        throw Error(ErrorCode::Internal, "unexpected residual structure on branch " + branch);
      }
      dep.emplace_back(e24, cs[0]);
    }
    out.push_back(finish(alg, branch, zero, nonzero, cs, dep));
  };

  // e34 = 0, e12 = 0.
  e12_row_family("e34=0,e12=0", {e12, e34}, {});

  // e34 = 0, e12 != 0: each row reads q * e12 * x = 0.
  {
    std::set<std::size_t> zero{e34};
    for (const auto& pr : rows) {
      if (sgn(pr.q) != 0) zero.insert(pr.q_var);
    }
    e12_row_family("e34=0,e12!=0", zero, {e12});
  }

  // e34 != 0, e12 = 0: each row reads p * e34 * x = 0 with p != 0.
  out.push_back(finish(alg, "e34!=0,e12=0", {e12, e13, e14, e23, e24}, {e34}, {}, {}));

  // e34 != 0, e12 != 0. The rows split into two 2x2 systems,
  // {e13, e24} (rows e14, e23) and {e14, e23} (rows e13, e24), each with
  // determinant p p' e34^2 - q q' e12^2 up to sign.
  const std::string both = "e34!=0,e12!=0";
  out.push_back(finish(alg, both, {e13, e14, e23, e24}, {e34, e12}, {}, {}));

  const Polynomial s2 = Polynomial::monomial(mono2(e34, e34), 1);
  const Polynomial t2 = Polynomial::monomial(mono2(e12, e12), 1);
  auto cone = [&](const Pair& a, const Pair& b) { return Polynomial(a.p * b.p) * s2 - Polynomial(a.q * b.q) * t2; };
  auto has_real_cone = [](const Pair& a, const Pair& b) {
    const Rational pp = a.p * b.p, qq = a.q * b.q;
    return sgn(qq) != 0 && sgn(pp) == sgn(qq);
  };
  const bool chain1 = has_real_cone(r14, r23);
  const bool chain2 = has_real_cone(r13, r24);
  const Polynomial cone1 = cone(r14, r23), cone2 = cone(r13, r24);
  if (chain1 && chain2 && cone1.proportional_to(cone2)) {
    // On the cone, row e12 restricts to a multiple of this coefficient.
    const Rational k = g1 * r14.q * r13.p + g2 * r13.q * r14.p;
    if (sgn(k) != 0) throw Error(ErrorCode::Internal, "row e12 does not vanish on the joint cone");
    auto cs = restricted({});
    cs.push_back(cone1);
    out.push_back(finish(alg, both, {}, {e34, e12}, cs, {{e12, cone1}, {e14, row[e13]}, {e13, row[e14]}}));
  } else {
    if (chain1) {
      const std::set<std::size_t> zero{e14, e23};
      auto cs = restricted(zero);
      cs.push_back(cone1);
      out.push_back(finish(alg, both, zero, {e34, e12}, cs, {{e12, cone1}, {e13, restrict_to(row[e14], zero, n)}}));
    }
    if (chain2) {
      const std::set<std::size_t> zero{e13, e24};
      auto cs = restricted(zero);
      cs.push_back(cone2);
      out.push_back(finish(alg, both, zero, {e34, e12}, cs, {{e12, cone2}, {e14, restrict_to(row[e13], zero, n)}}));
    }
  }
  return out;
}

std::optional<AlgebraVector<QuadraticSurd>> instantiate(const SolutionFamily& f, const SpaceDescriptor& d, Rng& rng) {
  const LieAlgebra& alg = d.algebra();
  const std::size_t n = alg.dim();
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<QuadraticSurd> vals(n, QuadraticSurd(0));
    for (const auto& label : f.free_params) vals[alg.index_of(label)] = rng.nonzero_rational(9, 4);
    bool ok = true;
    for (const auto& dep : f.dependent) {
      const std::size_t var = alg.index_of(dep.label);
      // Coefficients of var^0, var^1, var^2 with every other coordinate known.
      std::array<QuadraticSurd, 3> c{0, 0, 0};
      for (const auto& [mono, coeff] : f.constraints.at(dep.constraint).terms()) {
        QuadraticSurd term(coeff);
        unsigned e = 0;
        for (std::size_t v = 0; v < mono.size(); ++v) {
          if (v == var) {
            e = mono[v];
            continue;
          }
          for (unsigned k = 0; k < mono[v]; ++k) term *= vals[v];
        }
        if (e > 2) throw Error(ErrorCode::Internal, "dependent coordinate of degree above two");
        c[e] += term;
      }
      if (c[2].is_zero()) {
        if (c[1].is_zero()) {
          ok = false;
          break;
        }
        vals[var] = -c[0] / c[1];
      } else {
        if (!c[1].is_zero()) throw Error(ErrorCode::Internal, "mixed quadratic in a dependent coordinate");
        const QuadraticSurd sq = -c[0] / c[2];
        if (!sq.is_rational() || sgn(sq.rational_part()) < 0) {
          ok = false;
          break;
        }
        const QuadraticSurd root = sqrt_rational(sq.rational_part());
        vals[var] = rng.uniform_int(0, 1) ? root : -root;
      }
    }
    if (!ok) continue;
    for (const auto& label : f.nonzero) ok = ok && !vals[alg.index_of(label)].is_zero();
    for (const auto& c : f.constraints) ok = ok && c.evaluate<QuadraticSurd>(vals).is_zero();
    const bool all_zero = std::all_of(vals.begin(), vals.end(), [](const QuadraticSurd& x) { return x.is_zero(); });
    if (ok && !all_zero) return AlgebraVector<QuadraticSurd>(d.algebra_ptr(), std::move(vals));
  }
  return std::nullopt;
}

const char* to_string(ShapeVerdict v) {
  switch (v) {
    case ShapeVerdict::confirmed: return "confirmed";
    case ShapeVerdict::refuted: return "refuted";
    case ShapeVerdict::forces_zero: return "forces_zero";
    case ShapeVerdict::conditional: return "conditional";
  }
  return "?";
}

std::vector<InvariantMetric> stiefel4_case_metrics() {
  return {InvariantMetric(1, 1, 2), InvariantMetric(1, 2, 1), InvariantMetric(2, 1, 1), InvariantMetric(1, 2, 3)};
}

std::vector<ListedShape> stiefel4_listed_shapes(const SpaceDescriptor& d) {
  const LieAlgebra& alg = d.algebra();
  const std::size_t n = alg.dim();
  const auto P = [](std::size_t i) { return Polynomial::variable(i); };
  const auto V = [&](const char* label) { return Polynomial::variable(alg.index_of(label)); };
  const Polynomial sum_rel = V("e13") * V("e23") + V("e14") * V("e24");

  // coords given as {label, polynomial in the parameters}.
  auto make = [&](std::string c, std::string branch, std::string text, std::vector<std::string> params,
                  std::vector<std::size_t> nonzero, std::vector<std::pair<const char*, Polynomial>> coords,
                  std::vector<Polynomial> constraints) {
    ListedShape s{std::move(c), std::move(branch), std::move(text), std::move(params), std::move(nonzero),
                  std::vector<Polynomial>(n), std::move(constraints)};
    for (auto& [label, poly] : coords) s.coords[alg.index_of(label)] = poly;
    return s;
  };

  std::vector<ListedShape> out;
  const char* cases[4] = {"l1=l2!=l3", "l1=l3!=l2", "l2=l3!=l1", "distinct"};
  for (int c = 0; c < 4; ++c) {
    const std::string mc = cases[c];
    // s = a34, t = a12; p, q, u, v for the m2 + m3 coordinates.
    std::vector<Polynomial> rel;
    if (c != 2) rel.push_back(sum_rel);
    out.push_back(make(mc, "e34=0,e12=0", c != 2 ? "a13 e13 + a14 e14 + a23 e23 + a24 e24, a13 a23 + a14 a24 = 0"
                                                 : "a13 e13 + a14 e14 + a23 e23 + a24 e24",
                       {"a13", "a14", "a23", "a24"}, {},
                       {{"e13", P(0)}, {"e14", P(1)}, {"e23", P(2)}, {"e24", P(3)}}, rel));
    if (c == 0) {
      out.push_back(make(mc, "e34=0,e12!=0", "a12 e12 + a13 e13 + a14 e14", {"a12", "a13", "a14"}, {0},
                         {{"e12", P(0)}, {"e13", P(1)}, {"e14", P(2)}}, {}));
      out.push_back(make(mc, "e34!=0,e12=0", "a34 e34 + a23 e23 + a24 e24", {"a34", "a23", "a24"}, {0},
                         {{"e34", P(0)}, {"e23", P(1)}, {"e24", P(2)}}, {}));
    } else if (c == 1) {
      out.push_back(make(mc, "e34=0,e12!=0", "a12 e12 + a23 e23 + a24 e24", {"a12", "a23", "a24"}, {0},
                         {{"e12", P(0)}, {"e23", P(1)}, {"e24", P(2)}}, {}));
      out.push_back(make(mc, "e34!=0,e12=0", "a34 e34 + a13 e13 + a14 e14", {"a34", "a13", "a14"}, {0},
                         {{"e34", P(0)}, {"e13", P(1)}, {"e14", P(2)}}, {}));
    } else {
      out.push_back(make(mc, "e34=0,e12!=0", "a12 e12", {"a12"}, {0}, {{"e12", P(0)}}, {}));
      out.push_back(make(mc, "e34!=0,e12=0", "a34 e34", {"a34"}, {0}, {{"e34", P(0)}}, {}));
    }
    const std::vector<std::string> st{"a34", "a12", "a13", "a23"};
    out.push_back(make(mc, "e34!=0,e12!=0",
                       "a34 e34 + a12 e12 + a13 e13 + a13 e14 + a23 e23 - a23 e24", st, {0, 1},
                       {{"e34", P(0)}, {"e12", P(1)}, {"e13", P(2)}, {"e14", P(2)}, {"e23", P(3)}, {"e24", -P(3)}},
                       {}));
    out.push_back(make(mc, "e34!=0,e12!=0",
                       "a34 e34 + a12 e12 + a13 e13 - a13 e14 + a23 e23 + a23 e24", st, {0, 1},
                       {{"e34", P(0)}, {"e12", P(1)}, {"e13", P(2)}, {"e14", -P(2)}, {"e23", P(3)}, {"e24", P(3)}},
                       {}));
    out.push_back(make(mc, "e34!=0,e12!=0",
                       "a34 e34 + a12 e12 + a13 e13 + a14 e14 + a23 e23 + a24 e24",
                       {"a34", "a12", "a13", "a14", "a23", "a24"}, {0, 1},
                       {{"e34", P(0)}, {"e12", P(1)}, {"e13", P(2)}, {"e14", P(3)}, {"e23", P(4)}, {"e24", P(5)}},
                       {}));
  }
  return out;
}

namespace {

struct FamilyKey {
  std::set<std::string> zero, nonzero;
  std::vector<Polynomial> constraints;
  bool operator==(const FamilyKey& o) const {
    return zero == o.zero && nonzero == o.nonzero && constraints == o.constraints;
  }
};

}  // namespace

std::vector<ShapeAudit> audit_stiefel4_shapes(const InvariantMetric& g) {
  const SpaceDescriptor d = catalog("stiefel_n", {4});
  const LieAlgebra& alg = d.algebra();
  const auto shapes = stiefel4_listed_shapes(d);
  const std::string pattern = metric_pattern(g);
  std::vector<ShapeAudit> out;
  {
    const auto res = residual_polynomials(d, g);
    const auto families = enumerate_stiefel4(g);
    for (const auto& shape : shapes) {
      if (shape.metric_case != pattern) continue;
      ShapeAudit a{shape, g, ShapeVerdict::confirmed, {}, std::nullopt};
      std::vector<Polynomial> rel;
      for (const auto& r : shape.constraints) rel.push_back(r.evaluate<Polynomial>(shape.coords));
      int severity = 0;  // 0 confirmed, 1 conditional, 2 forces_zero, 3 refuted
      for (const auto& r : res) {
        const Polynomial sub = r.evaluate<Polynomial>(shape.coords);
        if (sub.is_zero()) continue;
        if (std::any_of(rel.begin(), rel.end(), [&](const Polynomial& q) { return sub.proportional_to(q); })) continue;
        a.surviving.push_back(sub.str(shape.params));
        if (sub.is_monomial()) {
          bool all_nonzero = true;
          for (std::size_t v : sub.variables()) {
            all_nonzero = all_nonzero && std::count(shape.nonzero_params.begin(), shape.nonzero_params.end(), v);
          }
          severity = std::max(severity, all_nonzero ? 3 : 2);
        } else {
          severity = std::max(severity, 1);
        }
      }
      static const ShapeVerdict by_severity[4] = {ShapeVerdict::confirmed, ShapeVerdict::conditional,
                                                  ShapeVerdict::forces_zero, ShapeVerdict::refuted};
      a.verdict = by_severity[severity];
      if (a.verdict == ShapeVerdict::confirmed) {
        FamilyKey key;
        for (std::size_t i = 0; i < alg.dim(); ++i) {
          const Polynomial& x = shape.coords[i];
          if (x.is_zero()) key.zero.insert(alg.label(i));
          const auto vars = x.variables();
          if (x.is_monomial() && x.degree() == 1 && vars.size() == 1 &&
              std::count(shape.nonzero_params.begin(), shape.nonzero_params.end(), vars[0])) {
            key.nonzero.insert(alg.label(i));
          }
        }
        key.constraints = canonical_constraints(shape.constraints);
        for (std::size_t f = 0; f < families.size(); ++f) {
          const auto& fam = families[f];
          const FamilyKey fk{{fam.fixed_zero.begin(), fam.fixed_zero.end()},
                             {fam.nonzero.begin(), fam.nonzero.end()},
                             fam.constraints};
          if (fk == key) {
            a.matched_family = f;
            break;
          }
        }
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace gw

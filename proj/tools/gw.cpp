// gw: catalog inspection, geodesic-vector checks, g.o. classification,
// enumeration, sampling and the Euler-Arnold oracle from the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gw/catalog.hpp"
#include "gw/classify.hpp"
#include "gw/euler_arnold.hpp"
#include "gw/json_io.hpp"
#include "gw/solve_small.hpp"

namespace {

using namespace gw;

enum class Format { table, json, csv };

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInvalidDescriptor = 3 };

struct Session {
  std::string mode = "exact";
  double tol = kDefaultTolerance;
  std::string seed_text;
  std::uint64_t seed = kDefaultSeed;
  std::string format_text = "table";
  Format format = Format::table;
  std::string output;

  bool is_float() const { return mode == "float"; }

  void switch_to_float(const std::string& why) {
    if (!is_float()) {
      std::cerr << "warning: " << why << "; switching to float mode\n";
      mode = "float";
    }
  }
};

// Output goes to --output if given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidInput, "cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Json report(const std::string& command) { return Json{{"schema", "gw/1"}, {"command", command}}; }

SpaceDescriptor load_space(const std::string& ref) {
  namespace fs = std::filesystem;
  if (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json") {
    std::ifstream in(ref);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + ref);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidDescriptor, std::string("malformed JSON: ") + e.what());
    }
    return descriptor_from_json(j);
  }
  return catalog_from_ref(ref);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Every literal is kept as a rational; float literals are converted exactly
// and flip the session into float mode.
Rational read_number(const std::string& text, Session& s) {
  const NumberLiteral lit = parse_number(text);
  if (std::holds_alternative<double>(lit)) {
    s.switch_to_float("float literal '" + text + "'");
    return Rational(std::get<double>(lit));
  }
  return std::get<Rational>(lit);
}

InvariantMetric read_metric(const std::string& text, Session& s) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(ErrorCode::InvalidInput, "--metric takes three values l1,l2,l3");
  return InvariantMetric(read_number(parts[0], s), read_number(parts[1], s), read_number(parts[2], s));
}

AlgebraVector<Rational> read_vector(const std::string& text, const SpaceDescriptor& d, Session& s) {
  AlgebraVector<Rational> v(d.algebra_ptr());
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "expected label=value, got '" + item + "'");
    v[d.algebra().index_of(item.substr(0, eq))] += read_number(item.substr(eq + 1), s);
  }
  return v;
}

AlgebraVector<double> to_double(const AlgebraVector<Rational>& v) { return convert<double>(v); }

std::string cell(const Rational& x) { return to_string(x); }
std::string cell(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

template <class S>
std::string vector_text(const AlgebraVector<S>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (detail::exactly_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + cell(v[i]) + ") " + v.algebra().label(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- space

int cmd_space_list(Session& s) {
  const auto entries = catalog_entries();
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report("space list");
    j["spaces"] = Json::array();
    for (const auto& e : entries) j["spaces"].push_back({{"name", e.name}, {"params", e.params}, {"summary", e.summary}});
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    sink.out() << "name,params,summary\n";
    for (const auto& e : entries) sink.out() << e.name << ",\"" << e.params << "\",\"" << e.summary << "\"\n";
  } else {
    for (const auto& e : entries) {
      sink.out() << std::left << std::setw(18) << e.name << std::setw(10) << e.params << e.summary << "\n";
    }
  }
  return kOk;
}

Json verification_json(const VerificationReport& r, const LieAlgebra& alg) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"condition", x.condition}, {"a", alg.label(x.a)}, {"b", alg.label(x.b)}, {"detail", x.detail}});
  }
  return Json{{"ok", r.ok()},
              {"violations", v},
              {"irreducibility_checked", r.irreducibility_checked},
              {"irreducibility_warning", r.irreducibility_warning}};
}

int show_space(Session& s, const SpaceDescriptor& d, const std::string& command) {
  const auto rep = verify_space(d);
  const LieAlgebra& alg = d.algebra();
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report(command);
    j["space"] = d.name();
    j["dims"] = {{"l", d.dim_k()}, {"d1", d.dim_m(1)}, {"d2", d.dim_m(2)}, {"d3", d.dim_m(3)}};
    j["descriptor"] = descriptor_to_json(d);
    j["verification"] = verification_json(rep, alg);
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    sink.out() << "index,label,part,gram\n";
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const int m = d.module_of(i);
      sink.out() << i << "," << alg.label(i) << "," << (m == 0 ? "k" : "m" + std::to_string(m)) << ","
                 << to_string(alg.gram()(i, i)) << "\n";
    }
  } else {
    auto& o = sink.out();
    o << "space " << d.name() << "  dim g = " << alg.dim() << "  (l, d1, d2, d3) = (" << d.dim_k() << ", "
      << d.dim_m(1) << ", " << d.dim_m(2) << ", " << d.dim_m(3) << ")\n";
    for (Part p : {Part::k, Part::m1, Part::m2, Part::m3}) {
      o << "  " << std::setw(3) << to_string(p) << ": ";
      for (std::size_t i : d.indices(p)) o << alg.label(i) << " ";
      o << "\n";
    }
    o << "  B(e,e): ";
    for (std::size_t i = 0; i < alg.dim(); ++i) o << alg.label(i) << "=" << to_string(alg.gram()(i, i)) << " ";
    o << "\nverification: " << (rep.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& v : rep.violations) {
      o << "  " << v.condition << " (" << alg.label(v.a) << ", " << alg.label(v.b) << "): " << v.detail << "\n";
    }
    o << "module irreducibility: not checked" << (rep.irreducibility_warning ? " (user-supplied descriptor)" : "")
      << "\n";
  }
  return rep.ok() ? kOk : kInvalidDescriptor;
}

// ---------------------------------------------------------------- symbols

int cmd_symbols(Session& s, const std::string& space) {
  const auto d = load_space(space);
  const auto t = triple_symbols(d);
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report("symbols");
    j["space"] = d.name();
    Json vals = Json::object();
    for (int i = 1; i <= 3; ++i) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) vals[std::to_string(i) + std::to_string(k) + std::to_string(l)] = to_string(t(i, k, l));
      }
    }
    j["symbols"] = vals;
    sink.out() << j.dump(2) << "\n";
  } else {
    if (s.format == Format::csv) sink.out() << "i,j,k,value\n";
    for (int i = 1; i <= 3; ++i) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          if (s.format == Format::csv) {
            sink.out() << i << "," << k << "," << l << "," << to_string(t(i, k, l)) << "\n";
          } else {
            sink.out() << "[" << i << k << l << "] = " << to_string(t(i, k, l)) << "\n";
          }
        }
      }
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- geodesic

template <class S>
int geodesic_check(Session& s, const SpaceDescriptor& d, const InvariantMetric& g, const AlgebraVector<S>& x) {
  const auto r = is_geodesic_vector(x, g, d, s.tol);
  const auto& rows = d.indices(Part::m);
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report("geodesic check");
    j["space"] = d.name();
    j["metric"] = g.str();
    j["mode"] = s.mode;
    j["vector"] = vector_json(x);
    j["geodesic"] = r.geodesic;
    Json res = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) res.push_back({{"row", d.algebra().label(rows[i])}, {"value", scalar_json(r.residuals[i])}});
    j["residuals"] = res;
    sink.out() << j.dump(2) << "\n";
  } else {
    if (s.format == Format::csv) sink.out() << "row,residual\n";
    else sink.out() << "X = " << vector_text(x) << "\n" << (r.geodesic ? "geodesic" : "not geodesic") << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      sink.out() << (s.format == Format::csv ? "" : "  r[") << d.algebra().label(rows[i])
                 << (s.format == Format::csv ? "," : "] = ") << cell(r.residuals[i]) << "\n";
    }
  }
  return r.geodesic ? kOk : kFailure;
}

template <class S>
int geodesic_complete(Session& s, const SpaceDescriptor& d, const InvariantMetric& g, const AlgebraVector<S>& xm) {
  Completion<S> c = [&] {
    if constexpr (std::is_same_v<S, double>) {
      return completion_exists(xm, g, d, s.tol);
    } else {
      return completion_exists(xm, g, d);
    }
  }();
  const LieAlgebra& alg = d.algebra();
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report("geodesic complete");
    j["space"] = d.name();
    j["metric"] = g.str();
    j["mode"] = s.mode;
    j["x_m"] = vector_json(xm);
    j["system"] = system_json(c.system, alg);
    j["rank_A"] = c.rank_a;
    j["rank_AB"] = c.rank_ab;
    j["completion_exists"] = c.xk.has_value();
    if (c.xk) {
      j["x_k"] = vector_json(*c.xk);
      j["geodesic_vector"] = vector_json(*c.xk + xm);
    }
    sink.out() << j.dump(2) << "\n";
  } else {
    auto& o = sink.out();
    const char* sep = s.format == Format::csv ? "," : "  ";
    if (s.format == Format::csv) {
      o << "row";
      for (std::size_t col : c.system.cols) o << ",A[" << alg.label(col) << "]";
      o << ",B\n";
    } else {
      o << "x_m = " << vector_text(xm) << "\nA | B   (columns:";
      for (std::size_t col : c.system.cols) o << " " << alg.label(col);
      o << ")\n";
    }
    for (std::size_t r = 0; r < c.system.rows.size(); ++r) {
      o << (s.format == Format::csv ? "" : "  ") << alg.label(c.system.rows[r]);
      for (std::size_t col = 0; col < c.system.cols.size(); ++col) o << sep << cell(c.system.a(r, col));
      o << sep << (s.format == Format::csv ? "" : "| ") << cell(c.system.b[r]) << "\n";
    }
    if (s.format == Format::table) {
      o << "rank(A) = " << c.rank_a << ", rank(A|B) = " << c.rank_ab << "\n";
      if (c.xk) {
        o << "completion: x_k = " << vector_text(*c.xk) << "\n";
      } else {
        o << "no completion: x_m + a is not geodesic for any a in k\n";
      }
    }
  }
  return c.xk ? kOk : kFailure;
}

// ---------------------------------------------------------------- classify

Json probe_json(const Probe& p) { return Json{{"kind", p.kind()}, {"x", vector_json(p.x)}}; }

int cmd_classify(Session& s, const std::string& space, const std::string& metric_text, std::size_t random_probes,
                 std::size_t random_metrics) {
  const auto d = load_space(space);
  if (s.is_float()) std::cerr << "warning: classify always runs in exact arithmetic\n";
  const auto plan = make_probe_plan(d, random_probes, s.seed);
  Sink sink(s.output);
  if (!metric_text.empty()) {
    Session tmp = s;
    const auto g = read_metric(metric_text, tmp);
    const auto r = is_go_metric(d, g, plan);
    if (s.format == Format::json) {
      Json j = report("classify");
      j["space"] = d.name();
      j["metric"] = g.str();
      j["pass"] = r.pass;
      j["probes"] = {{"structured", plan.structured_count}, {"random", plan.random_count}, {"run", r.probes_run}};
      j["seed"] = s.seed;
      j["rhs_nonzero"] = r.rhs_nonzero;
      if (r.witness) j["witness"] = probe_json(plan.probes[*r.witness]);
      j["note"] = "pass is certified only on the probe set";
      sink.out() << j.dump(2) << "\n";
    } else {
      sink.out() << d.name() << " metric (" << g.str() << "): " << (r.pass ? "pass" : "FAIL") << " after "
                 << r.probes_run << " of " << plan.probes.size() << " probes (" << plan.structured_count
                 << " structured, " << plan.random_count << " random, seed " << s.seed << ")\n";
      if (r.witness) {
        const auto& p = plan.probes[*r.witness];
        sink.out() << "witness (" << p.kind() << "): x_m = " << vector_text(p.x) << "\n";
      }
    }
    return r.pass ? kOk : kFailure;
  }
  const auto metrics = metric_grid(random_metrics, s.seed);
  const auto c = classify_space(d, metrics, plan);
  if (s.format == Format::json) {
    Json j = report("classify");
    j["space"] = d.name();
    j["verdict"] = to_string(c.verdict);
    j["probes"] = {{"structured", plan.structured_count}, {"random", plan.random_count}, {"total", plan.probes.size()}};
    j["seed"] = s.seed;
    j["metric_count"] = metrics.size();
    Json table = Json::array();
    for (const auto& r : c.results) {
      Json row{{"metric", r.metric.str()},
               {"standard", r.metric.is_standard()},
               {"pass", r.pass},
               {"probes_run", r.probes_run},
               {"rhs_nonzero", r.rhs_nonzero}};
      if (r.witness) row["witness"] = probe_json(plan.probes[*r.witness]);
      table.push_back(std::move(row));
    }
    j["metrics"] = table;
    if (c.witness_metric) j["witness_metric"] = c.results[*c.witness_metric].metric.str();
    j["note"] = "pass is certified only on the probe set";
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    sink.out() << "metric,standard,pass,probes_run,rhs_nonzero,witness_kind\n";
    for (const auto& r : c.results) {
      sink.out() << "\"" << r.metric.str() << "\"," << r.metric.is_standard() << "," << r.pass << "," << r.probes_run
                 << "," << r.rhs_nonzero << "," << (r.witness ? plan.probes[*r.witness].kind() : "") << "\n";
    }
  } else {
    auto& o = sink.out();
    o << d.name() << ": " << to_string(c.verdict) << "\n"
      << "  " << metrics.size() << " metrics, " << plan.probes.size() << " probes each (" << plan.structured_count
      << " structured, " << plan.random_count << " random, seed " << s.seed << ")\n"
      << "  pass is certified only on the probe set\n";
    for (const auto& r : c.results) {
      o << "  (" << r.metric.str() << ") " << (r.pass ? "pass" : "fail");
      if (r.witness) o << "  witness " << plan.probes[*r.witness].kind() << ": " << vector_text(plan.probes[*r.witness].x);
      o << "\n";
    }
  }
  return c.verdict == Verdict::undetermined ? kFailure : kOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(Session& s, const std::string& which, const std::string& metric_text) {
  const auto g = read_metric(metric_text, s);
  if (s.is_float()) std::cerr << "warning: enumeration always runs in exact arithmetic\n";
  std::vector<SolutionFamily> fams;
  std::vector<ShapeAudit> audit;
  SpaceDescriptor d = which == "su2" ? catalog("su2_trivial") : catalog("stiefel_n", {4});
  if (which == "su2") {
    fams = enumerate_su2(g);
  } else if (which == "stiefel4") {
    fams = enumerate_stiefel4(g);
    audit = audit_stiefel4_shapes(g);
  } else {
    throw Error(ErrorCode::InvalidInput, "enumerate takes su2 or stiefel4");
  }
  const LieAlgebra& alg = d.algebra();
  Sink sink(s.output);
  if (s.format == Format::json) {
    Json j = report("enumerate");
    j["space"] = d.name();
    j["metric"] = g.str();
    j["pattern"] = metric_pattern(g);
    j["families"] = Json::array();
    for (const auto& f : fams) j["families"].push_back(family_json(f, alg));
    if (which == "stiefel4") {
      Json a = Json::array();
      for (const auto& x : audit) {
        Json row{{"branch", x.shape.branch}, {"shape", x.shape.text}, {"verdict", to_string(x.verdict)},
                 {"surviving_residuals", x.surviving}};
        if (x.matched_family) row["matched_family"] = *x.matched_family;
        a.push_back(std::move(row));
      }
      j["listed_shape_audit"] = a;
    }
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    sink.out() << "index,branch,free,fixed_zero,nonzero,constraints\n";
    for (std::size_t i = 0; i < fams.size(); ++i) {
      std::string cons;
      for (const auto& c : fams[i].constraints) cons += (cons.empty() ? "" : "; ") + c.str(alg.labels());
      auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : " ") + x;
        return out;
      };
      sink.out() << i << "," << fams[i].branch << "," << join(fams[i].free_params) << "," << join(fams[i].fixed_zero)
                 << "," << join(fams[i].nonzero) << ",\"" << cons << "\"\n";
    }
  } else {
    auto& o = sink.out();
    o << d.name() << " metric (" << g.str() << "), " << metric_pattern(g) << ": " << fams.size() << " families\n";
    for (std::size_t i = 0; i < fams.size(); ++i) o << "  [" << i << "] " << fams[i].branch << ": " << fams[i].description << "\n";
    if (!audit.empty()) {
      o << "listed shape audit:\n";
      for (const auto& x : audit) {
        o << "  " << std::left << std::setw(12) << to_string(x.verdict) << x.shape.branch << ": " << x.shape.text;
        if (x.matched_family) o << "  -> family [" << *x.matched_family << "]";
        o << "\n";
        for (const auto& r : x.surviving) o << "      residual " << r << "\n";
      }
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- sample

int cmd_sample(Session& s, const std::string& space, const std::string& metric_text, std::size_t attempts,
               bool check_families) {
  const auto d = load_space(space);
  const auto g = read_metric(metric_text, s);
  SamplerStats stats;
  const auto sols = sample_geodesic_vectors(d, g, attempts, s.seed, &stats);
  std::vector<SolutionFamily> fams;
  if (check_families) {
    if (d.name() == "stiefel_n:4") {
      fams = enumerate_stiefel4(g);
    } else if (d.name() == "su2_trivial") {
      fams = enumerate_su2(g);
    } else {
      throw Error(ErrorCode::InvalidInput, "--check-families needs su2_trivial or stiefel_n:4");
    }
  }
  std::vector<double> dist;
  for (const auto& x : sols) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : fams) best = std::min(best, family_distance(x, f, d));
    dist.push_back(best);
  }
  const double max_dist = dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
  Sink sink(s.output);
  const LieAlgebra& alg = d.algebra();
  if (s.format == Format::json) {
    Json j = report("sample");
    j["space"] = d.name();
    j["metric"] = g.str();
    j["seed"] = s.seed;
    j["attempts"] = stats.attempts;
    j["converged"] = stats.converged;
    j["distinct"] = stats.distinct;
    j["labels"] = alg.labels();
    Json arr = Json::array();
    for (const auto& x : sols) arr.push_back(std::vector<double>(x.coeffs().begin(), x.coeffs().end()));
    j["solutions"] = arr;
    if (check_families) j["max_family_distance"] = max_dist;
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    for (std::size_t i = 0; i < alg.dim(); ++i) sink.out() << (i ? "," : "") << alg.label(i);
    sink.out() << (check_families ? ",family_distance" : "") << "\n";
    for (std::size_t n = 0; n < sols.size(); ++n) {
      for (std::size_t i = 0; i < alg.dim(); ++i) sink.out() << (i ? "," : "") << cell(sols[n][i]);
      if (check_families) sink.out() << "," << cell(dist[n]);
      sink.out() << "\n";
    }
  } else {
    auto& o = sink.out();
    o << d.name() << " metric (" << g.str() << "): " << stats.converged << " of " << stats.attempts
      << " starts converged, " << stats.distinct << " distinct directions (seed " << s.seed << ")\n";
    if (check_families) o << "max distance to enumerated families: " << cell(max_dist) << "\n";
    for (std::size_t n = 0; n < sols.size() && n < 20; ++n) o << "  " << vector_text(sols[n]) << "\n";
    if (sols.size() > 20) o << "  ... (" << sols.size() - 20 << " more)\n";
  }
  if (check_families && max_dist > 1e-8) return kFailure;
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_euler_arnold(Session& s, const std::string& space, const std::string& metric_text, const std::string& v0_text,
                     double t_end, double dt, std::size_t record_every) {
  const auto d = load_space(space);
  const auto g = read_metric(metric_text, s);
  const auto v0 = read_vector(v0_text, d, s);
  const auto flow = euler_arnold_flow(to_double(v0), g, d, t_end, dt, record_every);
  const bool geodesic = is_geodesic_vector(v0, g, d).geodesic;
  const bool stationary = flow.drift < 1e-8;
  Sink sink(s.output);
  const LieAlgebra& alg = d.algebra();
  if (s.format == Format::json) {
    Json j = report("verify euler-arnold");
    j["space"] = d.name();
    j["metric"] = g.str();
    j["v0"] = vector_json(v0);
    j["T"] = t_end;
    j["dt"] = dt;
    j["steps"] = flow.steps;
    j["drift"] = flow.drift;
    j["energy_drift"] = flow.energy_drift;
    j["stationary"] = stationary;
    j["geodesic"] = geodesic;
    j["consistent"] = stationary == geodesic;
    sink.out() << j.dump(2) << "\n";
  } else if (s.format == Format::csv) {
    sink.out() << "t";
    for (std::size_t i = 0; i < alg.dim(); ++i) sink.out() << "," << alg.label(i);
    sink.out() << ",drift,energy\n";
    for (std::size_t n = 0; n < flow.times.size(); ++n) {
      sink.out() << cell(flow.times[n]);
      for (double x : flow.states[n]) sink.out() << "," << cell(x);
      sink.out() << "," << cell(flow.drift_log[n]) << "," << cell(flow.energy[n]) << "\n";
    }
  } else {
    sink.out() << "v0 = " << vector_text(v0) << ", T = " << t_end << ", dt = " << dt << "\n"
               << "drift " << cell(flow.drift) << ", relative energy drift " << cell(flow.energy_drift) << "\n"
               << (stationary ? "stationary" : "moving") << "; algebraic check: "
               << (geodesic ? "geodesic" : "not geodesic") << (stationary == geodesic ? "" : "  (DISAGREE)") << "\n";
  }
  return stationary == geodesic ? kOk : kFailure;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidDescriptor:
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::NotCompactSemisimple:
      return kInvalidDescriptor;
    case ErrorCode::Internal:
      return kFailure;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic vectors and g.o. metrics on generalized Wallach spaces"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--mode", s.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", s.tol, "float-mode tolerance");
  app.add_option("--seed", s.seed_text, "random seed (decimal or 0x hex; GW_SEED otherwise)");
  app.add_option("--format", s.format_text, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--output,-o", s.output, "write the report to a file");

  std::function<int()> run;

  auto* space = app.add_subcommand("space", "catalog inventory and descriptor checks");
  space->require_subcommand(1);
  space->add_subcommand("list", "list catalog spaces")->callback([&] { run = [&] { return cmd_space_list(s); }; });
  std::string show_name;
  std::vector<int> show_params;
  auto* show = space->add_subcommand("show", "descriptor dump and verification");
  show->add_option("name", show_name, "catalog name or name:params")->required();
  show->add_option("params", show_params, "catalog parameters");
  show->callback([&] {
    run = [&] {
      const auto d = show_params.empty() ? catalog_from_ref(show_name) : catalog(show_name, show_params);
      return show_space(s, d, "space show");
    };
  });
  std::string check_file;
  auto* check = space->add_subcommand("check", "load and verify a descriptor file");
  check->add_option("file", check_file, "descriptor JSON")->required();
  check->callback([&] {
    run = [&] {
      std::ifstream in(check_file);
      if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + check_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidDescriptor, std::string("malformed JSON: ") + e.what());
      }
      return show_space(s, descriptor_from_json(j), "space check");
    };
  });

  std::string space_ref, metric_text, vector_text_arg;
  auto* symbols = app.add_subcommand("symbols", "triple symbols [ijk]");
  symbols->add_option("space", space_ref)->required();
  symbols->callback([&] { run = [&] { return cmd_symbols(s, space_ref); }; });

  auto* geo = app.add_subcommand("geodesic", "geodesic-vector criterion and completion");
  geo->require_subcommand(1);
  auto* gcheck = geo->add_subcommand("check", "evaluate the geodesic criterion");
  gcheck->add_option("space", space_ref)->required();
  gcheck->add_option("--metric", metric_text, "l1,l2,l3")->required();
  gcheck->add_option("--vector", vector_text_arg, "label=value,...")->required();
  gcheck->callback([&] {
    run = [&] {
      const auto d = load_space(space_ref);
      const auto g = read_metric(metric_text, s);
      const auto x = read_vector(vector_text_arg, d, s);
      return s.is_float() ? geodesic_check(s, d, g, to_double(x)) : geodesic_check(s, d, g, x);
    };
  });
  auto* gcomp = geo->add_subcommand("complete", "solve for the k-part of a geodesic vector");
  gcomp->add_option("space", space_ref)->required();
  gcomp->add_option("--metric", metric_text, "l1,l2,l3")->required();
  gcomp->add_option("--mvector", vector_text_arg, "label=value,... on m")->required();
  gcomp->callback([&] {
    run = [&] {
      const auto d = load_space(space_ref);
      const auto g = read_metric(metric_text, s);
      const auto x = read_vector(vector_text_arg, d, s);
      return s.is_float() ? geodesic_complete(s, d, g, to_double(x)) : geodesic_complete(s, d, g, x);
    };
  });

  std::size_t random_probes = 200, random_metrics = 50;
  auto* cls = app.add_subcommand("classify", "g.o. test for one metric or the full metric grid");
  cls->add_option("space", space_ref)->required();
  cls->add_option("--metric", metric_text, "test a single metric");
  cls->add_option("--random-probes", random_probes, "random probes per metric");
  cls->add_option("--random-metrics", random_metrics, "random metrics after the grid");
  cls->callback([&] { run = [&] { return cmd_classify(s, space_ref, metric_text, random_probes, random_metrics); }; });

  std::string which;
  auto* en = app.add_subcommand("enumerate", "closed-form solution families");
  en->add_option("which", which, "su2 or stiefel4")->required()->check(CLI::IsMember({"su2", "stiefel4"}));
  en->add_option("--metric", metric_text, "l1,l2,l3")->required();
  en->callback([&] { run = [&] { return cmd_enumerate(s, which, metric_text); }; });

  std::size_t attempts = 100;
  bool check_families = false;
  auto* smp = app.add_subcommand("sample", "Newton sampler for geodesic vectors");
  smp->add_option("space", space_ref)->required();
  smp->add_option("--metric", metric_text, "l1,l2,l3")->required();
  smp->add_option("--attempts", attempts, "random starts");
  smp->add_flag("--check-families", check_families, "distance to the enumerated families (su2_trivial, stiefel_n:4)");
  smp->callback([&] { run = [&] { return cmd_sample(s, space_ref, metric_text, attempts, check_families); }; });

  auto* ver = app.add_subcommand("verify", "independent oracles");
  ver->require_subcommand(1);
  std::string ea_space = "su2_trivial", v0_text;
  double t_end = 10, dt = 1e-3;
  std::size_t record_every = 100;
  auto* ea = ver->add_subcommand("euler-arnold", "Euler-Arnold flow from v0 (k = 0 spaces)");
  ea->add_option("--space", ea_space, "space with k = 0");
  ea->add_option("--metric", metric_text, "l1,l2,l3")->required();
  ea->add_option("--v0", v0_text, "label=value,...")->required();
  ea->add_option("--T", t_end, "duration");
  ea->add_option("--dt", dt, "RK4 step");
  ea->add_option("--record-every", record_every, "steps between recorded samples");
  ea->callback([&] { run = [&] { return cmd_euler_arnold(s, ea_space, metric_text, v0_text, t_end, dt, record_every); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!s.seed_text.empty()) {
      s.seed = std::stoull(s.seed_text, nullptr, 0);
    } else if (const char* env = std::getenv("GW_SEED")) {
      s.seed = std::stoull(env, nullptr, 0);
    }
  } catch (const std::logic_error&) {
    std::cerr << "error: bad seed\n";
    return kUsage;
  }
  s.format = s.format_text == "json" ? Format::json : s.format_text == "csv" ? Format::csv : Format::table;

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

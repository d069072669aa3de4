#include "gw/json_io.hpp"

#include "gw/catalog.hpp"

namespace gw {

namespace {

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::InvalidAlgebra, "structure constants must be integers or \"p/q\" strings");
}

std::size_t json_index(const Json& v, std::size_t dim) {
  if (!v.is_number_integer() || v.get<long>() < 0 || static_cast<std::size_t>(v.get<long>()) >= dim) {
    throw Error(ErrorCode::InvalidAlgebra, "basis index out of range: " + v.dump());
  }
  return v.get<std::size_t>();
}

}  // namespace

Json algebra_to_json(const LieAlgebra& alg) {
  Json structure = Json::array();
  for (const auto& e : alg.structure_entries()) structure.push_back({e.a, e.b, e.g, to_string(e.value)});
  Json gram = Json::array();
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < alg.dim(); ++b) row.push_back(to_string(alg.gram()(a, b)));
    gram.push_back(std::move(row));
  }
  return Json{{"dim", alg.dim()}, {"labels", alg.labels()}, {"structure", std::move(structure)}, {"gram", std::move(gram)}};
}

AlgebraPtr algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("labels") || !j.contains("structure")) {
    throw Error(ErrorCode::InvalidAlgebra, "algebra JSON needs dim, labels and structure");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() <= 0) {
    throw Error(ErrorCode::InvalidAlgebra, "dim must be a positive integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  if (!j["labels"].is_array() || j["labels"].size() != dim) {
    throw Error(ErrorCode::InvalidAlgebra, "labels must list dim strings");
  }
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw Error(ErrorCode::InvalidAlgebra, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (!j["structure"].is_array()) throw Error(ErrorCode::InvalidAlgebra, "structure must be an array");
  std::vector<StructureEntry> entries;
  for (const auto& e : j["structure"]) {
    if (!e.is_array() || e.size() != 4) throw Error(ErrorCode::InvalidAlgebra, "structure entries are [a, b, g, value]");
    entries.push_back({json_index(e[0], dim), json_index(e[1], dim), json_index(e[2], dim), json_rational(e[3])});
  }
  auto alg = std::make_shared<const LieAlgebra>(std::move(labels), entries);
  if (j.contains("gram")) {
    const auto& g = j["gram"];
    bool ok = g.is_array() && g.size() == dim;
    for (std::size_t a = 0; ok && a < dim; ++a) {
      ok = g[a].is_array() && g[a].size() == dim;
      for (std::size_t b = 0; ok && b < dim; ++b) ok = json_rational(g[a][b]) == alg->gram()(a, b);
    }
    if (!ok) throw Error(ErrorCode::InvalidAlgebra, "supplied gram differs from -trace(ad o ad)");
  }
  return alg;
}

AlgebraPtr algebra_from_ref(const Json& ref) {
  if (ref.is_array()) {
    std::vector<AlgebraPtr> parts;
    for (const auto& r : ref) parts.push_back(algebra_from_ref(r));
    return build_direct_sum(parts);
  }
  if (!ref.is_string()) throw Error(ErrorCode::InvalidDescriptor, "algebra reference must be a string or an array");
  const auto s = ref.get<std::string>();
  if (s == "su2") return build_su2_basis();
  if (s.rfind("so:", 0) == 0) {
    try {
      return build_so_basis(std::stoi(s.substr(3)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidDescriptor, "bad algebra reference '" + s + "'");
    }
  }
  throw Error(ErrorCode::InvalidDescriptor, "unknown algebra reference '" + s + "'");
}

Json descriptor_to_json(const SpaceDescriptor& d) {
  Json out{{"name", d.name()}, {"algebra", algebra_to_json(d.algebra())}};
  for (Part p : {Part::k, Part::m1, Part::m2, Part::m3}) out[to_string(p)] = d.indices(p);
  return out;
}

SpaceDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra")) throw Error(ErrorCode::InvalidDescriptor, "descriptor needs an algebra");
  AlgebraPtr alg;
  try {
    alg = j["algebra"].is_object() ? algebra_from_json(j["algebra"]) : algebra_from_ref(j["algebra"]);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidDescriptor) throw;
    throw Error(ErrorCode::InvalidDescriptor, std::string("algebra: ") + e.what());
  }
  auto read = [&](const char* key) {
    std::vector<std::size_t> out;
    if (!j.contains(key)) {
      if (std::string(key) == "k") return out;
      throw Error(ErrorCode::InvalidDescriptor, std::string("descriptor lacks ") + key);
    }
    if (!j[key].is_array()) throw Error(ErrorCode::InvalidDescriptor, std::string(key) + " must be an array");
    for (const auto& v : j[key]) {
      if (v.is_string()) {
        const auto idx = alg->find(v.get<std::string>());
        if (!idx) throw Error(ErrorCode::InvalidDescriptor, "unknown label " + v.dump() + " in " + key);
        out.push_back(*idx);
      } else if (v.is_number_integer() && v.get<long>() >= 0) {
        out.push_back(v.get<std::size_t>());
      } else {
        throw Error(ErrorCode::InvalidDescriptor, std::string("bad entry in ") + key + ": " + v.dump());
      }
    }
    return out;
  };
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "user";
  return SpaceDescriptor(name, alg, read("k"), read("m1"), read("m2"), read("m3"), true);
}

Json family_json(const SolutionFamily& f, const LieAlgebra& alg) {
  Json deps = Json::array();
  for (const auto& d : f.dependent) deps.push_back({{"label", d.label}, {"constraint", d.constraint}});
  Json cons = Json::array();
  for (const auto& c : f.constraints) cons.push_back(c.str(alg.labels()));
  return Json{{"branch", f.branch},         {"free", f.free_params}, {"fixed_zero", f.fixed_zero},
              {"nonzero", f.nonzero},       {"dependent", deps},     {"constraints", cons},
              {"description", f.description}};
}

}  // namespace gw

#pragma once

// JSON forms of algebras, space descriptors, systems and families.

#include <json.hpp>

#include "gw/geodesic.hpp"
#include "gw/solve_small.hpp"

namespace gw {

using Json = nlohmann::ordered_json;

/// Exact scalars become strings ("p/q"), doubles stay numbers.
inline Json scalar_json(const Rational& x) { return to_string(x); }
inline Json scalar_json(double x) { return x; }
inline Json scalar_json(const QuadraticSurd& x) { return x.str(); }

/// {"dim", "labels", "structure": [[a, b, g, "p/q"], ...] with a < b, "gram"}.
Json algebra_to_json(const LieAlgebra& alg);

/// Missing antisymmetric partners are filled in; a "gram" field, if present,
/// must equal the ad-trace Gram matrix. Throws Error(InvalidAlgebra) or
/// Error(NotCompactSemisimple).
AlgebraPtr algebra_from_json(const Json& j);

/// "so:<n>", "su2", or an array of such references for a direct sum.
AlgebraPtr algebra_from_ref(const Json& ref);

/// {"name", "algebra", "k", "m1", "m2", "m3"} with index lists.
Json descriptor_to_json(const SpaceDescriptor& d);

/// "algebra" is an algebra object or a reference; index lists hold basis
/// indices or labels. Throws Error(InvalidDescriptor) for malformed input.
SpaceDescriptor descriptor_from_json(const Json& j);

template <class S>
Json vector_json(const AlgebraVector<S>& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!detail::exactly_zero(v[i])) out[v.algebra().label(i)] = scalar_json(v[i]);
  }
  return out;
}

template <class S>
Json system_json(const GeodesicSystem<S>& sys, const LieAlgebra& alg) {
  Json a = Json::array();
  for (std::size_t r = 0; r < sys.a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < sys.a.cols(); ++c) row.push_back(scalar_json(sys.a(r, c)));
    a.push_back(std::move(row));
  }
  Json b = Json::array();
  for (const auto& x : sys.b) b.push_back(scalar_json(x));
  Json rows = Json::array(), cols = Json::array();
  for (std::size_t r : sys.rows) rows.push_back(alg.label(r));
  for (std::size_t c : sys.cols) cols.push_back(alg.label(c));
  return Json{{"A", std::move(a)}, {"B", std::move(b)}, {"rows", std::move(rows)}, {"cols", std::move(cols)}};
}

Json family_json(const SolutionFamily& f, const LieAlgebra& alg);

}  // namespace gw

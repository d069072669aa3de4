#include "gw/catalog.hpp"

#include <charconv>
#include <sstream>

namespace gw {

namespace {

std::string join_params(const std::vector<int>& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

void expect_params(std::string_view name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorCode::InvalidInput, std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                                             std::to_string(params.size()));
  }
}

SpaceDescriptor so_klm(const std::vector<int>& p, std::string name) {
  const int k = p[0], l = p[1], m = p[2];
  if (k < 1 || l < 1 || m < 1 || k + l + m < 3) {
    throw Error(ErrorCode::InvalidInput, "so_klm needs k, l, m >= 1 and k+l+m >= 3");
  }
  const int n = k + l + m;
  auto alg = build_so_basis(n);
  auto block = [&](int i) { return i <= k ? 1 : (i <= k + l ? 2 : 3); };
  std::vector<std::size_t> kk, m1, m2, m3;
  std::size_t idx = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++idx) {
      const int bi = block(i), bj = block(j);
      if (bi == bj) {
        kk.push_back(idx);
      } else if (bi == 1 && bj == 2) {
        m1.push_back(idx);
      } else if (bi == 1 && bj == 3) {
        m2.push_back(idx);
      } else {
        m3.push_back(idx);
      }
    }
  }
  return SpaceDescriptor(std::move(name), alg, kk, m1, m2, m3);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"su2_trivial", "", "SU(2)/{e}; m1, m2, m3 spanned by ih, X_a, Y_a"},
      {"stiefel_n", "n>=4", "SO(n)/SO(n-2); m1 = <e12>, m2 = <e1j>, m3 = <e2j>, j >= 3"},
      {"so_klm", "k,l,m>=1", "SO(k+l+m)/SO(k)xSO(l)xSO(m); mi are the off-diagonal block strips"},
      {"product_s2_cubed", "", "(S^2)^3 = SO(3)^3/SO(2)^3; mi is the symmetric complement in factor i"},
      {"quad_diag_su2", "", "SU(2)^4/diag SU(2); m1 = (X,X,-X,-X), m2 = (X,-X,X,-X), m3 = (X,-X,-X,X)"},
  };
}

SpaceDescriptor catalog(std::string_view name, const std::vector<int>& params) {
  if (name == "su2_trivial") {
    expect_params(name, params, 0);
    return SpaceDescriptor("su2_trivial", build_su2_basis(), {}, {0}, {1}, {2});
  }
  if (name == "so_klm") {
    expect_params(name, params, 3);
    return so_klm(params, "so_klm:" + join_params(params));
  }
  if (name == "stiefel_n") {
    expect_params(name, params, 1);
    if (params[0] < 4) throw Error(ErrorCode::InvalidInput, "stiefel_n needs n >= 4");
    return so_klm({1, 1, params[0] - 2}, "stiefel_n:" + std::to_string(params[0]));
  }
  if (name == "product_s2_cubed") {
    expect_params(name, params, 0);
    const AlgebraPtr so3 = build_so_basis(3);
    const AlgebraPtr parts[3] = {so3, so3, so3};
    auto alg = build_direct_sum(parts);
    // so(3) order is e12, e13, e23; k takes e12 of every factor.
    std::vector<std::size_t> k{0, 3, 6};
    return SpaceDescriptor("product_s2_cubed", alg, k, {1, 2}, {4, 5}, {7, 8});
  }
  if (name == "quad_diag_su2") {
    expect_params(name, params, 0);
    const AlgebraPtr su2 = build_su2_basis();
    const AlgebraPtr parts[4] = {su2, su2, su2, su2};
    auto sum = build_direct_sum(parts);
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    static const char* part_names[4] = {"k", "m1", "m2", "m3"};
    Matrix<Rational> rows(12, 12);
    std::vector<std::string> labels;
    for (int p = 0; p < 4; ++p) {
      for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 4; ++c) rows(static_cast<std::size_t>(p * 3 + a), static_cast<std::size_t>(c * 3 + a)) = sign[p][c];
        labels.push_back(su2->label(static_cast<std::size_t>(a)) + "@" + part_names[p]);
      }
    }
    auto alg = change_basis(*sum, rows, std::move(labels));
    return SpaceDescriptor("quad_diag_su2", alg, {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11});
  }
  throw Error(ErrorCode::UnknownSpace, "unknown catalog space '" + std::string(name) + "'");
}

SpaceDescriptor catalog_from_ref(std::string_view ref) {
  const auto colon = ref.find(':');
  const std::string_view name = ref.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = ref.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
        throw Error(ErrorCode::InvalidInput, "bad catalog parameter '" + std::string(tok) + "' in '" + std::string(ref) + "'");
      }
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return catalog(name, params);
}

}  // namespace gw

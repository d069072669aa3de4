#include "gw/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gw/exact_linalg.hpp"

namespace gw {

namespace {

using RationalTerms = std::vector<LieAlgebra::Term<Rational>>;

// Coefficient of e_g in [e_a, e_b] given a term list.
Rational lookup(const RationalTerms& terms, std::size_t g) {
  for (const auto& t : terms) {
    if (t.index == g) return t.value;
  }
  return Rational(0);
}

void accumulate(std::vector<Rational>& out, const RationalTerms& terms, const Rational& scale) {
  for (const auto& t : terms) out[t.index] += scale * t.value;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<StructureEntry>& entries)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "algebra must have positive dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw Error(ErrorCode::InvalidAlgebra, "empty basis label");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::InvalidAlgebra, "duplicate basis label '" + labels_[i] + "'");
    }
  }

  // (a, b, g) -> value, explicit entries first.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> given;
  for (const auto& e : entries) {
    if (e.a >= n || e.b >= n || e.g >= n) throw Error(ErrorCode::InvalidAlgebra, "structure index out of range");
    if (sgn(e.value) == 0) continue;
    if (e.a == e.b) {
      throw Error(ErrorCode::InvalidAlgebra, "antisymmetry: [" + labels_[e.a] + ", " + labels_[e.a] + "] != 0");
    }
    auto [it, inserted] = given.emplace(std::make_tuple(e.a, e.b, e.g), e.value);
    if (!inserted && it->second != e.value) {
      throw Error(ErrorCode::InvalidAlgebra, "conflicting entries for [" + labels_[e.a] + ", " + labels_[e.b] + "]");
    }
  }
  auto full = given;
  for (const auto& [key, value] : given) {
    const auto [a, b, g] = key;
    auto [it, inserted] = full.emplace(std::make_tuple(b, a, g), -value);
    if (!inserted && it->second != -value) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "antisymmetry: [" + labels_[a] + ", " + labels_[b] + "] and [" + labels_[b] + ", " + labels_[a] +
                      "] disagree on " + labels_[g]);
    }
  }

  terms_.assign(n * n, {});
  terms_f_.assign(n * n, {});
  for (const auto& [key, value] : full) {
    const auto [a, b, g] = key;
    terms_[a * n + b].push_back({g, value});
    terms_f_[a * n + b].push_back({g, value.get_d()});
  }

  if (auto w = find_jacobi_violation(*this)) {
    throw Error(ErrorCode::InvalidAlgebra, "Jacobi identity fails on (" + labels_[w->a] + ", " + labels_[w->b] +
                                               ", " + labels_[w->c] + ")");
  }

  gram_ = killing_gram(*this);
  if (!is_positive_definite(gram_)) {
    throw Error(ErrorCode::NotCompactSemisimple, "-Killing form is not positive definite");
  }
  gram_f_ = Matrix<double>(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) gram_f_(a, b) = gram_(a, b).get_d();
  }
}

std::optional<std::size_t> LieAlgebra::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LieAlgebra::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::InvalidInput, "unknown basis label '" + std::string(label) + "'");
}

Rational LieAlgebra::structure_constant(std::size_t a, std::size_t b, std::size_t g) const {
  return lookup(terms_[a * dim() + b], g);
}

std::vector<StructureEntry> LieAlgebra::structure_entries() const {
  std::vector<StructureEntry> out;
  const std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto terms = terms_[a * n + b];
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      for (const auto& t : terms) out.push_back({a, b, t.index, t.value});
    }
  }
  return out;
}

Matrix<Rational> killing_gram(const LieAlgebra& algebra) {
  // (ad e_a)_{g h} = c[a][h][g], so trace(ad e_a ad e_b) = sum_{h,g} c[a][h][g] c[b][g][h].
  const std::size_t n = algebra.dim();
  Matrix<Rational> gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Rational tr = 0;
      for (std::size_t h = 0; h < n; ++h) {
        for (const auto& t : algebra.terms<Rational>(a, h)) {
          tr += t.value * lookup(algebra.terms<Rational>(b, t.index), h);
        }
      }
      gram(a, b) = -tr;
      gram(b, a) = -tr;
    }
  }
  return gram;
}

std::optional<JacobiWitness> find_jacobi_violation(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Rational> sum(n);
  // [[x,y],z] for basis x, y, z.
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& t : algebra.terms<Rational>(x, y)) accumulate(sum, algebra.terms<Rational>(t.index, z), t.value);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::fill(sum.begin(), sum.end(), Rational(0));
        nested(a, b, c);
        nested(b, c, a);
        nested(c, a, b);
        for (const auto& s : sum) {
          if (sgn(s) != 0) return JacobiWitness{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::string so_label(int i, int j, int n) {
  std::ostringstream os;
  os << 'e' << i;
  if (n > 9) os << '_';
  os << j;
  return os.str();
}

AlgebraPtr build_so_basis(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidDimension, "so(n) needs n >= 3, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, std::size_t> idx;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      idx[{i, j}] = labels.size();
      labels.push_back(so_label(i, j, n));
    }
  }
  // e_xy with x > y is -e_yx; e_xx = 0.
  auto signed_index = [&](int x, int y) -> std::pair<std::size_t, int> {
    if (x < y) return {idx.at({x, y}), 1};
    return {idx.at({y, x}), -1};
  };
  // [e_ij, e_jk] = e_ik for distinct i, j, k; brackets of disjoint pairs vanish.
  // In general [e_ab, e_cd] = d_bc e_ad - d_ac e_bd - d_bd e_ac + d_ad e_bc.
  std::vector<StructureEntry> entries;
  for (const auto& [p, pa] : idx) {
    for (const auto& [q, qa] : idx) {
      if (pa >= qa) continue;
      const auto [a, b] = p;
      const auto [c, d] = q;
      std::map<std::size_t, Rational> acc;
      auto add = [&](int x, int y, int coeff) {
        if (x == y) return;
        auto [g, s] = signed_index(x, y);
        acc[g] += coeff * s;
      };
      if (b == c) add(a, d, 1);
      if (a == c) add(b, d, -1);
      if (b == d) add(a, c, -1);
      if (a == d) add(b, c, 1);
      for (const auto& [g, v] : acc) {
        if (sgn(v) != 0) entries.push_back({pa, qa, g, v});
      }
    }
  }
  return std::make_shared<const LieAlgebra>(std::move(labels), entries);
}

AlgebraPtr build_su2_basis() {
  // 0 = ih, 1 = X_a, 2 = Y_a
  std::vector<StructureEntry> entries{
      {0, 1, 2, Rational(1)},
      {0, 2, 1, Rational(-1)},
      {1, 2, 0, Rational(1)},
  };
  return std::make_shared<const LieAlgebra>(std::vector<std::string>{"ih", "X_a", "Y_a"}, entries);
}

AlgebraPtr build_direct_sum(std::span<const AlgebraPtr> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "direct sum of an empty list");
  std::vector<std::string> labels;
  std::vector<StructureEntry> entries;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!parts[p]) throw Error(ErrorCode::InvalidInput, "null algebra in direct sum");
    for (const auto& l : parts[p]->labels()) labels.push_back(l + "@" + std::to_string(p + 1));
    for (auto e : parts[p]->structure_entries()) {
      e.a += offset;
      e.b += offset;
      e.g += offset;
      entries.push_back(std::move(e));
    }
    offset += parts[p]->dim();
  }
  return std::make_shared<const LieAlgebra>(std::move(labels), entries);
}

AlgebraPtr change_basis(const LieAlgebra& algebra, const Matrix<Rational>& rows, std::vector<std::string> labels) {
  const std::size_t n = algebra.dim();
  if (rows.rows() != n || rows.cols() != n || labels.size() != n) {
    throw Error(ErrorCode::InvalidInput, "change of basis needs a square matrix matching the dimension");
  }
  // Old coordinates w (row vector) -> new coordinates w * rows^{-1}.
  const Matrix<Rational> inv = inverse(rows);
  std::vector<StructureEntry> entries;
  std::vector<Rational> old_coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::fill(old_coords.begin(), old_coords.end(), Rational(0));
      for (std::size_t a = 0; a < n; ++a) {
        if (sgn(rows(i, a)) == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (sgn(rows(j, b)) == 0) continue;
          accumulate(old_coords, algebra.terms<Rational>(a, b), rows(i, a) * rows(j, b));
        }
      }
      for (std::size_t g = 0; g < n; ++g) {
        Rational c = 0;
        for (std::size_t h = 0; h < n; ++h) {
          if (sgn(old_coords[h]) != 0) c += old_coords[h] * inv(h, g);
        }
        if (sgn(c) != 0) entries.push_back({i, j, g, c});
      }
    }
  }
  return std::make_shared<const LieAlgebra>(std::move(labels), entries);
}

}  // namespace gw

#pragma once

// Reference computations written without the library's linear algebra or
// structure tables. Tests compare library output against these.

#include <complex>
#include <string>
#include <vector>

#include "gw/decomposition.hpp"
#include "gw/scalar.hpp"

namespace oracle {

using gw::Rational;
using QMat = std::vector<std::vector<Rational>>;

inline QMat zeros(std::size_t n) { return QMat(n, std::vector<Rational>(n, Rational(0))); }

inline QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline QMat commutator(const QMat& a, const QMat& b) {
  QMat ab = mul(a, b), ba = mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

inline Rational trace(const QMat& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// E_ij = e_i e_j^T - e_j e_i^T, indices 1-based.
inline QMat so_generator(int i, int j, int n) {
  QMat m = zeros(static_cast<std::size_t>(n));
  m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
  m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  return m;
}

struct SoBasis {
  int n;
  std::vector<std::pair<int, int>> pairs;  // lexicographic i < j
  std::vector<QMat> mats;
};

inline SoBasis so_basis(int n) {
  SoBasis b{n, {}, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b.pairs.emplace_back(i, j);
      b.mats.push_back(so_generator(i, j, n));
    }
  return b;
}

// Coordinates of an antisymmetric matrix in the E_ij basis.
inline std::vector<Rational> so_coords(const SoBasis& b, const QMat& m) {
  std::vector<Rational> out;
  for (auto [i, j] : b.pairs) out.push_back(m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  return out;
}

// c[a][b][g] from matrix commutators.
inline std::vector<std::vector<std::vector<Rational>>> so_structure(int n) {
  const SoBasis b = so_basis(n);
  const std::size_t d = b.mats.size();
  std::vector<std::vector<std::vector<Rational>>> c(d, std::vector<std::vector<Rational>>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) c[x][y] = so_coords(b, commutator(b.mats[x], b.mats[y]));
  return c;
}

// -trace(ad a ad b) from a structure tensor c[a][b][g].
inline QMat killing_from_structure(const std::vector<std::vector<std::vector<Rational>>>& c) {
  const std::size_t d = c.size();
  QMat out = zeros(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      // (ad a ad b)_{gg} = sum_h c[b][g][h] c[a][h][g]
      Rational t = 0;
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t h = 0; h < d; ++h) t += c[b][g][h] * c[a][h][g];
      out[a][b] = -t;
    }
  return out;
}

inline std::vector<std::vector<std::vector<Rational>>> structure_of(const gw::LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<std::vector<std::vector<Rational>>> c(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t g = 0; g < d; ++g) c[a][b][g] = alg.structure_constant(a, b, g);
  return c;
}

// su(2) as 2x2 complex matrices scaled so that [ih, X] = Y, [X, Y] = ih.
using CMat = std::array<std::array<std::complex<double>, 2>, 2>;

inline CMat cmul(const CMat& a, const CMat& b) {
  CMat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline CMat ccomm(const CMat& a, const CMat& b) {
  CMat ab = cmul(a, b), ba = cmul(b, a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ab[i][j] -= ba[i][j];
  return ab;
}

inline std::array<CMat, 3> su2_matrices() {
  const std::complex<double> I(0, 1);
  CMat ih{{{I / 2.0, 0}, {0, -I / 2.0}}};
  CMat x{{{0, 0.5}, {-0.5, 0}}};
  CMat y{{{0, I / 2.0}, {I / 2.0, 0}}};
  return {ih, x, y};
}

// Coordinates of a traceless anti-Hermitian matrix in (ih, X, Y).
inline std::array<double, 3> su2_coords(const CMat& m) {
  return {2 * m[0][0].imag(), 2 * m[0][1].real(), 2 * m[0][1].imag()};
}

// Rank by Gauss-Jordan over the rationals (row reduction, first nonzero pivot).
inline std::size_t gauss_jordan_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational piv = m[rank][c];
    for (auto& x : m[rank]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// [ijk] by summing over B-orthogonal basis triples, normalizing by B(e,e).
inline Rational brute_force_symbol(const gw::SpaceDescriptor& d, int i, int j, int k) {
  const gw::LieAlgebra& alg = d.algebra();
  const auto& gram = alg.gram();
  const gw::Part parts[3] = {gw::Part::m1, gw::Part::m2, gw::Part::m3};
  Rational sum = 0;
  for (std::size_t a : d.indices(parts[i - 1]))
    for (std::size_t b : d.indices(parts[j - 1]))
      for (std::size_t c : d.indices(parts[k - 1])) {
        Rational bc = 0;
        for (std::size_t h = 0; h < alg.dim(); ++h) bc += alg.structure_constant(a, b, h) * gram(h, c);
        if (sgn(bc) != 0) sum += bc * bc / (gram(a, a) * gram(b, b) * gram(c, c));
      }
  return sum;
}

}  // namespace oracle

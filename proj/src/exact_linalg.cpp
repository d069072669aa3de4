#include "gw/exact_linalg.hpp"

#include <utility>

namespace gw {

namespace {

// Scales each row of [A | b] by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix<Rational>& a, const std::vector<Rational>* b) {
  const std::size_t cols = a.cols() + (b ? 1 : 0);
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(cols));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    if (b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[r].get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    if (b) m[r][a.cols()] = (*b)[r].get_num() * (l / (*b)[r].get_den());
  }
  return m;
}

struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Echelon e;
  const std::size_t n = m.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

AugmentedRank bareiss_solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "rhs length does not match row count");
  const std::size_t ncols = a.cols();
  Echelon e = bareiss(integer_rows(a, &b), ncols + 1);

  AugmentedRank out;
  out.rank_ab = e.pivot_cols.size();
  out.rank_a = out.rank_ab;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == ncols) --out.rank_a;
  if (out.rank_a != out.rank_ab) return out;

  // Back substitution over the echelon rows; free variables stay zero.
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t k = out.rank_a; k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    const auto& row = e.rows[k];
    Rational acc(row[ncols]);
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (row[j] != 0 && sgn(x[j]) != 0) acc -= Rational(row[j]) * x[j];
    }
    x[pc] = acc / Rational(row[pc]);
  }
  out.solution = std::move(x);
  return out;
}

std::size_t bareiss_rank(const Matrix<Rational>& a) {
  return bareiss(integer_rows(a, nullptr), a.cols()).pivot_cols.size();
}

Matrix<Rational> inverse(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::InvalidInput, "inverse of non-square matrix");
  Matrix<Rational> m = a;
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidInput, "singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_positive_definite(const Matrix<Rational>& a) {
  // Symmetric Gaussian elimination without pivoting: all pivots positive.
  const std::size_t n = a.rows();
  Matrix<Rational> m = a;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

}  // namespace gw

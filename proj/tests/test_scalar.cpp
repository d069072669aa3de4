#include <doctest.h>

#include "gw/errors.hpp"
#include "gw/exact_linalg.hpp"
#include "gw/float_linalg.hpp"
#include "gw/random.hpp"
#include "gw/scalar.hpp"
#include "oracles.hpp"

using namespace gw;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(std::holds_alternative<Rational>(parse_number("5/2")));
  CHECK(std::holds_alternative<double>(parse_number("2.5")));
  CHECK(std::get<double>(parse_number("1e-3")) == doctest::Approx(1e-3));
}

TEST_CASE("quadratic surd arithmetic") {
  const QuadraticSurd r3 = sqrt_rational(3);
  CHECK(!r3.is_rational());
  CHECK(r3 * r3 == QuadraticSurd(3));
  CHECK(sqrt_rational(Rational(9, 4)) == QuadraticSurd(Rational(3, 2)));
  CHECK(sqrt_rational(12) == QuadraticSurd(2) * r3);
  const QuadraticSurd x = QuadraticSurd(1) + r3;
  CHECK((x / x) == QuadraticSurd(1));
  CHECK(x.sign() > 0);
  CHECK((QuadraticSurd(1) - r3).sign() < 0);
  CHECK(x.to_double() == doctest::Approx(1 + std::sqrt(3.0)));
  CHECK_THROWS_AS(sqrt_rational(-1), Error);
}

TEST_CASE("bareiss rank agrees with Gauss-Jordan on random rational matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(1, 6));
    Matrix<Rational> a(rows, cols);
    std::vector<Rational> b(rows);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols + 1));
    // Low-rank structure shows up often when entries are mostly zero.
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c <= cols; ++c) {
        const Rational v = rng.uniform_int(0, 2) == 0 ? rng.rational(3, 3) : Rational(0);
        dense[r][c] = v;
        if (c < cols) a(r, c) = v;
        else b[r] = v;
      }
    }
    if (trial % 3 == 0 && rows > 1) {
      for (std::size_t c = 0; c <= cols; ++c) dense[rows - 1][c] = 2 * dense[0][c];
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = dense[rows - 1][c];
      b[rows - 1] = dense[rows - 1][cols];
    }
    std::vector<std::vector<Rational>> a_only = dense;
    for (auto& row : a_only) row.pop_back();
    const auto res = bareiss_solve(a, b);
    CHECK(res.rank_a == oracle::gauss_jordan_rank(a_only));
    CHECK(res.rank_ab == oracle::gauss_jordan_rank(dense));
    CHECK(bareiss_rank(a) == res.rank_a);
    CHECK(res.solution.has_value() == (res.rank_a == res.rank_ab));
    if (res.solution) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += a(r, c) * (*res.solution)[c];
        CHECK(acc == b[r]);
      }
    }
  }
}

TEST_CASE("rational inverse") {
  Matrix<Rational> a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  const auto inv = inverse(a);
  CHECK(inv(0, 0) == 1);
  CHECK(inv(0, 1) == -1);
  CHECK(inv(1, 1) == 2);
  CHECK(is_positive_definite(a));
  a(1, 1) = Rational(1, 2);
  CHECK_THROWS_AS(inverse(a), Error);
}

TEST_CASE("svd rank and minimum-norm solve") {
  Matrix<double> a(3, 2);
  a(0, 0) = 1;
  a(1, 0) = 2;
  a(2, 0) = 3;
  a(0, 1) = 2;
  a(1, 1) = 4;
  a(2, 1) = 6;
  CHECK(svd_rank(a) == 1);
  const auto ok = svd_solve(a, {1, 2, 3});
  CHECK(ok.rank_a == 1);
  CHECK(ok.rank_ab == 1);
  REQUIRE(ok.solution);
  CHECK((*ok.solution)[0] == doctest::Approx(0.2));
  CHECK((*ok.solution)[1] == doctest::Approx(0.4));
  const auto bad = svd_solve(a, {1, 0, 0});
  CHECK(bad.rank_ab == 2);
  CHECK(!bad.solution);
}

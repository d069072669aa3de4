#include <doctest.h>

#include <Eigen/Dense>

#include "gw/catalog.hpp"
#include "gw/errors.hpp"
#include "gw/geodesic.hpp"
#include "gw/random.hpp"
#include "oracles.hpp"

using namespace gw;

namespace {

const std::vector<std::string> kCatalog{"su2_trivial",  "stiefel_n:4",      "stiefel_n:5",  "so_klm:2,2,1",
                                        "so_klm:2,2,2", "product_s2_cubed", "quad_diag_su2"};

AlgebraVector<Rational> vec(const SpaceDescriptor& d, std::initializer_list<std::pair<const char*, Rational>> terms) {
  AlgebraVector<Rational> v(d.algebra_ptr());
  for (const auto& [l, c] : terms) v[d.algebra().index_of(l)] = c;
  return v;
}

AlgebraVector<Rational> random_in(const SpaceDescriptor& d, Part p, Rng& rng) {
  AlgebraVector<Rational> v(d.algebra_ptr());
  while (v.is_zero()) {
    for (std::size_t i : d.indices(p)) v[i] = rng.uniform_int(0, 1) ? Rational(rng.uniform_int(-3, 3)) : Rational(0);
  }
  return v;
}

InvariantMetric random_metric(Rng& rng) {
  return InvariantMetric(rng.uniform_int(1, 4), rng.uniform_int(1, 4), rng.uniform_int(1, 4));
}

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(InvariantMetric(0, 1, 1), Error);
  CHECK_THROWS_AS(InvariantMetric(1, -2, 1), Error);
  CHECK(InvariantMetric(2, 2, 2).is_standard());
  CHECK(InvariantMetric(1, 2, 3).str() == "1,2,3");
  CHECK(InvariantMetric(Rational(1, 2), 1, 1).str() == "1/2,1,1");
}

TEST_CASE("inner product") {
  const auto d = catalog("stiefel_n", {4});
  const auto e12 = vec(d, {{"e12", 1}}), e13 = vec(d, {{"e13", 1}}), e34 = vec(d, {{"e34", 1}});
  const InvariantMetric g(1, 2, 3);
  CHECK(inner_product(e12, e13, g, d) == 0);
  CHECK(inner_product(e13, e13, g, d) == 2 * d.algebra().gram()(1, 1));
  CHECK(inner_product(e13, e13, g, d) == 8);
  CHECK(inner_product(e34, e34, g, d) == 0);
  const InvariantMetric st(1, 1, 1);
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_in(d, Part::m, rng), v = random_in(d, Part::m, rng);
    CHECK(inner_product(u, v, st, d) == killing(u, v));
  }
  const auto m3 = vec(d, {{"e23", 1}});
  CHECK(apply_metric(m3, g, d) == Rational(3) * m3);
}

TEST_CASE("geodesic vectors on SU(2)") {
  const auto d = catalog("su2_trivial");
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Rational a = rng.nonzero_rational(5, 3), b = rng.nonzero_rational(5, 3);
    CHECK(is_geodesic_vector(vec(d, {{"ih", a}, {"X_a", b}}), InvariantMetric(1, 1, 2), d).geodesic);
  }
  CHECK(!is_geodesic_vector(vec(d, {{"ih", 1}, {"X_a", 1}}), InvariantMetric(1, 2, 3), d).geodesic);
  CHECK(is_geodesic_vector(vec(d, {{"X_a", 1}}), InvariantMetric(1, 2, 3), d).geodesic);
  CHECK_THROWS_AS(is_geodesic_vector(AlgebraVector<Rational>(d.algebra_ptr()), InvariantMetric(1, 2, 3), d), Error);
}

TEST_CASE("standard metric: every m-vector is geodesic") {
  Rng rng(9);
  for (const auto& ref : kCatalog) {
    const auto d = catalog_from_ref(ref);
    for (int t = 0; t < 20; ++t) {
      CHECK(is_geodesic_vector(random_in(d, Part::m, rng), InvariantMetric(1, 1, 1), d).geodesic);
      const auto c = completion_exists(random_in(d, Part::m, rng), InvariantMetric(2, 2, 2), d);
      REQUIRE(c.xk);
      CHECK(c.xk->is_zero());
      for (const auto& b : c.system.b) CHECK(sgn(b) == 0);
    }
  }
}

TEST_CASE("stiefel4 geodesic check example") {
  const auto d = catalog("stiefel_n", {4});
  const auto r = is_geodesic_vector(vec(d, {{"e12", 1}}), InvariantMetric(1, 1, 1), d);
  CHECK(r.geodesic);
  for (const auto& x : r.residuals) CHECK(sgn(x) == 0);
}

TEST_CASE("system shape and the m1 row on SO(4)/SO(2)") {
  const auto d = catalog("stiefel_n", {4});
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_metric(rng);
    const Rational a13 = rng.uniform_int(-3, 3), a14 = rng.uniform_int(-3, 3), a23 = rng.uniform_int(-3, 3),
                   a24 = rng.uniform_int(-3, 3);
    auto x = vec(d, {{"e13", a13}, {"e14", a14}, {"e23", a23}, {"e24", a24}});
    if (x.is_zero()) continue;
    const auto sys = assemble_system(x, g, d);
    CHECK(sys.a.rows() == 5);
    CHECK(sys.a.cols() == 1);
    // B([e_ij, e_jk], .) scaled by B(e, e) = 4.
    CHECK(sys.b[0] == 4 * (g.lambda(3) - g.lambda(2)) * (a13 * a23 + a14 * a24));
  }
}

TEST_CASE("band structure of the right-hand side") {
  // For x in m_i + m_j the m_i and m_j rows vanish and an m_k row is
  // (l_i - l_j) B([x_i, x_j], e).
  Rng rng(21);
  const Part mods[3] = {Part::m1, Part::m2, Part::m3};
  for (const auto& ref : kCatalog) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    for (int t = 0; t < 30; ++t) {
      const auto g = random_metric(rng);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = 3 - i - j;
          const auto xi = random_in(d, mods[i], rng), xj = random_in(d, mods[j], rng);
          const auto sys = assemble_system(xi + xj, g, d);
          const auto xij = bracket(xi, xj);
          for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            const int mod = d.module_of(sys.rows[r]);
            const auto e = AlgebraVector<Rational>::basis(d.algebra_ptr(), sys.rows[r]);
            if (mod == k + 1) {
              CHECK(sys.b[r] == (g.lambda(i + 1) - g.lambda(j + 1)) * killing(xij, e));
            } else {
              CHECK(sgn(sys.b[r]) == 0);
            }
          }
        }
    }
  }
}

TEST_CASE("product space: rhs vanishes for every metric") {
  const auto d = catalog("product_s2_cubed");
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto sys = assemble_system(random_in(d, Part::m, rng), random_metric(rng), d);
    for (const auto& b : sys.b) CHECK(sgn(b) == 0);
  }
}

TEST_CASE("stiefel4 (1,1,2) e13 + e23 completion matches least squares") {
  // Oracle: assemble A, b from so(4) matrices and solve by dense least squares.
  const auto b = oracle::so_basis(4);
  const double lam[3] = {1, 1, 2};
  auto module = [](std::pair<int, int> p) -> int {
    if (p == std::pair{1, 2}) return 1;
    if (p == std::pair{3, 4}) return 0;
    return p.first == 1 ? 2 : 3;
  };
  std::vector<std::size_t> m_rows;
  std::size_t k_col = 0;
  for (std::size_t n = 0; n < b.pairs.size(); ++n) {
    if (module(b.pairs[n]) == 0) k_col = n;
    else m_rows.push_back(n);
  }
  auto metric = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    double s = 0;
    for (std::size_t n : m_rows) s += lam[module(b.pairs[n]) - 1] * 4 * Rational(u[n] * v[n]).get_d();
    return s;
  };
  oracle::QMat xmat = oracle::zeros(4);
  for (std::size_t n = 0; n < b.pairs.size(); ++n) {
    if (b.pairs[n] == std::pair{1, 3} || b.pairs[n] == std::pair{2, 3})
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) xmat[r][c] += b.mats[n][r][c];
  }
  const auto xc = oracle::so_coords(b, xmat);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(m_rows.size()), 1);
  Eigen::VectorXd B(static_cast<Eigen::Index>(m_rows.size()));
  for (std::size_t r = 0; r < m_rows.size(); ++r) {
    const auto& er = b.mats[m_rows[r]];
    A(static_cast<Eigen::Index>(r), 0) = -metric(oracle::so_coords(b, oracle::commutator(b.mats[k_col], er)), xc);
    B(static_cast<Eigen::Index>(r)) = metric(oracle::so_coords(b, oracle::commutator(xmat, er)), xc);
  }
  const Eigen::VectorXd y = A.colPivHouseholderQr().solve(B);
  const bool oracle_exists = (A * y - B).norm() < 1e-9;
  CHECK(!oracle_exists);  // frozen

  const auto d = catalog("stiefel_n", {4});
  const auto c = completion_exists(vec(d, {{"e13", 1}, {"e23", 1}}), InvariantMetric(1, 1, 2), d);
  CHECK(c.xk.has_value() == oracle_exists);
  CHECK(c.rank_a == 1);
  CHECK(c.rank_ab == 2);
  for (std::size_t r = 0; r < m_rows.size(); ++r) {
    CHECK(c.system.a(r, 0).get_d() == doctest::Approx(A(static_cast<Eigen::Index>(r), 0)));
    CHECK(c.system.b[r].get_d() == doctest::Approx(B(static_cast<Eigen::Index>(r))));
  }
}

TEST_CASE("SU(2): completion exists iff x_m is already geodesic") {
  const auto d = catalog("su2_trivial");
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_metric(rng);
    const auto x = random_in(d, Part::m, rng);
    const auto c = completion_exists(x, g, d);
    CHECK(c.system.a.cols() == 0);
    CHECK(c.xk.has_value() == is_geodesic_vector(x, g, d).geodesic);
  }
}

TEST_CASE("completion round trip on every catalog space") {
  Rng rng(13);
  for (const auto& ref : kCatalog) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    std::size_t found = 0;
    for (int t = 0; t < 100; ++t) {
      const auto g = random_metric(rng);
      const auto x = random_in(d, Part::m, rng);
      const auto c = completion_exists(x, g, d);
      CHECK(c.xk.has_value() == (c.rank_a == c.rank_ab));
      if (c.xk) {
        ++found;
        CHECK(!has_k_component(x, d));
        CHECK(is_geodesic_vector(*c.xk + x, g, d).geodesic);
      }
      std::vector<std::vector<Rational>> a(c.system.a.rows(), std::vector<Rational>(c.system.a.cols()));
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t col = 0; col < c.system.a.cols(); ++col) a[r][col] = c.system.a(r, col);
      CHECK(c.rank_a == oracle::gauss_jordan_rank(a));
    }
    CHECK(found > 0);
  }
}

TEST_CASE("float mode agrees with exact mode") {
  Rng rng(17);
  for (const auto& ref : kCatalog) {
    const auto d = catalog_from_ref(ref);
    for (int t = 0; t < 50; ++t) {
      const auto g = random_metric(rng);
      const auto x = random_in(d, Part::m, rng);
      const auto ce = completion_exists(x, g, d);
      const auto cf = completion_exists(convert<double>(x), g, d);
      CHECK(ce.rank_a == cf.rank_a);
      CHECK(ce.rank_ab == cf.rank_ab);
      CHECK(is_geodesic_vector(x, g, d).geodesic == is_geodesic_vector(convert<double>(x), g, d).geodesic);
    }
  }
}

TEST_CASE("scaling invariance") {
  Rng rng(23);
  for (const auto& ref : kCatalog) {
    const auto d = catalog_from_ref(ref);
    for (int t = 0; t < 30; ++t) {
      const auto g = random_metric(rng);
      const Rational s = rng.nonzero_rational(4, 3), c = abs(rng.nonzero_rational(4, 3));
      const InvariantMetric gc(c * g.lambda(1), c * g.lambda(2), c * g.lambda(3));
      AlgebraVector<Rational> x = random_in(d, Part::m, rng);
      for (std::size_t i : d.indices(Part::k)) x[i] = rng.uniform_int(-2, 2);
      const bool base = is_geodesic_vector(x, g, d).geodesic;
      CHECK(is_geodesic_vector(s * x, g, d).geodesic == base);
      CHECK(is_geodesic_vector(x, gc, d).geodesic == base);
      const auto xm = project(x, d, Part::m);
      CHECK(completion_exists(xm, g, d).xk.has_value() == completion_exists(xm, gc, d).xk.has_value());
    }
  }
}

TEST_CASE("input validation") {
  const auto d = catalog("stiefel_n", {4});
  const InvariantMetric g(1, 2, 3);
  CHECK_THROWS_AS(completion_exists(vec(d, {{"e34", 1}, {"e12", 1}}), g, d), Error);
  CHECK_THROWS_AS(completion_exists(AlgebraVector<Rational>(d.algebra_ptr()), g, d), Error);
  const auto other = catalog("stiefel_n", {4});
  CHECK_THROWS_AS(is_geodesic_vector(vec(other, {{"e12", 1}}), g, d), Error);
  try {
    completion_exists(vec(d, {{"e34", 1}, {"e12", 1}}), g, d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SupportViolation);
  }
}

TEST_CASE("the three conditions of the equivalence agree") {
  Rng rng(31);
  for (const char* ref : {"stiefel_n:5", "so_klm:2,2,1", "su2_trivial", "stiefel_n:4", "quad_diag_su2"}) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    std::size_t positive = 0;
    for (int t = 0; t < 300; ++t) {
      const auto g = t % 5 == 0 ? InvariantMetric(1, 1, 1) : random_metric(rng);
      const auto x = random_in(d, Part::m, rng);
      AlgebraVector<Rational> a(d.algebra_ptr());
      if (t % 2 == 0) {
        if (const auto c = completion_exists(x, g, d); c.xk) a = *c.xk;
      } else {
        for (std::size_t i : d.indices(Part::k)) a[i] = rng.uniform_int(-2, 2);
      }
      const auto r = check_prop13(a, x, g, d);
      CHECK(r.agree());
      if (r.geodesic) ++positive;
      CHECK(r.geodesic == is_geodesic_vector(a + x, g, d).geodesic);
    }
    CHECK(positive > 0);
  }
  const auto su2 = catalog("su2_trivial");
  const auto r = check_prop13(AlgebraVector<Rational>(su2.algebra_ptr()), vec(su2, {{"X_a", 1}}), InvariantMetric(1, 2, 3), su2);
  CHECK(r.bracket_in_k);
  CHECK(r.transport);
  CHECK(r.geodesic);
}

TEST_CASE("residual polynomials agree with numeric residuals") {
  Rng rng(41);
  for (const auto& ref : kCatalog) {
    const auto d = catalog_from_ref(ref);
    const auto g = random_metric(rng);
    const auto polys = residual_polynomials(d, g);
    REQUIRE(polys.size() == d.indices(Part::m).size());
    for (int t = 0; t < 10; ++t) {
      AlgebraVector<Rational> x(d.algebra_ptr());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.rational(4, 3);
      const auto res = geodesic_residuals(x, g, d);
      for (std::size_t r = 0; r < polys.size(); ++r) CHECK(polys[r].evaluate<Rational>(x.coeffs()) == res[r]);
    }
  }
}

#include <doctest.h>

#include "gw/catalog.hpp"
#include "gw/errors.hpp"
#include "gw/exact_linalg.hpp"
#include "gw/lie_algebra.hpp"
#include "gw/random.hpp"
#include "oracles.hpp"

using namespace gw;

namespace {

AlgebraVector<Rational> e(const AlgebraPtr& alg, std::string_view label) {
  return AlgebraVector<Rational>::basis(alg, alg->index_of(label));
}

AlgebraVector<Rational> random_vector(const AlgebraPtr& alg, Rng& rng) {
  AlgebraVector<Rational> v(alg);
  for (std::size_t i = 0; i < alg->dim(); ++i) v[i] = rng.rational(4, 3);
  return v;
}

}  // namespace

TEST_CASE("so(n) brackets match matrix commutators") {
  for (int n = 3; n <= 6; ++n) {
    const auto alg = build_so_basis(n);
    const auto c = oracle::so_structure(n);
    REQUIRE(alg->dim() == c.size());
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        for (std::size_t g = 0; g < c.size(); ++g) CHECK(alg->structure_constant(a, b, g) == c[a][b][g]);
  }
}

TEST_CASE("so(4) bracket table") {
  const auto alg = build_so_basis(4);
  CHECK(alg->labels() == std::vector<std::string>{"e12", "e13", "e14", "e23", "e24", "e34"});
  CHECK(bracket(e(alg, "e12"), e(alg, "e23")) == e(alg, "e13"));
  CHECK(bracket(e(alg, "e12"), e(alg, "e34")).is_zero());
}

TEST_CASE("so(n) Killing Gram from the ad-trace oracle") {
  for (int n = 3; n <= 6; ++n) {
    const auto alg = build_so_basis(n);
    const auto k = oracle::killing_from_structure(oracle::so_structure(n));
    for (std::size_t a = 0; a < alg->dim(); ++a)
      for (std::size_t b = 0; b < alg->dim(); ++b) {
        CHECK(alg->gram()(a, b) == k[a][b]);
        CHECK(alg->gram()(a, b) == (a == b ? Rational(2 * (n - 2)) : Rational(0)));
      }
  }
  // Frozen from the oracle above.
  CHECK(build_so_basis(4)->gram()(0, 0) == 4);
  CHECK(build_so_basis(5)->gram()(0, 0) == 6);
  CHECK(build_so_basis(6)->gram()(0, 0) == 8);
}

TEST_CASE("su(2) brackets and Gram against 2x2 matrices") {
  const auto alg = build_su2_basis();
  CHECK(alg->labels() == std::vector<std::string>{"ih", "X_a", "Y_a"});
  CHECK(bracket(e(alg, "ih"), e(alg, "X_a")) == e(alg, "Y_a"));
  CHECK(bracket(e(alg, "X_a"), e(alg, "Y_a")) == e(alg, "ih"));
  CHECK(bracket(e(alg, "ih"), e(alg, "Y_a")) == Rational(-1) * e(alg, "X_a"));

  const auto m = oracle::su2_matrices();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const auto coords = oracle::su2_coords(oracle::ccomm(m[a], m[b]));
      for (std::size_t g = 0; g < 3; ++g) CHECK(alg->structure_constant(a, b, g).get_d() == doctest::Approx(coords[g]));
    }
  // B(X, Y) = -4 tr(XY) on su(2).
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const auto p = oracle::cmul(m[a], m[b]);
      const double b_ab = -4 * (p[0][0] + p[1][1]).real();
      CHECK(alg->gram()(a, b).get_d() == doctest::Approx(b_ab));
    }
  // Frozen from the oracle above.
  CHECK(alg->gram()(0, 0) == 2);
  CHECK(alg->gram()(1, 1) == 2);
  CHECK(alg->gram()(2, 2) == 2);
}

TEST_CASE("direct sums") {
  const auto su2 = build_su2_basis();
  const std::vector<AlgebraPtr> two{su2, su2};
  const auto sum = build_direct_sum(two);
  CHECK(sum->dim() == 6);
  CHECK(sum->label(3) == "ih@2");
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 3; b < 6; ++b) CHECK(bracket(AlgebraVector<Rational>::basis(sum, a), AlgebraVector<Rational>::basis(sum, b)).is_zero());
  const std::vector<AlgebraPtr> four{su2, su2, su2, su2};
  const auto sum4 = build_direct_sum(four);
  CHECK(sum4->dim() == 12);
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b) {
      const Rational expect = (a / 3 == b / 3) ? su2->gram()(a % 3, b % 3) : Rational(0);
      CHECK(sum4->gram()(a, b) == expect);
    }
  CHECK(!find_jacobi_violation(*sum4));
  CHECK_THROWS_AS(build_direct_sum(std::span<const AlgebraPtr>{}), Error);
}

TEST_CASE("antisymmetry, Jacobi and positive Gram for every catalog algebra") {
  for (const char* ref : {"su2_trivial", "stiefel_n:4", "stiefel_n:5", "so_klm:2,2,1", "so_klm:2,2,2", "product_s2_cubed",
                          "quad_diag_su2"}) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    const LieAlgebra& alg = d.algebra();
    for (std::size_t a = 0; a < alg.dim(); ++a)
      for (std::size_t b = 0; b < alg.dim(); ++b)
        for (std::size_t g = 0; g < alg.dim(); ++g)
          CHECK(alg.structure_constant(a, b, g) == -alg.structure_constant(b, a, g));
    CHECK(!find_jacobi_violation(alg));
    CHECK(is_positive_definite(alg.gram()));
    CHECK(killing_gram(alg) == alg.gram());
    const auto k = oracle::killing_from_structure(oracle::structure_of(alg));
    for (std::size_t a = 0; a < alg.dim(); ++a)
      for (std::size_t b = 0; b < alg.dim(); ++b) CHECK(alg.gram()(a, b) == k[a][b]);
  }
}

TEST_CASE("ad-invariance of B on random rational triples") {
  Rng rng(7);
  for (const char* ref : {"su2_trivial", "stiefel_n:5", "so_klm:2,2,2", "quad_diag_su2", "product_s2_cubed"}) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    const auto& alg = d.algebra_ptr();
    for (int t = 0; t < 1000; ++t) {
      const auto x = random_vector(alg, rng), y = random_vector(alg, rng), z = random_vector(alg, rng);
      CHECK(killing(bracket(x, y), z) + killing(y, bracket(x, z)) == 0);
    }
  }
}

TEST_CASE("bracket basics and errors") {
  const auto alg = build_so_basis(4);
  Rng rng(3);
  const auto x = random_vector(alg, rng);
  CHECK(bracket(x, x).is_zero());
  const auto other = build_so_basis(4);
  CHECK_THROWS_AS(bracket(x, AlgebraVector<Rational>(other)), Error);
  CHECK_THROWS_AS(build_so_basis(1), Error);
  CHECK_THROWS_AS(alg->index_of("e99"), Error);
}

TEST_CASE("invalid structure data is rejected") {
  // [a, b] = a with [a, a] unset breaks nothing structurally, but the form is degenerate.
  std::vector<StructureEntry> entries{{0, 1, 0, Rational(1)}};
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, entries), Error);
}

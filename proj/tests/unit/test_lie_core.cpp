#include <doctest.h>

#include "fixtures.hpp"

using namespace tangentlie;
using namespace fixtures;

namespace {
const QVec W{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};
}

TEST_CASE("bracket expands bilinearly from structure constants") {
  const auto c3 = algebra(CatalogId::case3);
  CHECK(bracket(c3, QVec(W + Y), Z) == QVec(Y - W));
  CHECK(bracket(c3, W, Z) == Y);
  CHECK(bracket(c3, Y, Z) == QVec(-W));

  const auto c2 = algebra(CatalogId::case2);
  CHECK(bracket(c2, Y, Z) == QVec(q(-2) * Y));
  CHECK(bracket(c2, W, Z) == QVec(-Y));
  CHECK(bracket(c2, W, Y).is_zero(0.0));
}

TEST_CASE("bracket is antisymmetric and bilinear on random rational input") {
  Sampler rng(11);
  for (auto id : kCatalogIds) {
    const auto a = algebra(id);
    for (int s = 0; s < 30; ++s) {
      const auto u = rng.rational_vector(a.dim()), v = rng.rational_vector(a.dim()), w = rng.rational_vector(a.dim());
      const Q k(rng.integer(-7, 7), rng.integer(1, 5));
      CHECK(bracket(a, u, u).is_zero(0.0));
      CHECK(bracket(a, u, v) == QVec(-bracket(a, v, u)));
      CHECK(bracket(a, QVec(k * u + v), w) == QVec(k * bracket(a, u, w) + bracket(a, v, w)));
    }
  }
}

TEST_CASE("bracket rejects vectors of the wrong length") {
  const auto a = algebra(CatalogId::case3);
  CHECK_THROWS_AS(bracket(a, QVec{1, 0}, Z), DimensionError);
}

TEST_CASE("storage normalizes antisymmetry and rejects inconsistent tables") {
  LieAlgebra<Rational> flipped({"A", "B"}, {{1, 0, QVec{1, 0}}});  // [B, A] = A
  CHECK(flipped.basis_bracket(0, 1) == QVec{-1, 0});
  CHECK(flipped.basis_bracket(1, 0) == QVec{1, 0});

  LieAlgebra<Rational> repeated({"A", "B"}, {{0, 1, QVec{0, 1}}, {1, 0, QVec{0, -1}}});
  CHECK(repeated.basis_bracket(0, 1) == QVec{0, 1});

  CHECK_THROWS_AS(LieAlgebra<Rational>({"A", "B"}, {{0, 1, QVec{0, 1}}, {1, 0, QVec{0, 1}}}), DomainError);
  CHECK_THROWS_AS(LieAlgebra<Rational>({"A", "B"}, {{0, 0, QVec{0, 1}}}), DomainError);
  CHECK_THROWS_AS(LieAlgebra<Rational>({"A", "A"}), DomainError);
  CHECK_THROWS_AS(LieAlgebra<Rational>({"A", "B"}, {{0, 2, QVec{0, 1}}}), DimensionError);
  CHECK_THROWS_AS(LieAlgebra<Rational>({"A", "B"}, {{0, 1, QVec{0, 1, 0}}}), DimensionError);
}

TEST_CASE("Jacobi check") {
  CHECK(check_jacobi(algebra(CatalogId::case2)).ok());
  CHECK(check_jacobi(abelian(3)).ok());
  for (auto id : kCatalogIds) CHECK(check_jacobi(algebra(id)).ok());

  // [W,Y]=Z, [W,Z]=W, [Y,Z]=Z violates Jacobi
  LieAlgebra<Rational> bad({"W", "Y", "Z"}, {{0, 1, QVec{0, 0, 1}}, {0, 2, QVec{1, 0, 0}}, {1, 2, QVec{0, 0, 1}}});
  const auto report = check_jacobi(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.residuals.size() == 1);
  CHECK(report.residuals[0].indices == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("Jacobi residual is reported with its value") {
  // [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e3: Jacobiator of (e1,e2,e3) is e1 + e3
  LieAlgebra<Rational> a({"e1", "e2", "e3"}, {{0, 1, QVec{0, 0, 1}}, {0, 2, QVec{1, 0, 0}}, {1, 2, QVec{0, 0, 1}}});
  const auto report = check_jacobi(a);
  REQUIRE(report.residuals.size() == 1);
  CHECK(report.residuals[0].value == QVec{1, 0, 1});
}

TEST_CASE("ad operator") {
  const auto c3 = algebra(CatalogId::case3);
  const auto adz = ad_operator(c3, Z);
  CHECK(adz * W == QVec(-Y));
  CHECK(adz * Y == W);
  CHECK((adz * Z).is_zero(0.0));
  CHECK(adz == QMat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});

  CHECK(ad_operator(abelian(3), QVec{1, 2, 3}).is_zero(0.0));

  Sampler rng(5);
  for (auto id : kCatalogIds) {
    const auto a = algebra(id);
    const auto u = rng.rational_vector(a.dim()), v = rng.rational_vector(a.dim());
    CHECK(ad_operator(a, QVec(q(2) * u)) == q(2) * ad_operator(a, u));
    CHECK(ad_operator(a, u) * v == bracket(a, u, v));
  }
}

TEST_CASE("center") {
  CHECK(center(abelian(3)).size() == 3);
  CHECK(center(algebra(CatalogId::case1)).size() == 3);

  const auto z2 = center(algebra(CatalogId::case2));
  REQUIRE(z2.size() == 1);
  CHECK(z2[0] == QVec{2, -1, 0});

  CHECK(center(algebra(CatalogId::case3)).empty());

  const auto n5 = algebra(CatalogId::nilpotent5);
  const auto z5 = center(n5);
  CHECK(z5.size() == 3);
  for (auto id : kCatalogIds) {
    const auto a = algebra(id);
    for (const auto& v : center(a))
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(bracket(a, v, a.basis_vector(i)).is_zero(0.0));
  }
}

TEST_CASE("nilpotent5 is two-step nilpotent") {
  const auto a = algebra(CatalogId::nilpotent5);
  bool derived_nonzero = false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const auto b = a.basis_bracket(i, j);
      derived_nonzero = derived_nonzero || !b.is_zero(0.0);
      for (std::size_t k = 0; k < 5; ++k) CHECK(bracket(a, a.basis_vector(k), b).is_zero(0.0));
    }
  CHECK(derived_nonzero);
}

TEST_CASE("float algebras agree with exact ones") {
  const auto a = algebra(CatalogId::case2);
  const auto af = a.convert<double>();
  Sampler rng(3);
  for (int s = 0; s < 20; ++s) {
    const auto u = rng.rational_vector(3), v = rng.rational_vector(3);
    const auto exact = bracket(a, u, v).convert<double>();
    const auto approx = bracket(af, u.convert<double>(), v.convert<double>());
    CHECK(max_abs(AlgVector<double>(exact - approx)) < 1e-12);
  }
  CHECK(center(af).size() == 1);
}

TEST_CASE("in_span") {
  const std::vector<QVec> plane{W, Y};
  CHECK(in_span<Rational>(plane, QVec{3, q(-1, 2), 0}));
  CHECK_FALSE(in_span<Rational>(plane, QVec{0, 0, 1}));
  CHECK(in_span<Rational>({}, QVec{0, 0, 0}));
}

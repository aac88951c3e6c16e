#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"

using namespace tangentlie;
using namespace fixtures;

namespace {

const QVec W{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

std::vector<MetricLieAlgebra<Rational>> lift_bases() {
  std::vector<MetricLieAlgebra<Rational>> out;
  for (auto id : kCatalogIds) out.push_back(metric(id));
  out.push_back(metric(CatalogId::case2, {{"nu", 2}}));
  out.push_back(metric(CatalogId::case3, {{"nu", 4}}));
  Sampler rng(31);
  for (auto id : {CatalogId::case2, CatalogId::case3})
    for (int s = 0; s < 4; ++s) out.emplace_back(algebra(id), random_spd(rng, 3));
  return out;
}

}  // namespace

TEST_CASE("doubled algebra bracket table and metric") {
  for (const auto& m : lift_bases()) {
    const auto l = lift_algebra(m);
    const auto& d = l.doubled();
    const std::size_t n = m.dim();
    CHECK(d.dim() == 2 * n);
    CHECK(check_jacobi(d.algebra()).ok());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto b = m.algebra().basis_bracket(i, j);
        const auto dc = d.algebra().basis_bracket(l.index(i, LiftTag::complete), l.index(j, LiftTag::complete));
        const auto dvc = d.algebra().basis_bracket(l.index(i, LiftTag::vertical), l.index(j, LiftTag::complete));
        const auto dcv = d.algebra().basis_bracket(l.index(i, LiftTag::complete), l.index(j, LiftTag::vertical));
        const auto dvv = d.algebra().basis_bracket(l.index(i, LiftTag::vertical), l.index(j, LiftTag::vertical));
        CHECK(dc == lift_vector(l, b, LiftTag::complete));
        CHECK(dvc == lift_vector(l, b, LiftTag::vertical));
        CHECK(dcv == lift_vector(l, b, LiftTag::vertical));
        CHECK(dvv.is_zero(0.0));
        CHECK(d.gram()(i, j) == m.gram()(i, j));
        CHECK(d.gram()(n + i, n + j) == m.gram()(i, j));
        CHECK(d.gram()(i, n + j) == 0);
      }
  }
}

TEST_CASE("lifting examples") {
  const auto flat = lift_algebra(MetricLieAlgebra<Rational>(abelian(3), QMat::identity(3)));
  CHECK(flat.doubled().algebra().nonzero_brackets().empty());
  CHECK(flat.doubled().gram() == QMat::identity(6));

  const auto l3 = lift_algebra(metric(CatalogId::case3));
  const auto& names = l3.doubled().algebra().basis_names();
  CHECK(names == std::vector<std::string>{"W^c", "Y^c", "Z^c", "W^v", "Y^v", "Z^v"});
  CHECK(bracket(l3.doubled().algebra(), lift_vector(l3, W, LiftTag::vertical), lift_vector(l3, Z, LiftTag::complete)) ==
        lift_vector(l3, Y, LiftTag::vertical));

  LieAlgebra<Rational> bad({"W", "Y", "Z"}, {{0, 1, QVec{0, 0, 1}}, {0, 2, QVec{1, 0, 0}}, {1, 2, QVec{0, 0, 1}}});
  CHECK_THROWS_AS(lift_algebra(MetricLieAlgebra<Rational>(bad, QMat::identity(3))), DomainError);
}

TEST_CASE("lifted vectors") {
  const auto l = lift_algebra(metric(CatalogId::case2));
  const auto wc = lift_vector(l, W, LiftTag::complete);
  CHECK(wc == QVec{1, 0, 0, 0, 0, 0});
  CHECK(lift_vector(l, QVec(q(2) * W + q(-3) * Y), LiftTag::vertical) ==
        QVec(q(2) * lift_vector(l, W, LiftTag::vertical) + q(-3) * lift_vector(l, Y, LiftTag::vertical)));
  CHECK_THROWS_AS(lift_vector(l, QVec{1, 0}, LiftTag::complete), DimensionError);

  Sampler rng(1);
  for (int s = 0; s < 10; ++s) {
    const auto x = rng.rational_vector(3);
    for (auto tag : {LiftTag::complete, LiftTag::vertical})
      CHECK(norm_squared(l.doubled(), lift_vector(l, x, tag)) == norm_squared(l.base(), x));
  }
}

TEST_CASE("lifted drift norms equal the base drift norm") {
  for (auto id : kCatalogIds) {
    const auto f = instance(id, id == CatalogId::case2 ? CatalogParams{{"p", q(3, 10)}} : CatalogParams{});
    for (auto tag : {LiftTag::complete, LiftTag::vertical}) {
      const auto lf = lift_randers(f, tag);
      CHECK(norm_squared(lf.base(), lf.drift()) == norm_squared(f.base(), f.drift()));
      CHECK(check_valid(lf));
    }
  }
  const auto f2 = instance(CatalogId::case2, {{"p", q(3, 10)}});
  CHECK(norm_squared(lift_randers(f2, LiftTag::complete).base(), lift_randers(f2, LiftTag::complete).drift()) ==
        q(27, 100));
  const auto v3 = lift_randers(instance(CatalogId::case3, {{"p", q(1, 2)}}), LiftTag::vertical);
  CHECK(v3.drift() == QVec{0, 0, 0, 0, 0, q(1, 2)});
  CHECK(lift_randers(instance(CatalogId::case3), LiftTag::complete).drift().is_zero(0.0));
}

TEST_CASE("lifted connection closed form") {
  const auto flat = lift_algebra(MetricLieAlgebra<Rational>(abelian(3), QMat::identity(3)));
  for (auto tu : {LiftTag::complete, LiftTag::vertical})
    for (auto tv : {LiftTag::complete, LiftTag::vertical})
      CHECK(lifted_connection_prop31(flat, W, tu, QVec{1, 2, 3}, tv).is_zero(0.0));

  const auto l3 = lift_algebra(metric(CatalogId::case3));
  CHECK(lifted_connection_prop31(l3, Z, LiftTag::vertical, Z, LiftTag::vertical).is_zero(0.0));
  CHECK(lifted_connection_prop31(l3, W, LiftTag::complete, Z, LiftTag::vertical) ==
        lift_vector(l3, QVec{0, q(1, 2), 0}, LiftTag::vertical));
}

TEST_CASE("lifted connection closed form matches the Koszul formula on the doubled algebra") {
  for (const auto& m : lift_bases()) {
    const auto report = verify_prop31(lift_algebra(m));
    CHECK(report.ok());
    CHECK(report.max_residual == 0);
    CHECK(report.pairs_checked == 4 * m.dim() * m.dim());
  }
  const auto lf = lift_algebra(metric(CatalogId::case2).convert<double>());
  const auto rf = verify_prop31(lf);
  CHECK(rf.ok());
  CHECK(rf.max_residual < 1e-14);
}

TEST_CASE("Berwald status of the lifts") {
  SUBCASE("case1") {
    Sampler rng(2);
    for (int s = 0; s < 5; ++s) {
      const auto st = berwald_status(
          RandersStructure<Rational>(metric(CatalogId::case1), shrink_to_valid(metric(CatalogId::case1), rng.rational_vector(3))));
      CHECK(st.f_berwald);
      CHECK(st.fc_berwald);
      CHECK(st.fv_berwald);
      CHECK(st.consistent());
    }
  }
  SUBCASE("case2: central drift, all lifts Berwald") {
    const auto st = berwald_status(instance(CatalogId::case2, {{"p", q(3, 10)}}));
    CHECK(st.f_berwald);
    CHECK(st.fc_berwald);
    CHECK(st.fv_berwald);
    CHECK(st.drift_central);
    CHECK(st.consistent());
  }
  SUBCASE("case3: trivial center, vertical lift not Berwald") {
    const auto st = berwald_status(instance(CatalogId::case3, {{"p", q(1, 2)}}));
    CHECK(st.f_berwald);
    CHECK(st.fc_berwald);
    CHECK_FALSE(st.fv_berwald);
    CHECK_FALSE(st.drift_central);
    CHECK_FALSE(st.reasons.empty());
    CHECK(st.consistent());
  }
  SUBCASE("non-Berwald base") {
    const auto st = berwald_status(RandersStructure<Rational>(metric(CatalogId::case3), QVec{q(1, 2), 0, 0}));
    CHECK_FALSE(st.f_berwald);
    CHECK_FALSE(st.fc_oracle);
    CHECK_FALSE(st.center_crosscheck.has_value());
    CHECK(st.oracle_agrees());
  }
}

TEST_CASE("lift criteria agree with direct checks on random drifts") {
  Sampler rng(41);
  for (auto id : kCatalogIds) {
    const auto m = metric(id);
    const auto l = lift_algebra(m);
    const auto z = center(m.algebra());
    for (int s = 0; s < 25; ++s) {
      QVec x = rng.rational_vector(m.dim());
      // Half the samples are drawn from the center so the central branch is exercised.
      if (s % 2 && !z.empty()) {
        x = QVec(m.dim());
        for (const auto& b : z) x += Q(rng.integer(-4, 4), rng.integer(1, 4)) * b;
      }
      const RandersStructure<Rational> f(m, shrink_to_valid(m, x));
      const bool berwald = is_berwald(f);
      CHECK(berwald == is_berwald(lift_randers(l, f, LiftTag::complete)));
      if (berwald)
        CHECK(is_berwald(lift_randers(l, f, LiftTag::vertical)) == in_span<Rational>(z, f.drift()));
      CHECK(berwald_status(f).oracle_agrees());
    }
  }
}

TEST_CASE("lifted geodesic vectors") {
  Sampler rng(17);
  for (auto id : kCatalogIds) {
    const auto m = metric(id);
    const auto l = lift_algebra(m);
    for (int s = 0; s < 30; ++s) {
      const auto u = random_nonzero(rng, m.dim());
      const bool base = is_geodesic_vector(m, u);
      for (auto tag : {LiftTag::complete, LiftTag::vertical})
        CHECK(is_geodesic_vector(l.doubled(), lift_vector(l, u, tag)) == base);
    }
  }
}

TEST_CASE("closed-form lifted flag curvature") {
  SUBCASE("zero drift, complete planes: the base sectional curvature") {
    const auto f = instance(CatalogId::case2).convert<double>();
    Sampler rng(3);
    for (int s = 0; s < 10; ++s) {
      const auto p = orthonormalize(f.base(), rng.real_vector(3), rng.real_vector(3));
      REQUIRE(p);
      CHECK(flag_curvature_theorem(f, LiftTag::complete, PlaneCase::cc, p->first, p->second) ==
            doctest::Approx(sectional_curvature(f.base(), p->second, p->first)).epsilon(1e-12));
    }
  }
  SUBCASE("flat base") {
    const auto f = instance(CatalogId::case3, {{"p", q(1, 2)}}).convert<double>();
    CHECK(flag_curvature_theorem(f, LiftTag::complete, PlaneCase::cc, DVec{1, 0, 0}, DVec{0, 1, 0}) == 0.0);
    CHECK(flag_curvature_theorem(f, LiftTag::complete, PlaneCase::vv, DVec{1, 0, 0}, DVec{0, 0, 1}) ==
          doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("the quarter term scales as 1/(4 nu)") {
    for (int nu : {1, 2, 4}) {
      const auto f = instance(CatalogId::case3, {{"nu", nu}, {"p", q(1, 10)}}).convert<double>();
      const double k =
          flag_curvature_theorem(f, LiftTag::complete, PlaneCase::vv, DVec{1, 0, 0}, DVec{0, 0, 1.0 / std::sqrt(nu)});
      CHECK(std::abs(k - 1.0 / (4.0 * nu)) <= 1e-12);
    }
  }
  SUBCASE("preconditions") {
    const auto f = instance(CatalogId::case3, {{"p", q(1, 10)}}).convert<double>();
    CHECK_THROWS_AS(flag_curvature_theorem(f, LiftTag::complete, PlaneCase::cc, DVec{1, 0, 0}, DVec{1, 1, 0}),
                    DomainError);
    CHECK_THROWS_AS(flag_curvature_theorem(f, LiftTag::vertical, PlaneCase::cc, DVec{1, 0, 0}, DVec{0, 1, 0}),
                    DomainError);
    const auto nb = RandersStructure<Rational>(metric(CatalogId::case3), QVec{q(1, 10), 0, 0}).convert<double>();
    CHECK_THROWS_AS(flag_curvature_theorem(nb, LiftTag::complete, PlaneCase::cc, DVec{1, 0, 0}, DVec{0, 1, 0}),
                    DomainError);
    CHECK_THROWS_AS(plane_case_from_int(5), DomainError);
  }
}

TEST_CASE("closed-form curvature against the definitional flag curvature") {
  SUBCASE("nilpotent5, both lifts") {
    const auto rep = verify_theorems_35_36(instance(CatalogId::nilpotent5).convert<double>(), 50, 0);
    CHECK(rep.modes_checked() == 2);
    CHECK(rep.max_deviation() <= 1e-9);
  }
  SUBCASE("zero drift on the abelian case") {
    const auto rep = verify_theorems_35_36(instance(CatalogId::case1).convert<double>(), 20, 0);
    CHECK(rep.modes_checked() == 2);
    CHECK(rep.max_deviation() <= 1e-12);
  }
  SUBCASE("non-nilpotent algebras: only the corrected mixed-plane form agrees") {
    for (const auto& f : {instance(CatalogId::case2, {{"p", q(3, 10)}}).convert<double>(),
                          instance(CatalogId::case3, {{"p", q(1, 10)}, {"nu", 4}}).convert<double>()}) {
      const auto rep = verify_theorems_35_36(f, 50, 1);
      CHECK(rep.max_deviation(TheoremForm::corrected) <= 1e-9);
      for (const auto& mode : rep.modes)
        for (const auto& c : mode.cases)
          if (c.plane == PlaneCase::cc || c.plane == PlaneCase::vv) CHECK(c.max_deviation <= 1e-9);
    }
  }
  SUBCASE("the two forms differ by exactly the last mixed-plane term") {
    const auto f = instance(CatalogId::case2, {{"p", q(3, 10)}}).convert<double>();
    const auto& m = f.base();
    const auto& a = m.algebra();
    Sampler rng(9);
    for (int s = 0; s < 20; ++s) {
      const auto p = orthonormalize(m, rng.real_vector(3), rng.real_vector(3));
      REQUIRE(p);
      const auto& [y, u] = *p;
      const double shift = 1.0 + inner(m, f.drift(), y);
      const double cv = flag_curvature_theorem(f, LiftTag::complete, PlaneCase::cv, y, u, TheoremForm::corrected) -
                        flag_curvature_theorem(f, LiftTag::complete, PlaneCase::cv, y, u, TheoremForm::as_printed);
      CHECK(cv == doctest::Approx(inner(m, bracket(a, bracket(a, y, u), u), y) / (shift * shift)).epsilon(1e-10));
      const double vc = flag_curvature_theorem(f, LiftTag::complete, PlaneCase::vc, y, u, TheoremForm::corrected) -
                        flag_curvature_theorem(f, LiftTag::complete, PlaneCase::vc, y, u, TheoremForm::as_printed);
      CHECK(vc == doctest::Approx(inner(m, bracket(a, bracket(a, u, y), y), u)).epsilon(1e-10));
    }
  }
  SUBCASE("hypothesis failure skips the mode") {
    const auto rep = verify_theorems_35_36(instance(CatalogId::case3, {{"p", q(1, 10)}}).convert<double>(), 5, 0);
    REQUIRE(rep.modes.size() == 2);
    CHECK(rep.modes[0].hypothesis_holds);
    CHECK_FALSE(rep.modes[1].hypothesis_holds);
  }
}

TEST_CASE("sign scan") {
  const auto flat = curvature_sign_scan(instance(CatalogId::case1).convert<double>(), LiftTag::complete, 50, 0);
  CHECK(flat.min == 0.0);
  CHECK(flat.max == 0.0);
  CHECK_FALSE(flat.has_negative);
  CHECK_FALSE(flat.has_positive);

  for (auto mode : {LiftTag::complete, LiftTag::vertical}) {
    const auto s = curvature_sign_scan(instance(CatalogId::nilpotent5).convert<double>(), mode, 100, 0);
    CHECK(s.has_negative);
    CHECK(s.has_zero);
    CHECK(s.has_positive);
  }

  const auto c3 = curvature_sign_scan(instance(CatalogId::case3, {{"p", q(1, 2)}}).convert<double>(),
                                      LiftTag::complete, 100, 0);
  CHECK(c3.has_positive);
  CHECK(c3.min > -1e-9);
}

TEST_CASE("sampling is reproducible") {
  const auto f = instance(CatalogId::nilpotent5).convert<double>();
  const auto a = verify_theorems_35_36(f, 10, 123);
  const auto b = verify_theorems_35_36(f, 10, 123);
  CHECK(a.max_deviation() == b.max_deviation());
  const auto s1 = curvature_sign_scan(f, LiftTag::vertical, 30, 5);
  const auto s2 = curvature_sign_scan(f, LiftTag::vertical, 30, 5);
  CHECK(s1.min == s2.min);
  CHECK(s1.max == s2.max);
}

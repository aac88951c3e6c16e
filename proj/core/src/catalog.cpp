#include "tangentlie/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "tangentlie/sampling.hpp"

namespace tangentlie {
namespace {

using QVector = AlgVector<Rational>;

Rational param(const CatalogParams& params, const std::string& name) { return params.at(name); }

void require_positive_nu(const CatalogParams& params) {
  if (!(param(params, "nu") > 0)) throw DomainError("parameter nu must be positive");
}

RandersStructure<Rational> three_dim(const std::vector<BracketEntry<Rational>>& brackets, Matrix<Rational> gram,
                                     QVector drift) {
  LieAlgebra<Rational> a({"W", "Y", "Z"}, brackets);
  return RandersStructure<Rational>(MetricLieAlgebra<Rational>(std::move(a), std::move(gram)), std::move(drift));
}

// A rational in (0, sqrt(bound_sq)/2], a little below half the bound.
Rational half_bound(const Rational& bound_sq) {
  const double half = std::sqrt(to_double(bound_sq)) / 2.0;
  Rational h(static_cast<long>(std::floor(half * 1000.0)), 1000);
  while (!(4 * h * h < bound_sq)) h -= Rational(1, 1000);
  return h;
}

}  // namespace

std::string_view to_string(CatalogId id) {
  switch (id) {
    case CatalogId::case1: return "case1";
    case CatalogId::case2: return "case2";
    case CatalogId::case3: return "case3";
    case CatalogId::nilpotent5: return "nilpotent5";
  }
  return "";
}

std::optional<CatalogId> parse_catalog_id(std::string_view text) {
  for (auto id : kCatalogIds)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::vector<std::string> parameter_names(CatalogId id) {
  switch (id) {
    case CatalogId::case1: return {"p", "q", "r"};
    case CatalogId::case2:
    case CatalogId::case3: return {"nu", "p"};
    case CatalogId::nilpotent5: return {"eps", "eps3"};
  }
  return {};
}

CatalogInstance build(CatalogId id, const CatalogParams& given) {
  CatalogParams params;
  switch (id) {
    case CatalogId::case1: params = {{"p", 0}, {"q", 0}, {"r", 0}}; break;
    case CatalogId::case2:
    case CatalogId::case3: params = {{"nu", 1}, {"p", 0}}; break;
    case CatalogId::nilpotent5: params = {{"eps", Rational(1, 2)}, {"eps3", 0}}; break;
  }
  for (const auto& [name, value] : given) {
    auto it = params.find(name);
    if (it == params.end())
      throw DomainError("unknown parameter '" + name + "' for " + std::string(to_string(id)));
    it->second = value;
  }

  const Rational half(1, 2);
  switch (id) {
    case CatalogId::case1: {
      const Rational p = param(params, "p"), q = param(params, "q"), r = param(params, "r");
      if (!(p * p + q * q + r * r < 1)) throw DomainError("case1 requires p^2 + q^2 + r^2 < 1");
      return {id, params, three_dim({}, Matrix<Rational>::identity(3), QVector{p, q, r})};
    }
    case CatalogId::case2: {
      require_positive_nu(params);
      const Rational nu = param(params, "nu"), p = param(params, "p");
      if (!(3 * p * p < 1)) throw DomainError("case2 requires |p| < sqrt(3)/3");
      Matrix<Rational> g{{1, half, 0}, {half, 1, 0}, {0, 0, nu}};
      // [W,Y] = 0, [W,Z] = −Y, [Y,Z] = −2Y
      return {id, params,
              three_dim({{0, 2, QVector{0, -1, 0}}, {1, 2, QVector{0, -2, 0}}}, std::move(g),
                        QVector{Rational(-2 * p), p, 0})};
    }
    case CatalogId::case3: {
      require_positive_nu(params);
      const Rational nu = param(params, "nu"), p = param(params, "p");
      if (!(nu * p * p < 1)) throw DomainError("case3 requires |p| < 1/sqrt(nu)");
      Matrix<Rational> g{{1, 0, 0}, {0, 1, 0}, {0, 0, nu}};
      // [W,Y] = 0, [W,Z] = Y, [Y,Z] = −W
      return {id, params,
              three_dim({{0, 2, QVector{0, 1, 0}}, {1, 2, QVector{-1, 0, 0}}}, std::move(g), QVector{0, 0, p})};
    }
    case CatalogId::nilpotent5: {
      const Rational eps = param(params, "eps"), eps3 = param(params, "eps3");
      if (!(eps * eps + eps3 * eps3 < 1)) throw DomainError("nilpotent5 requires eps^2 + eps3^2 < 1");
      // [e1, e2] = e3
      LieAlgebra<Rational> a({"e1", "e2", "e3", "e4", "e5"}, {{0, 1, QVector{0, 0, 1, 0, 0}}});
      return {id, params,
              RandersStructure<Rational>(MetricLieAlgebra<Rational>(std::move(a), Matrix<Rational>::identity(5)),
                                         QVector{0, 0, eps3, eps, 0})};
    }
  }
  throw DomainError("unknown catalog id");
}

bool Table1Report::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; });
}

Table1Report verify_table1() {
  Table1Report report;
  auto check = [&](CatalogId id, CatalogParams params, bool expected_fv) {
    const auto inst = build(id, params);
    Table1Row row{id, inst.params, berwald_status(inst.payload), expected_fv, false};
    row.pass = row.status.f_berwald && row.status.fc_berwald && row.status.fv_berwald == expected_fv &&
               row.status.consistent();
    report.rows.push_back(std::move(row));
  };
  const Rational h1 = half_bound(Rational(1, 3));  // each of p, q, r: norm at half of 1
  check(CatalogId::case1, {{"p", h1}, {"q", h1}, {"r", h1}}, true);
  check(CatalogId::case1, {{"p", Rational(-h1)}, {"q", 0}, {"r", h1}}, true);
  for (int nu : {1, 2, 4}) {
    const Rational h2 = half_bound(Rational(1, 3));
    const Rational h3 = half_bound(Rational(1, nu));
    for (int sign : {1, -1}) {
      check(CatalogId::case2, {{"nu", nu}, {"p", Rational(sign * h2)}}, true);
      check(CatalogId::case3, {{"nu", nu}, {"p", Rational(sign * h3)}}, false);
    }
    check(CatalogId::case3, {{"nu", nu}, {"p", 0}}, true);
  }
  return report;
}

bool Example44Case::pass() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.pass(); }) &&
         off_family_samples > 0 && off_family_rejected == off_family_samples;
}

bool Example44Report::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const Example44Case& c) { return c.pass(); });
}

Example44Report verify_example44(std::uint64_t seed, std::size_t off_family) {
  Example44Report report;
  report.seed = seed;
  Sampler rng(seed);
  // Nonzero grid values.
  const std::vector<Rational> grid5{Rational(-2), Rational(-1), Rational(1, 2), Rational(1), Rational(3)};
  std::vector<Rational> grid25;
  for (int k = 1; k <= 25; ++k) grid25.push_back(Rational(k % 2 ? -k : k, 3));

  auto check_plane = [&](FamilyCheck& fc, const MetricLieAlgebra<Rational>& m) {
    for (const auto& a : grid5)
      for (const auto& c : grid5) {
        ++fc.points;
        if (is_geodesic_vector(m, QVector(a * fc.family.basis[0] + c * fc.family.basis[1]))) ++fc.geodesic;
      }
  };
  auto check_line = [&](FamilyCheck& fc, const MetricLieAlgebra<Rational>& m) {
    for (const auto& a : grid25) {
      ++fc.points;
      if (is_geodesic_vector(m, QVector(a * fc.family.basis[0]))) ++fc.geodesic;
    }
  };

  for (auto id : {CatalogId::case2, CatalogId::case3})
    for (int nu : {1, 2}) {
      const auto inst = build(id, {{"nu", nu}});
      const auto& m = inst.payload.base();
      Example44Case ec{id, Rational(nu), {}, 0, 0, geodesic_vectors(m)};
      if (id == CatalogId::case2) {
        ec.families.push_back({"aW - a/2 Y + cZ", {{QVector{1, Rational(-1, 2), 0}, QVector{0, 0, 1}}}});
        ec.families.push_back({"aW + a/2 Y", {{QVector{1, Rational(1, 2), 0}}}});
        check_plane(ec.families[0], m);
        check_line(ec.families[1], m);
      } else {
        ec.families.push_back({"cZ", {{QVector{0, 0, 1}}}});
        ec.families.push_back({"aW + bY", {{QVector{1, 0, 0}, QVector{0, 1, 0}}}});
        check_line(ec.families[0], m);
        check_plane(ec.families[1], m);
      }
      while (ec.off_family_samples < off_family) {
        const auto u = rng.rational_vector(m.dim());
        if (u.is_zero(0.0)) continue;
        const bool on_family = std::any_of(ec.families.begin(), ec.families.end(), [&](const FamilyCheck& f) {
          return in_span<Rational>(f.family.basis, u);
        });
        if (on_family) continue;
        ++ec.off_family_samples;
        if (!is_geodesic_vector(m, u)) ++ec.off_family_rejected;
      }
      report.cases.push_back(std::move(ec));
    }
  return report;
}

bool Remark38Report::pass() const {
  auto all_signs = [](const SignScan& s) { return s.has_negative && s.has_zero && s.has_positive; };
  return status.f_berwald && status.fc_berwald && status.fv_berwald && status.consistent() && all_signs(complete) &&
         all_signs(vertical);
}

Remark38Report verify_remark38(std::uint64_t seed, std::size_t samples) {
  const auto inst = build(CatalogId::nilpotent5, {{"eps", Rational(1, 2)}});
  Remark38Report report;
  report.status = berwald_status(inst.payload);
  const auto f = inst.payload.convert<double>();
  report.complete = curvature_sign_scan(f, LiftTag::complete, samples, seed);
  report.vertical = curvature_sign_scan(f, LiftTag::vertical, samples, seed);
  return report;
}

}  // namespace tangentlie

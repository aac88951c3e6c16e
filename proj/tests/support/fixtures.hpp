#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tangentlie/tangentlie.hpp"

namespace fixtures {

using tangentlie::AlgVector;
using tangentlie::LieAlgebra;
using tangentlie::Matrix;
using tangentlie::MetricLieAlgebra;
using tangentlie::Rational;
using tangentlie::RandersStructure;

using Q = Rational;
using QVec = AlgVector<Rational>;
using QMat = Matrix<Rational>;
using DVec = AlgVector<double>;

inline Q q(long n, long d = 1) { return Q(n, d); }

inline RandersStructure<Rational> instance(tangentlie::CatalogId id, const tangentlie::CatalogParams& p = {}) {
  return tangentlie::build(id, p).payload;
}

inline MetricLieAlgebra<Rational> metric(tangentlie::CatalogId id, const tangentlie::CatalogParams& p = {}) {
  return instance(id, p).base();
}

inline LieAlgebra<Rational> algebra(tangentlie::CatalogId id) { return metric(id).algebra(); }

inline LieAlgebra<Rational> abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra<Rational>(names);
}

/// AᵀA + I for a random rational A: symmetric positive definite.
inline QMat random_spd(tangentlie::Sampler& rng, std::size_t n) {
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Q(rng.integer(-3, 3), rng.integer(1, 3));
  return a.transpose() * a + QMat::identity(n);
}

/// A nonzero random rational vector.
inline QVec random_nonzero(tangentlie::Sampler& rng, std::size_t n) {
  for (;;) {
    auto v = rng.rational_vector(n);
    if (!v.is_zero(0.0)) return v;
  }
}

/// Rescales v so that g(v, v) < 1, keeping it rational.
inline QVec shrink_to_valid(const MetricLieAlgebra<Rational>& m, QVec v) {
  const Q n2 = tangentlie::norm_squared(m, v);
  Q s(1);
  while (!(s * s * n2 < 1)) s /= 2;
  return s * v;
}

/// ½ ∂²/∂s∂t F²(y + s u + t v) at 0, by central differences in long double.
inline double fd_fundamental_tensor(const RandersStructure<double>& f, const DVec& y, const DVec& u,
                                    const DVec& v, long double h = 1e-5L) {
  const auto& g = f.base().gram();
  const std::size_t n = f.dim();
  auto f2 = [&](long double s, long double t) {
    std::vector<long double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = y[i] + s * u[i] + t * v[i];
    long double a2 = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a2 += z[i] * static_cast<long double>(g(i, j)) * z[j];
      long double xi = 0;
      for (std::size_t j = 0; j < n; ++j) xi += static_cast<long double>(g(i, j)) * f.drift()[j];
      b += xi * z[i];
    }
    const long double big_f = std::sqrt(a2) + b;
    return big_f * big_f;
  };
  const long double d = f2(h, h) - f2(h, -h) - f2(-h, h) + f2(-h, -h);
  return static_cast<double>(d / (8 * h * h));
}

}  // namespace fixtures

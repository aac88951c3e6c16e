#pragma once

#include <cstddef>
#include <utility>

#include "tangentlie/error.hpp"
#include "tangentlie/lie_algebra.hpp"
#include "tangentlie/linalg.hpp"

namespace tangentlie {

/// A Lie algebra with a left-invariant inner product, given by its Gram matrix
/// in the algebra basis. Construction rejects non-symmetric or non-positive
/// Gram matrices (leading principal minors in exact mode, Cholesky in float mode).
template <Scalar S>
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra<S> algebra, Matrix<S> gram, double tol = kDefaultTolerance)
      : algebra_(std::move(algebra)), gram_(std::move(gram)) {
    if (gram_.rows() != algebra_.dim() || gram_.cols() != algebra_.dim())
      throw DimensionError("metric shape does not match the algebra dimension");
    if (!gram_.is_symmetric(tol)) throw DomainError("metric is not symmetric");
    bool spd = false;
    if constexpr (is_exact_v<S>) {
      spd = leading_minors_positive(gram_);
    } else {
      spd = cholesky_succeeds(gram_, 0.0);
    }
    if (!spd) throw DomainError("metric is not positive definite");
    gram_inverse_ = inverse(gram_, 0.0);
  }

  const LieAlgebra<S>& algebra() const { return algebra_; }
  const Matrix<S>& gram() const { return gram_; }
  const Matrix<S>& gram_inverse() const { return gram_inverse_; }
  std::size_t dim() const { return algebra_.dim(); }

  template <Scalar T>
  MetricLieAlgebra<T> convert() const {
    return MetricLieAlgebra<T>(algebra_.template convert<T>(), gram_.template convert<T>());
  }

 private:
  LieAlgebra<S> algebra_;
  Matrix<S> gram_;
  Matrix<S> gram_inverse_;
};

template <Scalar S>
S inner(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, const AlgVector<S>& v) {
  require_dim(m.algebra(), u);
  require_dim(m.algebra(), v);
  return bilinear(m.gram(), u, v);
}

template <Scalar S>
S norm_squared(const MetricLieAlgebra<S>& m, const AlgVector<S>& u) {
  return inner(m, u, u);
}

/// Metric adjoint of ad_u: g(ad*_u v, w) = g(v, [u, w]), i.e. G⁻¹·ad(u)ᵀ·G.
template <Scalar S>
Matrix<S> ad_star(const MetricLieAlgebra<S>& m, const AlgVector<S>& u) {
  return m.gram_inverse() * ad_operator(m.algebra(), u).transpose() * m.gram();
}

/// ad*_u v without forming the full matrix.
template <Scalar S>
AlgVector<S> ad_star_apply(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, const AlgVector<S>& v) {
  const AlgVector<S> gv = m.gram() * v;
  AlgVector<S> t(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) t[j] = dot(bracket(m.algebra(), u, m.algebra().basis_vector(j)), gv);
  return m.gram_inverse() * t;
}

/// Levi-Civita connection of the left-invariant metric (Koszul formula):
/// ∇_u v = ½([u, v] − ad*_u v − ad*_v u).
template <Scalar S>
AlgVector<S> levi_civita(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, const AlgVector<S>& v) {
  AlgVector<S> r = bracket(m.algebra(), u, v);
  r -= ad_star_apply(m, u, v);
  r -= ad_star_apply(m, v, u);
  return r *= S(1) / S(2);
}

/// R(u, v)w = ∇_u∇_v w − ∇_v∇_u w − ∇_[u,v] w.
template <Scalar S>
AlgVector<S> curvature(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, const AlgVector<S>& v,
                       const AlgVector<S>& w) {
  AlgVector<S> r = levi_civita(m, u, levi_civita(m, v, w));
  r -= levi_civita(m, v, levi_civita(m, u, w));
  r -= levi_civita(m, bracket(m.algebra(), u, v), w);
  return r;
}

/// ⟨R(u,v)v, u⟩ / (|u|²|v|² − ⟨u,v⟩²). Accepts any spanning pair of the plane.
template <Scalar S>
S sectional_curvature(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, const AlgVector<S>& v,
                      double tol = kDefaultTolerance) {
  const S uv = inner(m, u, v);
  const S denom = inner(m, u, u) * inner(m, v, v) - uv * uv;
  if (is_zero(denom, tol)) throw DomainError("sectional curvature of a degenerate plane");
  return S(inner(m, curvature(m, u, v, v), u) / denom);
}

/// u is a geodesic vector iff g([u, e_i], u) = 0 for every basis vector e_i.
template <Scalar S>
bool is_geodesic_vector(const MetricLieAlgebra<S>& m, const AlgVector<S>& u, double tol = kDefaultTolerance) {
  require_dim(m.algebra(), u);
  if (u.is_zero(0.0)) throw DomainError("geodesic vectors must be nonzero");
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!is_zero(inner(m, bracket(m.algebra(), u, m.algebra().basis_vector(i)), u), tol)) return false;
  return true;
}

}  // namespace tangentlie

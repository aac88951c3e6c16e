#pragma once

#include <cmath>
#include <utility>

#include "tangentlie/error.hpp"
#include "tangentlie/riemann.hpp"

namespace tangentlie {

/// Left-invariant Randers metric F(y) = sqrt(g(y, y)) + g(X, y) with drift X.
/// The drift is not required to be short at construction; check_valid reports it
/// and the operations that need it refuse invalid structures.
template <Scalar S>
class RandersStructure {
 public:
  RandersStructure(MetricLieAlgebra<S> base, AlgVector<S> drift) : base_(std::move(base)), drift_(std::move(drift)) {
    require_dim(base_.algebra(), drift_);
  }

  const MetricLieAlgebra<S>& base() const { return base_; }
  const AlgVector<S>& drift() const { return drift_; }
  std::size_t dim() const { return base_.dim(); }

  template <Scalar T>
  RandersStructure<T> convert() const {
    return RandersStructure<T>(base_.template convert<T>(), drift_.template convert<T>());
  }

 private:
  MetricLieAlgebra<S> base_;
  AlgVector<S> drift_;
};

/// A flag: the plane span{pole, transverse} with the pole distinguished.
template <Scalar S>
struct Flag {
  AlgVector<S> pole;
  AlgVector<S> transverse;
};

/// g(X, X) < 1, exact for rational input.
template <Scalar S>
bool check_valid(const RandersStructure<S>& f) {
  return norm_squared(f.base(), f.drift()) < S(1);
}

template <Scalar S>
void require_valid(const RandersStructure<S>& f) {
  if (!check_valid(f)) throw DomainError("drift has g-norm >= 1; not a Randers metric");
}

inline double randers_norm(const RandersStructure<double>& f, const AlgVector<double>& y) {
  return std::sqrt(std::max(0.0, norm_squared(f.base(), y))) + inner(f.base(), f.drift(), y);
}

/// Closed-form fundamental tensor g_y(u, v) of a Randers metric:
///   (F/α)(⟨u,v⟩ − ⟨y,u⟩⟨y,v⟩/α²) + (⟨y,u⟩/α + b(u))(⟨y,v⟩/α + b(v)),
/// with α = |y| and b(w) = g(X, w).
inline double fundamental_tensor(const RandersStructure<double>& f, const AlgVector<double>& y,
                                 const AlgVector<double>& u, const AlgVector<double>& v) {
  const auto& m = f.base();
  const double alpha = std::sqrt(norm_squared(m, y));
  if (!(alpha > 0.0)) throw DomainError("fundamental tensor at the zero vector");
  const double big_f = alpha + inner(m, f.drift(), y);
  const double yu = inner(m, y, u), yv = inner(m, y, v);
  const double lu = yu / alpha + inner(m, f.drift(), u);
  const double lv = yv / alpha + inner(m, f.drift(), v);
  return (big_f / alpha) * (inner(m, u, v) - yu * yv / (alpha * alpha)) + lu * lv;
}

/// Berwald type: the drift is parallel, ∇_{e_i} X = 0 for every basis vector.
template <Scalar S>
bool is_berwald(const RandersStructure<S>& f, double tol = kDefaultTolerance) {
  require_valid(f);
  const auto& m = f.base();
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!levi_civita(m, m.algebra().basis_vector(i), f.drift()).is_zero(tol)) return false;
  return true;
}

/// Douglas type for Randers metrics: g(X, [e_i, e_j]) = 0 for all pairs.
template <Scalar S>
bool is_douglas(const RandersStructure<S>& f, double tol = kDefaultTolerance) {
  require_valid(f);
  const auto& m = f.base();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (!is_zero(inner(m, f.drift(), m.algebra().basis_bracket(i, j)), tol)) return false;
  return true;
}

inline constexpr double kDegenerateFlagThreshold = 1e-12;

/// Flag curvature g_y(R(u,y)y, u) / (g_y(y,y) g_y(u,u) − g_y(y,u)²) with the
/// Chern connection replaced by the Levi-Civita connection of g. Only valid in
/// the Berwald regime, so non-Berwald structures are refused.
inline double flag_curvature_definitional(const RandersStructure<double>& f, const Flag<double>& flag,
                                          double tol = kDefaultTolerance) {
  if (!is_berwald(f, tol)) throw DomainError("flag curvature requires a Berwald-type Randers metric");
  const auto& m = f.base();
  const auto& y = flag.pole;
  const auto& u = flag.transverse;
  require_dim(m.algebra(), y);
  require_dim(m.algebra(), u);
  const double yu = inner(m, y, u);
  if (norm_squared(m, y) * norm_squared(m, u) - yu * yu < kDegenerateFlagThreshold)
    throw DomainError("degenerate flag: pole and transverse are linearly dependent");
  const double numer = fundamental_tensor(f, y, curvature(m, u, y, y), u);
  const double gyy = fundamental_tensor(f, y, y, y);
  const double guu = fundamental_tensor(f, y, u, u);
  const double gyu = fundamental_tensor(f, y, y, u);
  return numer / (gyy * guu - gyu * gyu);
}

/// u is a geodesic vector of F iff g_u(u, [u, e_i]) = 0 for every basis vector.
inline bool is_finsler_geodesic_vector(const RandersStructure<double>& f, const AlgVector<double>& u,
                                       double tol = 1e-10) {
  require_valid(f);
  require_dim(f.base().algebra(), u);
  if (u.is_zero(0.0)) throw DomainError("geodesic vectors must be nonzero");
  const auto& a = f.base().algebra();
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (std::abs(fundamental_tensor(f, u, u, bracket(a, u, a.basis_vector(i)))) > tol) return false;
  return true;
}

}  // namespace tangentlie

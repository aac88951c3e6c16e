#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangentlie/error.hpp"
#include "tangentlie/linalg.hpp"
#include "tangentlie/scalar.hpp"

namespace tangentlie {

/// One structure-constant entry [e_i, e_j] = value, as supplied by a caller.
template <Scalar S>
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  AlgVector<S> value;
};

/// A finite-dimensional real Lie algebra given by structure constants over a
/// named basis. Only the entries with i < j are stored; the rest follow by
/// antisymmetry. The Jacobi identity is not assumed; see check_jacobi.
template <Scalar S>
class LieAlgebra {
 public:
  /// Abelian algebra on the given basis.
  explicit LieAlgebra(std::vector<std::string> basis_names)
      : names_(std::move(basis_names)), upper_(pair_count() * dim(), S(0)) {
    if (names_.empty()) throw DomainError("a Lie algebra needs at least one basis vector");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw DomainError("duplicate basis name '" + names_[i] + "'");
  }

  /// Entries with i > j are stored negated. A nonzero [e_i, e_i] or two
  /// conflicting entries for the same unordered pair are errors.
  LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry<S>>& entries)
      : LieAlgebra(std::move(basis_names)) {
    std::vector<bool> seen(pair_count(), false);
    for (const auto& e : entries) {
      if (e.i >= dim() || e.j >= dim()) throw DimensionError("bracket index out of range");
      if (e.value.size() != dim()) throw DimensionError("bracket value has wrong length");
      if (e.i == e.j) {
        if (!e.value.is_zero(0.0)) throw DomainError("[e_i, e_i] must vanish");
        continue;
      }
      const bool flip = e.i > e.j;
      const std::size_t p = pair_index(std::min(e.i, e.j), std::max(e.i, e.j));
      AlgVector<S> v = flip ? AlgVector<S>(-e.value) : e.value;
      if (seen[p]) {
        for (std::size_t k = 0; k < dim(); ++k)
          if (upper_[p * dim() + k] != v[k])
            throw DomainError("conflicting brackets for [" + names_[e.i] + ", " + names_[e.j] + "]");
        continue;
      }
      seen[p] = true;
      for (std::size_t k = 0; k < dim(); ++k) upper_[p * dim() + k] = v[k];
    }
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  AlgVector<S> basis_vector(std::size_t i) const { return AlgVector<S>::unit(dim(), i); }

  /// c[i][j][k], antisymmetrized on access.
  S constant(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return S(0);
    if (i < j) return upper_[pair_index(i, j) * dim() + k];
    return -upper_[pair_index(j, i) * dim() + k];
  }

  /// [e_i, e_j].
  AlgVector<S> basis_bracket(std::size_t i, std::size_t j) const {
    AlgVector<S> v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = constant(i, j, k);
    return v;
  }

  /// The stored entries with i < j whose bracket is nonzero.
  std::vector<BracketEntry<S>> nonzero_brackets() const {
    std::vector<BracketEntry<S>> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        auto v = basis_bracket(i, j);
        if (!v.is_zero(0.0)) out.push_back({i, j, std::move(v)});
      }
    return out;
  }

  template <Scalar T>
  LieAlgebra<T> convert() const {
    std::vector<BracketEntry<T>> entries;
    for (const auto& e : nonzero_brackets()) entries.push_back({e.i, e.j, e.value.template convert<T>()});
    return LieAlgebra<T>(names_, entries);
  }

 private:
  std::size_t pair_count() const { return names_.size() * (names_.size() - 1) / 2; }
  // Position of (i, j), i < j, in row-major order of the strict upper triangle.
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  std::vector<std::string> names_;
  std::vector<S> upper_;
};

template <Scalar S>
void require_dim(const LieAlgebra<S>& a, const AlgVector<S>& v) {
  if (v.size() != a.dim())
    throw DimensionError("vector of length " + std::to_string(v.size()) + " in a " +
                         std::to_string(a.dim()) + "-dimensional algebra");
}

/// Bilinear extension of the structure constants: Σ u_i v_j [e_i, e_j].
template <Scalar S>
AlgVector<S> bracket(const LieAlgebra<S>& a, const AlgVector<S>& u, const AlgVector<S>& v) {
  require_dim(a, u);
  require_dim(a, v);
  const std::size_t n = a.dim();
  AlgVector<S> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0 && v[i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const S w = u[i] * v[j] - u[j] * v[i];
      if (w == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const S& c = a.constant(i, j, k);
        if (c != 0) out[k] += w * c;
      }
    }
  }
  return out;
}

template <Scalar S>
struct JacobiResidual {
  std::array<std::size_t, 3> indices;
  AlgVector<S> value;
};

template <Scalar S>
struct JacobiReport {
  std::vector<JacobiResidual<S>> residuals;
  bool ok() const { return residuals.empty(); }
};

/// Evaluates [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] on every
/// triple i < j < k (the Jacobiator is totally antisymmetric, so this covers
/// all triples) and lists the nonzero ones.
template <Scalar S>
JacobiReport<S> check_jacobi(const LieAlgebra<S>& a, double tol = kDefaultTolerance) {
  JacobiReport<S> report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
        auto r = bracket(a, ei, a.basis_bracket(j, k)) + bracket(a, ej, a.basis_bracket(k, i)) +
                 bracket(a, ek, a.basis_bracket(i, j));
        if (!r.is_zero(tol)) report.residuals.push_back({{i, j, k}, std::move(r)});
      }
  return report;
}

/// Matrix of v ↦ [u, v].
template <Scalar S>
Matrix<S> ad_operator(const LieAlgebra<S>& a, const AlgVector<S>& u) {
  require_dim(a, u);
  Matrix<S> m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, bracket(a, u, a.basis_vector(j)));
  return m;
}

/// Basis of the center, the null space of the stacked ad(e_i).
template <Scalar S>
std::vector<AlgVector<S>> center(const LieAlgebra<S>& a, double tol = kDefaultTolerance) {
  const std::size_t n = a.dim();
  Matrix<S> stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ad = ad_operator(a, a.basis_vector(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = ad(r, c);
  }
  return null_space(stacked, tol);
}

/// Whether v lies in the span of the given vectors.
template <Scalar S>
bool in_span(std::span<const AlgVector<S>> basis, const AlgVector<S>& v, double tol = kDefaultTolerance) {
  if (v.is_zero(tol)) return true;
  std::vector<AlgVector<S>> rows(basis.begin(), basis.end());
  const std::size_t r0 = rank_of<S>(rows, tol);
  rows.push_back(v);
  return rank_of<S>(rows, tol) == r0;
}

}  // namespace tangentlie

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangentlie/lie_algebra.hpp"
#include "tangentlie/randers.hpp"
#include "tangentlie/riemann.hpp"

namespace tangentlie {

enum class LiftTag { complete, vertical };

inline std::string_view to_string(LiftTag t) { return t == LiftTag::complete ? "complete" : "vertical"; }
inline std::string_view suffix(LiftTag t) { return t == LiftTag::complete ? "^c" : "^v"; }

/// The Lie algebra of the tangent group: basis [e_1^c .. e_n^c, e_1^v .. e_n^v] with
///   [X^c, Y^c] = [X, Y]^c,  [X^v, Y^c] = [X, Y]^v,  [X^v, Y^v] = 0,
/// and the block-diagonal metric g̃(X^c, Y^c) = g̃(X^v, Y^v) = g(X, Y), g̃(X^c, Y^v) = 0.
template <Scalar S>
class LiftedAlgebra {
 public:
  LiftedAlgebra(MetricLieAlgebra<S> base, MetricLieAlgebra<S> doubled)
      : base_(std::move(base)), doubled_(std::move(doubled)) {}

  const MetricLieAlgebra<S>& base() const { return base_; }
  const MetricLieAlgebra<S>& doubled() const { return doubled_; }
  std::size_t base_dim() const { return base_.dim(); }

  std::size_t index(std::size_t i, LiftTag tag) const {
    return tag == LiftTag::complete ? i : base_dim() + i;
  }

 private:
  MetricLieAlgebra<S> base_;
  MetricLieAlgebra<S> doubled_;
};

template <Scalar S>
AlgVector<S> embed(std::size_t base_dim, const AlgVector<S>& u, LiftTag tag) {
  if (u.size() != base_dim) throw DimensionError("lifted vector must have the base dimension");
  AlgVector<S> out(2 * base_dim);
  const std::size_t offset = tag == LiftTag::complete ? 0 : base_dim;
  for (std::size_t i = 0; i < base_dim; ++i) out[offset + i] = u[i];
  return out;
}

/// Requires the base to satisfy the Jacobi identity.
template <Scalar S>
LiftedAlgebra<S> lift_algebra(const MetricLieAlgebra<S>& m, double tol = kDefaultTolerance) {
  const auto& a = m.algebra();
  if (!check_jacobi(a, tol).ok()) throw DomainError("cannot lift an algebra that violates the Jacobi identity");
  const std::size_t n = a.dim();
  std::vector<std::string> names;
  for (auto tag : {LiftTag::complete, LiftTag::vertical})
    for (const auto& name : a.basis_names()) names.push_back(name + std::string(suffix(tag)));

  std::vector<BracketEntry<S>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = a.basis_bracket(i, j);
      if (b.is_zero(0.0)) continue;
      if (i < j) entries.push_back({i, j, embed(n, b, LiftTag::complete)});
      entries.push_back({n + i, j, embed(n, b, LiftTag::vertical)});
    }

  Matrix<S> gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram(i, j) = m.gram()(i, j);
      gram(n + i, n + j) = m.gram()(i, j);
    }
  return LiftedAlgebra<S>(m, MetricLieAlgebra<S>(LieAlgebra<S>(std::move(names), entries), std::move(gram), tol));
}

template <Scalar S>
AlgVector<S> lift_vector(const LiftedAlgebra<S>& l, const AlgVector<S>& u, LiftTag tag) {
  return embed(l.base_dim(), u, tag);
}

/// The lifted Levi-Civita connection expressed through base quantities:
///   ∇̃_{u^c} v^c = (∇_u v)^c
///   ∇̃_{u^v} v^v = (∇_u v − ½[u, v])^c
///   ∇̃_{u^c} v^v = (∇_u v + ½ ad*_v u)^v
///   ∇̃_{u^v} v^c = (∇_u v + ½ ad*_u v)^v
template <Scalar S>
AlgVector<S> lifted_connection_prop31(const LiftedAlgebra<S>& l, const AlgVector<S>& u, LiftTag tu,
                                      const AlgVector<S>& v, LiftTag tv) {
  const auto& m = l.base();
  const S half = S(1) / S(2);
  AlgVector<S> nabla = levi_civita(m, u, v);
  if (tu == LiftTag::complete && tv == LiftTag::complete) return lift_vector(l, nabla, LiftTag::complete);
  if (tu == LiftTag::vertical && tv == LiftTag::vertical)
    return lift_vector(l, AlgVector<S>(nabla - half * bracket(m.algebra(), u, v)), LiftTag::complete);
  if (tu == LiftTag::complete)
    return lift_vector(l, AlgVector<S>(nabla + half * ad_star_apply(m, v, u)), LiftTag::vertical);
  return lift_vector(l, AlgVector<S>(nabla + half * ad_star_apply(m, u, v)), LiftTag::vertical);
}

template <Scalar S>
struct Prop31Residual {
  std::size_t i;
  LiftTag ti;
  std::size_t j;
  LiftTag tj;
  S residual;
};

template <Scalar S>
struct Prop31Report {
  std::size_t pairs_checked = 0;
  S max_residual = S(0);
  std::vector<Prop31Residual<S>> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares the closed-form lifted connection against the Koszul formula run
/// directly on the doubled algebra, for every tagged basis pair.
template <Scalar S>
Prop31Report<S> verify_prop31(const LiftedAlgebra<S>& l, double tol = kDefaultTolerance) {
  Prop31Report<S> report;
  const std::size_t n = l.base_dim();
  for (auto ti : {LiftTag::complete, LiftTag::vertical})
    for (auto tj : {LiftTag::complete, LiftTag::vertical})
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto ei = l.base().algebra().basis_vector(i);
          const auto ej = l.base().algebra().basis_vector(j);
          const auto closed = lifted_connection_prop31(l, ei, ti, ej, tj);
          const auto direct = levi_civita(l.doubled(), l.doubled().algebra().basis_vector(l.index(i, ti)),
                                          l.doubled().algebra().basis_vector(l.index(j, tj)));
          const S r = max_abs(AlgVector<S>(closed - direct));
          ++report.pairs_checked;
          if (r > report.max_residual) report.max_residual = r;
          if (!is_zero(r, tol)) report.mismatches.push_back({i, ti, j, tj, r});
        }
  return report;
}

/// F^c or F^v: the Randers metric on the doubled algebra with drift X^c or X^v.
template <Scalar S>
RandersStructure<S> lift_randers(const LiftedAlgebra<S>& l, const RandersStructure<S>& f, LiftTag tag) {
  require_valid(f);
  return RandersStructure<S>(l.doubled(), lift_vector(l, f.drift(), tag));
}

template <Scalar S>
RandersStructure<S> lift_randers(const RandersStructure<S>& f, LiftTag tag, double tol = kDefaultTolerance) {
  return lift_randers(lift_algebra(f.base(), tol), f, tag);
}

/// Vertical-lift Berwald criterion: ad*_X = ad_X and ∇_X e_i = ½[X, e_i] for all i.
template <Scalar S>
bool vertical_berwald_criterion(const RandersStructure<S>& f, std::vector<std::string>* reasons = nullptr,
                                double tol = kDefaultTolerance) {
  const auto& m = f.base();
  const auto& x = f.drift();
  bool ok = true;
  if (!(ad_star(m, x) - ad_operator(m.algebra(), x)).is_zero(tol)) {
    ok = false;
    if (reasons) reasons->push_back("ad*_X != ad_X");
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto ei = m.algebra().basis_vector(i);
    const auto lhs = levi_civita(m, x, ei);
    const auto rhs = (S(1) / S(2)) * bracket(m.algebra(), x, ei);
    if (!AlgVector<S>(lhs - rhs).is_zero(tol)) {
      ok = false;
      if (reasons) reasons->push_back("nabla_X " + m.algebra().basis_names()[i] + " != 1/2 [X, " +
                                      m.algebra().basis_names()[i] + "]");
    }
  }
  return ok;
}

struct BerwaldStatus {
  bool f_berwald = false;
  bool fc_berwald = false;  // complete-lift criterion: same as f_berwald
  bool fv_berwald = false;  // vertical-lift criterion
  bool fc_oracle = false;   // is_berwald run on the lifted F^c
  bool fv_oracle = false;   // is_berwald run on the lifted F^v
  bool drift_central = false;
  /// Set when F is Berwald: whether F^v Berwald ⇔ drift central holds.
  std::optional<bool> center_crosscheck;
  std::vector<std::string> reasons;

  bool oracle_agrees() const { return fc_berwald == fc_oracle && fv_berwald == fv_oracle; }
  bool consistent() const { return oracle_agrees() && center_crosscheck.value_or(true); }
};

template <Scalar S>
BerwaldStatus berwald_status(const RandersStructure<S>& f, double tol = kDefaultTolerance) {
  require_valid(f);
  BerwaldStatus s;
  s.f_berwald = is_berwald(f, tol);
  if (!s.f_berwald) s.reasons.push_back("X is not parallel for the Levi-Civita connection of g");
  s.fc_berwald = s.f_berwald;
  s.fv_berwald = vertical_berwald_criterion(f, &s.reasons, tol);

  const auto z = center(f.base().algebra(), tol);
  s.drift_central = in_span<S>(z, f.drift(), tol);
  if (s.f_berwald) s.center_crosscheck = (s.fv_berwald == s.drift_central);

  const auto lifted = lift_algebra(f.base(), tol);
  s.fc_oracle = is_berwald(lift_randers(lifted, f, LiftTag::complete), tol);
  s.fv_oracle = is_berwald(lift_randers(lifted, f, LiftTag::vertical), tol);
  return s;
}

// ---------------------------------------------------------------------------
// Flag curvature of the lifted Randers metrics (float mode).

/// Plane cases for a base orthonormal pair {Y, U}:
/// 1: {Y^c, U^c}, 2: {Y^c, U^v}, 3: {Y^v, U^c}, 4: {Y^v, U^v}; the pole is always Y's lift.
enum class PlaneCase { cc = 1, cv = 2, vc = 3, vv = 4 };

inline constexpr PlaneCase kPlaneCases[] = {PlaneCase::cc, PlaneCase::cv, PlaneCase::vc, PlaneCase::vv};

/// Which version of the mixed-plane (cases 2 and 3) formula to evaluate.
/// `as_printed` ends with −½g([[Y,U],U],Y) as the theorem states it; the
/// lifted curvature computed from the connection ends with +½g([[Y,U],U],Y)
/// instead, which is `corrected`. Cases 1 and 4 are identical in both.
enum class TheoremForm { as_printed, corrected };

inline std::string_view to_string(TheoremForm f) { return f == TheoremForm::as_printed ? "as_printed" : "corrected"; }

PlaneCase plane_case_from_int(int k);
LiftTag pole_tag(PlaneCase c);
LiftTag transverse_tag(PlaneCase c);

/// Evaluates the closed-form flag curvature of F^c (mode complete) or F^v
/// (mode vertical) on a lifted plane in terms of base quantities. The
/// hypotheses (F Berwald for complete, F^v Berwald for vertical) are checked
/// once at construction.
class LiftedFlagCurvature {
 public:
  LiftedFlagCurvature(RandersStructure<double> f, LiftTag mode, TheoremForm form = TheoremForm::as_printed,
                      double tol = kDefaultTolerance);

  /// {y, u} must be g-orthonormal to within 1e-10.
  double operator()(PlaneCase c, const AlgVector<double>& y, const AlgVector<double>& u) const;

  const RandersStructure<double>& structure() const { return f_; }
  LiftTag mode() const { return mode_; }
  TheoremForm form() const { return form_; }

 private:
  RandersStructure<double> f_;
  LiftTag mode_;
  TheoremForm form_;
};

double flag_curvature_theorem(const RandersStructure<double>& f, LiftTag mode, PlaneCase c,
                              const AlgVector<double>& y, const AlgVector<double>& u,
                              TheoremForm form = TheoremForm::as_printed, double tol = kDefaultTolerance);

/// g-orthonormal pair spanning the same plane as (a, b) via Gram-Schmidt;
/// nullopt when the pair is numerically dependent.
std::optional<std::pair<AlgVector<double>, AlgVector<double>>> orthonormalize(const MetricLieAlgebra<double>& m,
                                                                              const AlgVector<double>& a,
                                                                              const AlgVector<double>& b);

struct PlaneCaseDeviation {
  PlaneCase plane = PlaneCase::cc;
  std::size_t samples = 0;
  double max_deviation = 0.0;            // as-printed formula vs definitional
  double max_deviation_corrected = 0.0;  // corrected formula vs definitional
};

struct TheoremModeReport {
  LiftTag mode = LiftTag::complete;
  bool hypothesis_holds = false;
  std::vector<PlaneCaseDeviation> cases;
  double max_deviation(TheoremForm form = TheoremForm::as_printed) const;
};

struct TheoremReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<TheoremModeReport> modes;
  double max_deviation(TheoremForm form = TheoremForm::as_printed) const;
  /// Number of modes whose hypothesis held and were therefore compared.
  std::size_t modes_checked() const;
};

/// For each mode whose hypothesis holds (or only `only_mode` when given),
/// draws `samples` random g-orthonormal pairs per plane case and compares both
/// forms of the closed-form curvature with the definitional flag curvature of
/// the lifted Randers metric on the lifted flag.
TheoremReport verify_theorems_35_36(const RandersStructure<double>& f, std::size_t samples, std::uint64_t seed,
                                    std::optional<LiftTag> only_mode = std::nullopt,
                                    double tol = kDefaultTolerance);

struct SignScan {
  double min = 0.0;
  double max = 0.0;
  std::size_t evaluations = 0;
  bool has_negative = false;
  bool has_zero = false;
  bool has_positive = false;
};

/// Closed-form flag curvature over all four plane cases, on every
/// orthonormalized basis pair and on `samples` random orthonormal pairs.
SignScan curvature_sign_scan(const RandersStructure<double>& f, LiftTag mode, std::size_t samples,
                             std::uint64_t seed, TheoremForm form = TheoremForm::as_printed,
                             double zero_tol = 1e-9);

}  // namespace tangentlie

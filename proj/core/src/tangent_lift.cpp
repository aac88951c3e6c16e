#include "tangentlie/tangent_lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tangentlie/sampling.hpp"

namespace tangentlie {
namespace {

constexpr double kOrthonormalTolerance = 1e-10;

// ½g([U,∇_Y U],Y) − ½g(∇_U ad*_U Y, Y) + ¼g([U, ad*_U Y], Y) ∓ ½g([[Y,U],U],Y)
double mixed_term(const MetricLieAlgebra<double>& m, const AlgVector<double>& y, const AlgVector<double>& u,
                  TheoremForm form) {
  const double last_sign = form == TheoremForm::as_printed ? -0.5 : 0.5;
  const auto& a = m.algebra();
  const auto ad_star_u_y = ad_star_apply(m, u, y);
  return 0.5 * inner(m, bracket(a, u, levi_civita(m, y, u)), y) -
         0.5 * inner(m, levi_civita(m, u, ad_star_u_y), y) + 0.25 * inner(m, bracket(a, u, ad_star_u_y), y) +
         last_sign * inner(m, bracket(a, bracket(a, y, u), u), y);
}

// g(∇_[U,Y] Y, U) + ¼‖[U,Y]‖²
double vertical_term(const MetricLieAlgebra<double>& m, const AlgVector<double>& y, const AlgVector<double>& u) {
  const auto uy = bracket(m.algebra(), u, y);
  return inner(m, levi_civita(m, uy, y), u) + 0.25 * norm_squared(m, uy);
}

}  // namespace

PlaneCase plane_case_from_int(int k) {
  if (k < 1 || k > 4) throw DomainError("plane case must be 1, 2, 3 or 4");
  return static_cast<PlaneCase>(k);
}

LiftTag pole_tag(PlaneCase c) {
  return (c == PlaneCase::cc || c == PlaneCase::cv) ? LiftTag::complete : LiftTag::vertical;
}

LiftTag transverse_tag(PlaneCase c) {
  return (c == PlaneCase::cc || c == PlaneCase::vc) ? LiftTag::complete : LiftTag::vertical;
}

LiftedFlagCurvature::LiftedFlagCurvature(RandersStructure<double> f, LiftTag mode, TheoremForm form, double tol)
    : f_(std::move(f)), mode_(mode), form_(form) {
  require_valid(f_);
  if (mode_ == LiftTag::complete) {
    if (!is_berwald(f_, tol)) throw DomainError("F^c curvature formulas require F to be of Berwald type");
  } else if (!vertical_berwald_criterion(f_, nullptr, tol)) {
    throw DomainError("F^v curvature formulas require F^v to be of Berwald type");
  }
}

double LiftedFlagCurvature::operator()(PlaneCase c, const AlgVector<double>& y, const AlgVector<double>& u) const {
  const auto& m = f_.base();
  require_dim(m.algebra(), y);
  require_dim(m.algebra(), u);
  if (std::abs(norm_squared(m, y) - 1.0) > kOrthonormalTolerance ||
      std::abs(norm_squared(m, u) - 1.0) > kOrthonormalTolerance ||
      std::abs(inner(m, y, u)) > kOrthonormalTolerance)
    throw DomainError("{Y, U} must be g-orthonormal");

  const double k = sectional_curvature(m, u, y);
  const double shift = 1.0 + inner(m, f_.drift(), y);
  const double prefactor = 1.0 / (shift * shift);
  double riemannian = 0.0;
  switch (c) {
    case PlaneCase::cc: riemannian = k; break;
    case PlaneCase::cv: riemannian = k + mixed_term(m, y, u, form_); break;
    case PlaneCase::vc: riemannian = k + mixed_term(m, u, y, form_); break;
    case PlaneCase::vv: riemannian = k + vertical_term(m, y, u); break;
  }
  // F^c rescales the planes whose pole is a complete lift, F^v those whose pole is vertical.
  const bool scaled = (mode_ == LiftTag::complete) == (pole_tag(c) == LiftTag::complete);
  return scaled ? prefactor * riemannian : riemannian;
}

double flag_curvature_theorem(const RandersStructure<double>& f, LiftTag mode, PlaneCase c,
                              const AlgVector<double>& y, const AlgVector<double>& u, TheoremForm form,
                              double tol) {
  return LiftedFlagCurvature(f, mode, form, tol)(c, y, u);
}

std::optional<std::pair<AlgVector<double>, AlgVector<double>>> orthonormalize(const MetricLieAlgebra<double>& m,
                                                                              const AlgVector<double>& a,
                                                                              const AlgVector<double>& b) {
  const double na = std::sqrt(norm_squared(m, a));
  if (na < 1e-8) return std::nullopt;
  AlgVector<double> y = (1.0 / na) * a;
  AlgVector<double> u = b - inner(m, b, y) * y;
  const double nu = std::sqrt(norm_squared(m, u));
  if (nu < 1e-8) return std::nullopt;
  u *= 1.0 / nu;
  // One re-orthogonalization pass keeps the pair within the 1e-10 check.
  u -= inner(m, u, y) * y;
  u *= 1.0 / std::sqrt(norm_squared(m, u));
  return std::make_pair(std::move(y), std::move(u));
}

double TheoremModeReport::max_deviation(TheoremForm form) const {
  double d = 0.0;
  for (const auto& c : cases)
    d = std::max(d, form == TheoremForm::as_printed ? c.max_deviation : c.max_deviation_corrected);
  return d;
}

double TheoremReport::max_deviation(TheoremForm form) const {
  double d = 0.0;
  for (const auto& m : modes)
    if (m.hypothesis_holds) d = std::max(d, m.max_deviation(form));
  return d;
}

std::size_t TheoremReport::modes_checked() const {
  return static_cast<std::size_t>(std::count_if(modes.begin(), modes.end(),
                                                [](const TheoremModeReport& m) { return m.hypothesis_holds; }));
}

TheoremReport verify_theorems_35_36(const RandersStructure<double>& f, std::size_t samples, std::uint64_t seed,
                                    std::optional<LiftTag> only_mode, double tol) {
  TheoremReport report;
  report.seed = seed;
  report.samples = samples;
  const auto lifted = lift_algebra(f.base(), tol);
  const std::size_t n = f.dim();
  for (auto mode : {LiftTag::complete, LiftTag::vertical}) {
    if (only_mode && *only_mode != mode) continue;
    TheoremModeReport mr;
    mr.mode = mode;
    std::optional<LiftedFlagCurvature> theorem, corrected;
    try {
      theorem.emplace(f, mode, TheoremForm::as_printed, tol);
      corrected.emplace(f, mode, TheoremForm::corrected, tol);
      mr.hypothesis_holds = true;
    } catch (const DomainError&) {
      mr.hypothesis_holds = false;
    }
    if (mr.hypothesis_holds) {
      const auto lifted_f = lift_randers(lifted, f, mode);
      Sampler rng(seed + (mode == LiftTag::complete ? 0 : 1));
      for (auto c : kPlaneCases) {
        PlaneCaseDeviation dev;
        dev.plane = c;
        while (dev.samples < samples) {
          const auto pair = orthonormalize(f.base(), rng.real_vector(n), rng.real_vector(n));
          if (!pair) continue;
          const auto& [y, u] = *pair;
          const double closed = (*theorem)(c, y, u);
          const double closed_fixed = (*corrected)(c, y, u);
          const Flag<double> flag{lift_vector(lifted, y, pole_tag(c)), lift_vector(lifted, u, transverse_tag(c))};
          const double direct = flag_curvature_definitional(lifted_f, flag, tol);
          dev.max_deviation = std::max(dev.max_deviation, std::abs(closed - direct));
          dev.max_deviation_corrected = std::max(dev.max_deviation_corrected, std::abs(closed_fixed - direct));
          ++dev.samples;
        }
        mr.cases.push_back(dev);
      }
    }
    report.modes.push_back(std::move(mr));
  }
  return report;
}

SignScan curvature_sign_scan(const RandersStructure<double>& f, LiftTag mode, std::size_t samples,
                             std::uint64_t seed, TheoremForm form, double zero_tol) {
  const LiftedFlagCurvature theorem(f, mode, form);
  const std::size_t n = f.dim();
  SignScan scan;
  scan.min = std::numeric_limits<double>::infinity();
  scan.max = -std::numeric_limits<double>::infinity();
  auto record = [&](const AlgVector<double>& y, const AlgVector<double>& u) {
    for (auto c : kPlaneCases) {
      const double k = theorem(c, y, u);
      scan.min = std::min(scan.min, k);
      scan.max = std::max(scan.max, k);
      ++scan.evaluations;
      if (std::abs(k) <= zero_tol) {
        scan.has_zero = true;
      } else if (k < 0) {
        scan.has_negative = true;
      } else {
        scan.has_positive = true;
      }
    }
  };
  const auto& a = f.base().algebra();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (const auto pair = orthonormalize(f.base(), a.basis_vector(i), a.basis_vector(j))) record(pair->first, pair->second);
    }
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples;) {
    const auto pair = orthonormalize(f.base(), rng.real_vector(n), rng.real_vector(n));
    if (!pair) continue;
    record(pair->first, pair->second);
    ++s;
  }
  if (scan.evaluations == 0) scan.min = scan.max = 0.0;
  return scan;
}

}  // namespace tangentlie

#include "tangentlie/geodesics.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace tangentlie {
namespace {

using QMatrix = Matrix<Rational>;
using QVector = AlgVector<Rational>;
using Subspace = std::vector<QVector>;

struct PartialSolution {
  std::vector<Subspace> components;
  std::vector<std::string> notes;
};

// Linearly independent forms spanning the same space as `forms`.
std::vector<QMatrix> independent_forms(const std::vector<QMatrix>& forms, std::size_t d) {
  if (forms.empty()) return {};
  QMatrix flat(forms.size(), d * d);
  for (std::size_t f = 0; f < forms.size(); ++f)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat(f, i * d + j) = forms[f](i, j);
  const auto ech = row_reduce(std::move(flat));
  std::vector<QMatrix> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    QMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) q(i, j) = ech.reduced(r, i * d + j);
    out.push_back(std::move(q));
  }
  return out;
}

std::size_t matrix_rank(const QMatrix& q) { return row_reduce(q).rank(); }

QMatrix restrict_form(const QMatrix& q, const Subspace& basis) {
  const std::size_t k = basis.size();
  QMatrix r(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) r(a, b) = bilinear(q, basis[a], basis[b]);
  return r;
}

// Extends `partial` (independent) with standard unit vectors to a basis of R^d
// and returns only the added vectors.
Subspace complement(const Subspace& partial, std::size_t d) {
  Subspace current = partial, added;
  for (std::size_t i = 0; i < d && current.size() < d; ++i) {
    current.push_back(QVector::unit(d, i));
    if (rank_of<Rational>(current) == current.size()) {
      added.push_back(QVector::unit(d, i));
    } else {
      current.pop_back();
    }
  }
  return added;
}

// Zero set of a form of rank <= 2 as a union of rational subspaces. Returns
// nullopt when some isotropic line is irrational.
std::optional<std::vector<Subspace>> zero_set_components(const QMatrix& q, std::size_t d,
                                                         std::vector<std::string>& notes) {
  const std::size_t r = matrix_rank(q);
  const Subspace kernel = null_space(q);
  if (r == 0) return std::vector<Subspace>{complement({}, d)};
  if (r == 1) {
    if (kernel.empty()) return std::vector<Subspace>{};
    return std::vector<Subspace>{kernel};
  }
  // r == 2: kernel ⊕ isotropic lines of the nondegenerate binary part.
  const Subspace comp = complement(kernel, d);
  const QVector& b1 = comp[0];
  const QVector& b2 = comp[1];
  const Rational a = bilinear(q, b1, b1), b = bilinear(q, b1, b2), c = bilinear(q, b2, b2);
  const Rational disc = b * b - a * c;
  std::vector<Subspace> out;
  if (disc < 0) {
    if (!kernel.empty()) out.push_back(kernel);
    return out;
  }
  std::vector<QVector> lines;
  if (a == 0) {
    lines.push_back(b1);
    lines.push_back(QVector(Rational(-c) * b1 + Rational(2 * b) * b2));
  } else {
    Rational s;
    if (!rational_sqrt(disc, s)) {
      notes.push_back("a quadric in the system splits into irrational planes; those planes are not listed");
      return std::nullopt;
    }
    lines.push_back(QVector(Rational(-b + s) * b1 + a * b2));
    lines.push_back(QVector(Rational(-b - s) * b1 + a * b2));
  }
  for (auto& w : lines) {
    Subspace comp_space = kernel;
    comp_space.push_back(std::move(w));
    out.push_back(std::move(comp_space));
  }
  return out;
}

// Integer polynomial coefficients (low to high) of det(p + t·q) for 3x3 forms.
std::vector<BigInt> pencil_determinant(const QMatrix& p, const QMatrix& q) {
  const std::size_t n = p.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(determinant(QMatrix(p + t * q)));
  }
  // Newton interpolation, then expand to monomial coefficients.
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly(n + 1, Rational(0));
  for (std::size_t i = n + 1; i-- > 0;) {
    // poly = poly * (t - xs[i]) + coef[i]
    std::vector<Rational> next(n + 1, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  BigInt lcm = 1;
  for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(c)));
  std::vector<BigInt> out;
  for (const auto& c : poly) out.push_back(BigInt(boost::multiprecision::numerator(Rational(c * lcm))));
  return out;
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  if (n == 0 || n > BigInt(1000000000000LL)) return out;
  for (BigInt k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k * k != n) out.push_back(n / k);
  }
  return out;
}

Rational evaluate(const std::vector<BigInt>& poly, const Rational& t) {
  Rational r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = r * t + Rational(poly[i]);
  return r;
}

// Rational roots by the rational root theorem (skipped for huge coefficients).
std::vector<Rational> rational_roots(std::vector<BigInt> poly) {
  std::vector<Rational> roots;
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.size() <= 1) return roots;
  std::size_t shift = 0;
  while (poly[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  std::vector<BigInt> reduced(poly.begin() + static_cast<std::ptrdiff_t>(shift), poly.end());
  if (reduced.size() <= 1) return roots;
  for (const auto& p : divisors(reduced.front()))
    for (const auto& q : divisors(reduced.back()))
      for (int sign : {1, -1}) {
        const Rational t(BigInt(sign * p), q);
        if (evaluate(reduced, t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
          roots.push_back(t);
      }
  return roots;
}

// A member of span(forms) of rank <= 2, if one can be found exactly.
std::optional<QMatrix> degenerate_member(const std::vector<QMatrix>& forms, std::size_t d) {
  for (const auto& f : forms)
    if (matrix_rank(f) <= 2) return f;
  if (d != 3 || forms.size() < 2) return std::nullopt;
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = 0; b < forms.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : rational_roots(pencil_determinant(forms[a], forms[b]))) {
        QMatrix m = forms[a] + t * forms[b];
        if (!m.is_zero(0.0) && matrix_rank(m) <= 2) return m;
      }
    }
  // Small integer combinations of three forms.
  if (forms.size() >= 3) {
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) {
        QMatrix m = forms[0] + Rational(i) * forms[1] + Rational(j) * forms[2];
        if (!m.is_zero(0.0) && matrix_rank(m) <= 2) return m;
      }
  }
  return std::nullopt;
}

bool contained_in(const Subspace& a, const Subspace& b) {
  Subspace all = b;
  all.insert(all.end(), a.begin(), a.end());
  return rank_of<Rational>(all) == rank_of<Rational>(b);
}

PartialSolution solve(const std::vector<QMatrix>& forms_in, std::size_t d) {
  PartialSolution out;
  const auto forms = independent_forms(forms_in, d);
  if (forms.empty()) {
    out.components.push_back(complement({}, d));
    return out;
  }
  if (d == 1) return out;
  const auto q = degenerate_member(forms, d);
  if (!q) {
    const bool definite = forms.size() == 1 &&
                          (leading_minors_positive(forms[0]) || leading_minors_positive(QMatrix(Rational(-1) * forms[0])));
    if (!definite) out.notes.push_back("the solution set contains a non-linear cone component that is not listed");
    return out;
  }
  const auto components = zero_set_components(*q, d, out.notes);
  if (!components) return out;
  for (const auto& comp : *components) {
    std::vector<QMatrix> restricted;
    for (const auto& f : forms) restricted.push_back(restrict_form(f, comp));
    auto sub = solve(restricted, comp.size());
    out.notes.insert(out.notes.end(), sub.notes.begin(), sub.notes.end());
    for (const auto& s : sub.components) {
      Subspace mapped;
      for (const auto& coords : s) {
        QVector v(d);
        for (std::size_t k = 0; k < coords.size(); ++k) v += coords[k] * comp[k];
        mapped.push_back(std::move(v));
      }
      out.components.push_back(std::move(mapped));
    }
  }
  return out;
}

Subspace canonical_basis(const Subspace& s, std::size_t d) {
  QMatrix m(s.size(), d);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = s[i][j];
  const auto ech = row_reduce(std::move(m));
  Subspace out;
  for (std::size_t r = 0; r < ech.rank(); ++r) out.push_back(normalize_direction(ech.reduced.row(r)));
  return out;
}

}  // namespace

GeodesicSystem geodesic_system(const MetricLieAlgebra<Rational>& m) {
  const std::size_t n = m.dim();
  GeodesicSystem sys;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = m.algebra().basis_vector(i);
    QMatrix t(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const auto col = bracket(m.algebra(), m.algebra().basis_vector(a), ei);
      for (std::size_t b = 0; b < n; ++b) t(a, b) = inner(m, col, m.algebra().basis_vector(b));
    }
    sys.forms.push_back(Rational(1, 2) * (t + t.transpose()));
  }
  return sys;
}

GeodesicSolution geodesic_vectors(const MetricLieAlgebra<Rational>& m) {
  GeodesicSolution sol;
  sol.system = geodesic_system(m);
  const std::size_t d = m.dim();
  if (d > 3) {
    sol.notes.push_back("closed-form families are only computed for algebras of dimension <= 3");
    return sol;
  }
  auto partial = solve(sol.system.forms, d);
  std::vector<Subspace> kept;
  for (std::size_t i = 0; i < partial.components.size(); ++i) {
    const auto& c = partial.components[i];
    bool redundant = false;
    for (std::size_t j = 0; j < partial.components.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& other = partial.components[j];
      if (!contained_in(c, other)) continue;
      // Strictly smaller, or an equal span that appears earlier.
      redundant = other.size() > c.size() || (other.size() == c.size() && j < i);
    }
    if (!redundant) kept.push_back(canonical_basis(c, d));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Subspace& a, const Subspace& b) { return a.size() > b.size(); });
  for (auto& k : kept) sol.families.push_back({std::move(k)});
  std::sort(partial.notes.begin(), partial.notes.end());
  partial.notes.erase(std::unique(partial.notes.begin(), partial.notes.end()), partial.notes.end());
  sol.notes = std::move(partial.notes);
  sol.complete = sol.notes.empty();
  return sol;
}

bool same_family(const GeodesicFamily& a, const GeodesicFamily& b) {
  return a.dimension() == b.dimension() && contained_in(a.basis, b.basis);
}

}  // namespace tangentlie

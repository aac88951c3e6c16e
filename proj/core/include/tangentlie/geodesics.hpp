#pragma once

#include <string>
#include <vector>

#include "tangentlie/linalg.hpp"
#include "tangentlie/riemann.hpp"

namespace tangentlie {

/// The quadratic system g([u, e_i], u) = 0, one symmetric form per basis vector e_i.
struct GeodesicSystem {
  std::vector<Matrix<Rational>> forms;
};

/// A linear family of solutions: every vector in the span of `basis`.
struct GeodesicFamily {
  std::vector<AlgVector<Rational>> basis;
  std::size_t dimension() const { return basis.size(); }
};

struct GeodesicSolution {
  GeodesicSystem system;
  std::vector<GeodesicFamily> families;
  /// True when the solution set was fully decomposed into the listed families.
  bool complete = false;
  std::vector<std::string> notes;
};

GeodesicSystem geodesic_system(const MetricLieAlgebra<Rational>& m);

/// Exact decomposition of the geodesic-vector cone into maximal linear families.
/// Decomposition is attempted for dim <= 3 only; larger algebras get the raw system.
/// Components that are not rational linear subspaces (irreducible conic cones,
/// irrational planes) are reported in `notes` and leave `complete` false.
GeodesicSolution geodesic_vectors(const MetricLieAlgebra<Rational>& m);

/// Whether span(a) == span(b).
bool same_family(const GeodesicFamily& a, const GeodesicFamily& b);

}  // namespace tangentlie

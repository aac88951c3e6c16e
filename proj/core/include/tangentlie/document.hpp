#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tangentlie/lie_algebra.hpp"
#include "tangentlie/randers.hpp"
#include "tangentlie/riemann.hpp"

namespace tangentlie {

using Json = nlohmann::ordered_json;

/// An algebra document as read from disk. Numbers are always held exactly;
/// callers convert to double when running in float mode.
///
/// Schema:
///   {"dim": 3, "basis": ["W", "Y", "Z"],
///    "brackets": {"W,Z": [0, 1, 0], "Y,Z": ["-1", 0, 0]},
///    "metric": [[1, 0, 0], [0, 1, 0], [0, 0, "1/2"]],
///    "drift": [0, 0, 0.1]}
/// Bracket keys name two basis vectors (or their 0-based indices). "metric"
/// and "drift" are optional. Numeric entries are json numbers or "p/q" strings.
struct AlgebraDocument {
  LieAlgebra<Rational> algebra;
  std::optional<Matrix<Rational>> metric;
  std::optional<AlgVector<Rational>> drift;

  /// Throws ParseError when the document has no metric; DomainError when it is not SPD.
  MetricLieAlgebra<Rational> metric_algebra() const;
  /// A missing drift is the zero vector (Riemannian case).
  RandersStructure<Rational> randers() const;
};

/// Throws ParseError on malformed json, schema violations, dimension mismatches
/// and non-numeric entries. Antisymmetry is normalized; Jacobi is not checked.
AlgebraDocument parse_document(std::string_view text);
AlgebraDocument document_from_json(const Json& doc);

LieAlgebra<Rational> parse_algebra(std::string_view text);

/// Exact scalars become "p/q" strings, floats become json numbers.
template <Scalar S>
Json scalar_json(const S& x) {
  if constexpr (is_exact_v<S>) {
    return format_rational(x);
  } else {
    return x;
  }
}

template <Scalar S>
Json vector_json(const AlgVector<S>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_json(c));
  return out;
}

template <Scalar S>
Json matrix_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

/// Serializes in the input schema, so the output can be read back.
template <Scalar S>
Json document_json(const MetricLieAlgebra<S>& m, const std::optional<AlgVector<S>>& drift = std::nullopt) {
  const auto& a = m.algebra();
  Json doc;
  doc["dim"] = a.dim();
  doc["basis"] = a.basis_names();
  Json brackets = Json::object();
  for (const auto& e : a.nonzero_brackets())
    brackets[a.basis_names()[e.i] + "," + a.basis_names()[e.j]] = vector_json(e.value);
  doc["brackets"] = std::move(brackets);
  doc["metric"] = matrix_json(m.gram());
  if (drift) doc["drift"] = vector_json(*drift);
  return doc;
}

}  // namespace tangentlie

#include "tangentlie/document.hpp"

#include <cstdint>

#include "tangentlie/error.hpp"

namespace tangentlie {
namespace {

Rational number(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string");
}

AlgVector<Rational> coefficients(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != n)
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  AlgVector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = number(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::size_t basis_index(const std::vector<std::string>& names, const std::string& token, const std::string& key) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return i;
  if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
    const auto idx = std::stoul(token);
    if (idx < names.size()) return idx;
  }
  throw ParseError("brackets: unknown basis vector '" + token + "' in key '" + key + "'");
}

}  // namespace

MetricLieAlgebra<Rational> AlgebraDocument::metric_algebra() const {
  if (!metric) throw ParseError("document has no metric");
  return MetricLieAlgebra<Rational>(algebra, *metric);
}

RandersStructure<Rational> AlgebraDocument::randers() const {
  return RandersStructure<Rational>(metric_algebra(), drift.value_or(AlgVector<Rational>(algebra.dim())));
}

AlgebraDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed json: ") + e.what());
  }
  return document_from_json(doc);
}

AlgebraDocument document_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a json object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const auto dim_signed = doc["dim"].get<std::int64_t>();
  if (dim_signed < 1) throw ParseError("\"dim\" must be positive");
  const auto n = static_cast<std::size_t>(dim_signed);

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const auto& b = doc["basis"];
    if (!b.is_array()) throw ParseError("\"basis\" must be an array of strings");
    for (const auto& name : b) {
      if (!name.is_string()) throw ParseError("\"basis\" must be an array of strings");
      names.push_back(name.get<std::string>());
    }
    if (names.size() != n)
      throw ParseError("\"basis\" has " + std::to_string(names.size()) + " names but dim is " + std::to_string(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }

  std::vector<BracketEntry<Rational>> entries;
  if (doc.contains("brackets")) {
    const auto& br = doc["brackets"];
    if (!br.is_object()) throw ParseError("\"brackets\" must be an object");
    for (const auto& [key, value] : br.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ParseError("bracket key '" + key + "' must have the form \"A,B\"");
      const auto i = basis_index(names, trim(key.substr(0, comma)), key);
      const auto j = basis_index(names, trim(key.substr(comma + 1)), key);
      entries.push_back({i, j, coefficients(value, n, "brackets[" + key + "]")});
    }
  }

  AlgebraDocument out{[&] {
    try {
      return LieAlgebra<Rational>(names, entries);
    } catch (const Error& e) {
      throw ParseError(std::string("brackets: ") + e.what());
    }
  }(), std::nullopt, std::nullopt};

  if (doc.contains("metric")) {
    const auto& g = doc["metric"];
    if (!g.is_array() || g.size() != n) throw ParseError("\"metric\" must be an " + std::to_string(n) + "x" +
                                                         std::to_string(n) + " array of arrays");
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = coefficients(g[i], n, "metric[" + std::to_string(i) + "]");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
    }
    out.metric = std::move(m);
  }
  if (doc.contains("drift")) out.drift = coefficients(doc["drift"], n, "drift");
  return out;
}

LieAlgebra<Rational> parse_algebra(std::string_view text) { return parse_document(text).algebra; }

}  // namespace tangentlie

#include <doctest.h>

#include "fixtures.hpp"

using namespace tangentlie;
using namespace fixtures;

namespace {
const char* kCase3 = R"({
  "dim": 3, "basis": ["W", "Y", "Z"],
  "brackets": {"W,Z": [0, 1, 0], "Y,Z": [-1, 0, 0]},
  "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "drift": [0, 0, "1/10"]
})";
}

TEST_CASE("parse a document") {
  const auto doc = parse_document(kCase3);
  CHECK(doc.algebra.basis_bracket(0, 2) == QVec{0, 1, 0});
  CHECK(doc.algebra.basis_bracket(1, 2) == QVec{-1, 0, 0});
  REQUIRE(doc.drift);
  CHECK((*doc.drift)[2] == q(1, 10));
  CHECK(doc.randers().base().gram() == QMat::identity(3));
}

TEST_CASE("brackets by index, reversed keys, decimals") {
  const auto doc = parse_document(R"({"dim": 2, "brackets": {"1,0": [0.5, 0]}})");
  CHECK(doc.algebra.basis_bracket(0, 1) == QVec{q(-1, 2), 0});
  CHECK(doc.algebra.basis_names().size() == 2);
}

TEST_CASE("abelian and metric-free documents") {
  const auto doc = parse_document(R"({"dim": 3, "basis": ["W", "Y", "Z"], "brackets": {}})");
  CHECK(doc.algebra.nonzero_brackets().empty());
  CHECK_FALSE(doc.metric.has_value());
  CHECK_THROWS_AS(doc.metric_algebra(), ParseError);
  CHECK(parse_algebra(R"({"dim": 1})").dim() == 1);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"basis": ["A"]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "basis": ["A"]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "brackets": {"0,1": [1]}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "brackets": {"0,1": ["x", 0]}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "brackets": {"0,7": [1, 0]}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "brackets": {"0,1": [true, 0]}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "metric": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "drift": [0, "1/0"]})"), ParseError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == q(3, 4));
  CHECK(parse_rational("-6/8") == q(-3, 4));
  CHECK(parse_rational("0.1") == q(1, 10));
  CHECK(parse_rational("1e-3") == q(1, 1000));
  CHECK(parse_rational("-2.5E1") == q(-25));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(rational_from_double(0.3) == q(3, 10));
  CHECK(format_rational(q(-3, 4)) == "-3/4");
  CHECK(format_rational(q(5)) == "5");
}

TEST_CASE("serialization round trip") {
  for (auto id : kCatalogIds) {
    const auto f = instance(id, id == CatalogId::case2 ? CatalogParams{{"p", q(1, 3)}} : CatalogParams{});
    const auto json = document_json(f.base(), std::optional(f.drift()));
    const auto back = parse_document(json.dump()).randers();
    CHECK(back.base().gram() == f.base().gram());
    CHECK(back.drift() == f.drift());
    CHECK(back.base().algebra().nonzero_brackets().size() == f.base().algebra().nonzero_brackets().size());
  }
  CHECK(scalar_json(q(1, 3)) == Json("1/3"));
  CHECK(scalar_json(0.25) == Json(0.25));
}

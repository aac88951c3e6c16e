#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangentlie/geodesics.hpp"
#include "tangentlie/randers.hpp"
#include "tangentlie/tangent_lift.hpp"

namespace tangentlie {

/// Built-in instances. case1..case3 are the three-dimensional algebras that
/// carry Berwald Randers metrics; nilpotent5 is the Heisenberg algebra times a
/// plane, a two-step nilpotent algebra of dimension 5 with 3-dimensional center.
enum class CatalogId { case1, case2, case3, nilpotent5 };

inline constexpr CatalogId kCatalogIds[] = {CatalogId::case1, CatalogId::case2, CatalogId::case3,
                                            CatalogId::nilpotent5};

std::string_view to_string(CatalogId id);
std::optional<CatalogId> parse_catalog_id(std::string_view text);

/// Parameter names per id:
///   case1: p, q, r (drift pW + qY + rZ, default 0)
///   case2: nu (default 1), p (drift −2pW + pY, default 0)
///   case3: nu (default 1), p (drift pZ, default 0)
///   nilpotent5: eps (coefficient of e4, default 1/2), eps3 (coefficient of e3, default 0)
using CatalogParams = std::map<std::string, Rational>;

std::vector<std::string> parameter_names(CatalogId id);

struct CatalogInstance {
  CatalogId id;
  CatalogParams params;  // every parameter, defaults filled in
  RandersStructure<Rational> payload;
};

/// Throws DomainError on an unknown parameter or one outside its range
/// (nu > 0; case1 p²+q²+r² < 1; case2 3p² < 1; case3 nu·p² < 1; nilpotent5 eps²+eps3² < 1).
CatalogInstance build(CatalogId id, const CatalogParams& params = {});

struct Table1Row {
  CatalogId id;
  CatalogParams params;
  BerwaldStatus status;
  bool expected_fv = false;
  bool pass = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool pass() const;
};

/// Berwald status of F, F^c, F^v over the parameter grid nu ∈ {1, 2, 4}, p at
/// ±(a rational just under) half its bound, plus the p = 0 sub-check for case3.
Table1Report verify_table1();

struct FamilyCheck {
  std::string label;
  GeodesicFamily family;
  std::size_t points = 0;
  std::size_t geodesic = 0;
  bool pass() const { return points > 0 && geodesic == points; }
};

struct Example44Case {
  CatalogId id;
  Rational nu;
  std::vector<FamilyCheck> families;
  std::size_t off_family_samples = 0;
  std::size_t off_family_rejected = 0;
  GeodesicSolution solved;  // exact decomposition, for comparison with the stated families
  bool pass() const;
};

struct Example44Report {
  std::uint64_t seed = 0;
  std::vector<Example44Case> cases;
  bool pass() const;
};

/// Checks the stated geodesic families of case2 (aW − a/2·Y + cZ and aW + a/2·Y)
/// and case3 (cZ and aW + bY) for nu ∈ {1, 2} on a 25-point rational grid per
/// family, and that `off_family` random vectors outside the families are rejected.
Example44Report verify_example44(std::uint64_t seed = 0, std::size_t off_family = 100);

struct Remark38Report {
  BerwaldStatus status;
  SignScan complete;
  SignScan vertical;
  bool pass() const;
};

/// nilpotent5 with eps = 1/2: F, F^c, F^v Berwald and flag curvatures of both
/// lifts taking negative, zero and positive values.
Remark38Report verify_remark38(std::uint64_t seed = 0, std::size_t samples = 200);

}  // namespace tangentlie

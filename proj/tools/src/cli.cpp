#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tangentlie/tangentlie.hpp"

namespace tangentlie::cli {
namespace {

struct Options {
  std::string arith = "exact";
  double tol = kDefaultTolerance;
  std::string format = "text";
  std::uint64_t seed = 0;

  std::string file;
  std::string catalog;
  std::vector<std::string> params;

  std::string mode;
  int plane_case = 0;
  std::string pole;
  std::string transverse;
  bool corrected = false;
  std::size_t samples = 0;
  std::string vector;
  std::size_t off_family = 100;
};

struct Report {
  std::string command;
  Json results = Json::object();
  Json residuals = Json::object();
  bool pass = true;
  bool randomized = false;
  bool bare = false;  // text output is just the lines, no header or verdict
  std::optional<std::string> digest;
  std::vector<std::string> text;
};

// ---------------------------------------------------------------------------
// Input handling

struct Input {
  Json doc;
  AlgebraDocument parsed;
  std::string source;
};

CatalogParams parse_params(const std::vector<std::string>& items) {
  CatalogParams out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

Input load_input(const Options& o) {
  if (!o.catalog.empty() && !o.file.empty()) throw ParseError("give either an input file or --catalog, not both");
  if (!o.catalog.empty()) {
    const auto id = parse_catalog_id(o.catalog);
    if (!id) throw ParseError("unknown catalog id '" + o.catalog + "'");
    const auto inst = build(*id, parse_params(o.params));
    Json doc = document_json(inst.payload.base(), std::optional(inst.payload.drift()));
    std::string source = "catalog " + o.catalog;
    for (const auto& [k, v] : inst.params) source += " " + k + "=" + format_rational(v);
    return {doc, document_from_json(doc), source};
  }
  if (o.file.empty()) throw ParseError("no input: give a document file or --catalog ID");
  if (!o.params.empty()) throw ParseError("--param only applies to --catalog");
  std::ifstream in(o.file);
  if (!in) throw ParseError("cannot read '" + o.file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(o.file + ": malformed json: " + e.what());
  }
  return {doc, document_from_json(doc), o.file};
}

template <Scalar S>
MetricLieAlgebra<S> metric_of(const Input& in, double tol) {
  if (!in.parsed.metric) throw ParseError("document has no metric");
  return MetricLieAlgebra<S>(in.parsed.algebra.convert<S>(), in.parsed.metric->convert<S>(), tol);
}

template <Scalar S>
RandersStructure<S> randers_of(const Input& in, double tol) {
  auto m = metric_of<S>(in, tol);
  const auto drift = in.parsed.drift ? in.parsed.drift->convert<S>() : AlgVector<S>(m.dim());
  return RandersStructure<S>(std::move(m), drift);
}

// A basis name ("W") or a comma-separated coefficient list ("1,-1/2,0").
AlgVector<Rational> parse_vector(const LieAlgebra<Rational>& a, const std::string& text, const std::string& what) {
  if (text.empty()) throw ParseError(what + " is required");
  if (const auto idx = a.index_of(text)) return a.basis_vector(*idx);
  std::vector<Rational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
  if (coeffs.size() != a.dim())
    throw ParseError(what + ": '" + text + "' is neither a basis name nor " + std::to_string(a.dim()) +
                     " coefficients");
  return AlgVector<Rational>(std::move(coeffs));
}

LiftTag parse_tag(const std::string& text) {
  if (text == "c" || text == "complete") return LiftTag::complete;
  if (text == "v" || text == "vertical") return LiftTag::vertical;
  throw ParseError("--mode must be c or v, got '" + text + "'");
}

std::string pair_key(const LieAlgebra<Rational>& a, std::size_t i, std::size_t j) {
  return a.basis_names()[i] + "," + a.basis_names()[j];
}

std::string format_json_scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string format_vec(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_json_scalar(v[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Commands over either scalar type

template <Scalar S>
Report cmd_validate(const Input& in, const Options& o) {
  Report r;
  const auto a = in.parsed.algebra.convert<S>();
  const auto jac = check_jacobi(a, o.tol);
  Json residuals = Json::array();
  for (const auto& res : jac.residuals) {
    const auto& n = a.basis_names();
    residuals.push_back({{"triple", {n[res.indices[0]], n[res.indices[1]], n[res.indices[2]]}},
                         {"value", vector_json(res.value)}});
  }
  r.results["jacobi"] = jac.ok();
  r.residuals["jacobi"] = residuals;
  r.text.push_back("Jacobi identity: " + std::string(jac.ok() ? "OK" : "FAILED"));
  for (const auto& res : residuals) r.text.push_back("  residual on " + res["triple"].dump() + ": " + format_vec(res["value"]));

  bool metric_ok = false;
  std::optional<MetricLieAlgebra<S>> m;
  if (!in.parsed.metric) {
    r.results["metric"] = "absent";
    r.text.push_back("metric: absent");
  } else {
    try {
      m.emplace(metric_of<S>(in, o.tol));
      metric_ok = true;
      r.results["metric"] = "spd";
      r.text.push_back("metric SPD: OK");
    } catch (const DomainError& e) {
      r.results["metric"] = e.what();
      r.text.push_back(std::string("metric SPD: FAILED (") + e.what() + ")");
    }
  }

  bool drift_ok = true;
  if (m) {
    const auto drift = in.parsed.drift ? in.parsed.drift->convert<S>() : AlgVector<S>(m->dim());
    const S n2 = norm_squared(*m, drift);
    drift_ok = check_valid(RandersStructure<S>(*m, drift));
    r.results["drift_norm_squared"] = scalar_json(n2);
    r.results["drift_valid"] = drift_ok;
    r.text.push_back("drift norm^2 = " + format_scalar(n2) + ": " + (drift_ok ? "OK" : "FAILED (must be < 1)"));
  }
  r.pass = jac.ok() && metric_ok && drift_ok;
  return r;
}

template <Scalar S>
Report cmd_connection(const Input& in, const Options& o) {
  Report r;
  const auto m = metric_of<S>(in, o.tol);
  const auto& a = m.algebra();
  Json table = Json::object();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto v = vector_json(levi_civita(m, a.basis_vector(i), a.basis_vector(j)));
      table[pair_key(in.parsed.algebra, i, j)] = v;
      r.text.push_back("nabla_" + a.basis_names()[i] + " " + a.basis_names()[j] + " = " + format_vec(v));
    }
  r.results["connection"] = std::move(table);
  return r;
}

template <Scalar S>
Report cmd_curvature(const Input& in, const Options& o) {
  Report r;
  const auto m = metric_of<S>(in, o.tol);
  const auto& a = m.algebra();
  Json table = Json::object();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const S k = sectional_curvature(m, a.basis_vector(i), a.basis_vector(j), o.tol);
      table[pair_key(in.parsed.algebra, i, j)] = scalar_json(k);
      r.text.push_back("K(" + a.basis_names()[i] + ", " + a.basis_names()[j] + ") = " + format_scalar(k));
    }
  r.results["sectional"] = std::move(table);
  return r;
}

template <Scalar S>
Report cmd_berwald(const Input& in, const Options& o) {
  Report r;
  const auto f = randers_of<S>(in, o.tol);
  const auto s = berwald_status(f, o.tol);
  Json z = Json::array();
  for (const auto& v : center(f.base().algebra(), o.tol)) z.push_back(vector_json(v));
  r.results = {{"F_berwald", s.f_berwald},
               {"Fc_berwald", s.fc_berwald},
               {"Fv_berwald", s.fv_berwald},
               {"Fc_lifted_check", s.fc_oracle},
               {"Fv_lifted_check", s.fv_oracle},
               {"drift_central", s.drift_central},
               {"center", z},
               {"center_crosscheck", s.center_crosscheck ? Json(*s.center_crosscheck) : Json(nullptr)},
               {"reasons", s.reasons}};
  r.pass = s.consistent();
  r.text.push_back("F   Berwald: " + yes_no(s.f_berwald));
  r.text.push_back("F^c Berwald: " + yes_no(s.fc_berwald) + " (lifted check: " + yes_no(s.fc_oracle) + ")");
  r.text.push_back("F^v Berwald: " + yes_no(s.fv_berwald) + " (lifted check: " + yes_no(s.fv_oracle) + ")");
  r.text.push_back("drift central: " + yes_no(s.drift_central));
  std::string zs = "center basis:";
  for (const auto& v : z) zs += " " + format_vec(v);
  r.text.push_back(z.empty() ? "center: trivial" : zs);
  for (const auto& reason : s.reasons) r.text.push_back("  " + reason);
  return r;
}

template <Scalar S>
Report cmd_douglas(const Input& in, const Options& o) {
  Report r;
  const auto f = randers_of<S>(in, o.tol);
  const bool d = is_douglas(f, o.tol);
  Json pairs = Json::object();
  const auto& a = f.base().algebra();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j) {
      const S v = inner(f.base(), f.drift(), a.basis_bracket(i, j));
      if (!is_zero(v, o.tol)) pairs[pair_key(in.parsed.algebra, i, j)] = scalar_json(v);
    }
  r.results["douglas"] = d;
  r.residuals["g(X,[e_i,e_j])"] = pairs;
  r.text.push_back("Douglas: " + yes_no(d));
  for (const auto& [k, v] : pairs.items()) r.text.push_back("  g(X, [" + k + "]) = " + format_json_scalar(v));
  return r;
}

template <Scalar S>
Report cmd_prop31(const Input& in, const Options& o) {
  Report r;
  const auto m = metric_of<S>(in, o.tol);
  const auto l = lift_algebra(m, o.tol);
  const auto rep = verify_prop31(l, o.tol);
  Json mism = Json::array();
  const auto& n = m.algebra().basis_names();
  for (const auto& x : rep.mismatches)
    mism.push_back({{"pair", n[x.i] + std::string(suffix(x.ti)) + "," + n[x.j] + std::string(suffix(x.tj))},
                    {"residual", scalar_json(x.residual)}});
  r.results["pairs_checked"] = rep.pairs_checked;
  r.residuals["max_residual"] = scalar_json(rep.max_residual);
  r.residuals["mismatches"] = mism;
  r.pass = rep.ok();
  r.text.push_back("tagged basis pairs checked: " + std::to_string(rep.pairs_checked));
  r.text.push_back("max residual: " + format_scalar(rep.max_residual));
  for (const auto& x : mism) r.text.push_back("  mismatch " + x["pair"].get<std::string>());
  return r;
}

template <Scalar S>
Report cmd_lift(const Input& in, const Options& o) {
  Report r;
  const auto f = randers_of<S>(in, o.tol);
  const auto tag = parse_tag(o.mode.empty() ? "c" : o.mode);
  const auto l = lift_algebra(f.base(), o.tol);
  const auto lf = lift_randers(l, f, tag);
  r.results["mode"] = to_string(tag);
  r.results["document"] = document_json(l.doubled(), std::optional(lf.drift()));
  r.bare = true;
  r.text.push_back(r.results["document"].dump(2));
  return r;
}

// ---------------------------------------------------------------------------
// Exact-only and float-only commands

Report cmd_geodesics(const Input& in, const Options& o) {
  Report r;
  const auto m = metric_of<Rational>(in, o.tol);
  const auto sol = geodesic_vectors(m);
  const auto& names = m.algebra().basis_names();
  Json forms = Json::object();
  for (std::size_t i = 0; i < sol.system.forms.size(); ++i) forms[names[i]] = matrix_json(sol.system.forms[i]);
  Json fams = Json::array();
  for (const auto& fam : sol.families) {
    Json b = Json::array();
    for (const auto& v : fam.basis) b.push_back(vector_json(v));
    fams.push_back({{"dimension", fam.dimension()}, {"basis", b}});
  }
  r.results = {{"system", forms}, {"families", fams}, {"complete", sol.complete}, {"notes", sol.notes}};
  r.text.push_back("geodesic vectors: u with g([u, e_i], u) = 0 for every e_i");
  for (const auto& fam : fams) {
    std::string line = "  family of dimension " + fam["dimension"].dump() + ": span";
    for (const auto& v : fam["basis"]) line += " " + format_vec(v);
    r.text.push_back(line);
  }
  r.text.push_back(std::string("decomposition complete: ") + yes_no(sol.complete));
  for (const auto& note : sol.notes) r.text.push_back("  note: " + note);

  if (!o.vector.empty()) {
    const auto u = parse_vector(m.algebra(), o.vector, "--vector");
    const bool g = is_geodesic_vector(m, u);
    r.results["vector"] = vector_json(u);
    r.results["is_geodesic"] = g;
    r.text.push_back("vector " + format_vec(vector_json(u)) + " geodesic: " + yes_no(g));
    const auto f = in.parsed.randers();
    if (check_valid(f)) {
      const bool fg = is_finsler_geodesic_vector(f.convert<double>(), u.convert<double>());
      r.results["is_finsler_geodesic"] = fg;
      r.text.push_back("vector geodesic for F: " + yes_no(fg));
    }
  }
  return r;
}

Report cmd_flag(const Input& in, const Options& o) {
  Report r;
  const auto f = randers_of<double>(in, o.tol);
  const auto tag = parse_tag(o.mode);
  const auto c = plane_case_from_int(o.plane_case);
  const auto y = parse_vector(in.parsed.algebra, o.pole, "--pole").convert<double>();
  const auto u = parse_vector(in.parsed.algebra, o.transverse, "--transverse").convert<double>();
  const auto form = o.corrected ? TheoremForm::corrected : TheoremForm::as_printed;
  const double k = flag_curvature_theorem(f, tag, c, y, u, form, o.tol);
  const auto l = lift_algebra(f.base(), o.tol);
  const double direct = flag_curvature_definitional(
      lift_randers(l, f, tag), {lift_vector(l, y, pole_tag(c)), lift_vector(l, u, transverse_tag(c))}, o.tol);
  r.results = {{"mode", to_string(tag)},       {"case", o.plane_case}, {"form", to_string(form)},
               {"pole", vector_json(y)},       {"transverse", vector_json(u)},
               {"flag_curvature", k},          {"definitional", direct}};
  r.residuals["deviation"] = std::abs(k - direct);
  r.bare = true;
  r.text.push_back(format_double(k));
  return r;
}

Json deviation_json(const TheoremModeReport& m) {
  Json cases = Json::array();
  for (const auto& c : m.cases)
    cases.push_back({{"case", static_cast<int>(c.plane)},
                     {"samples", c.samples},
                     {"max_deviation", c.max_deviation},
                     {"max_deviation_corrected", c.max_deviation_corrected}});
  return {{"mode", to_string(m.mode)}, {"hypothesis_holds", m.hypothesis_holds}, {"cases", cases}};
}

constexpr double kTheoremTolerance = 1e-9;

Report cmd_theorems(const Input& in, const Options& o) {
  Report r;
  r.randomized = true;
  const auto f = randers_of<double>(in, o.tol);
  std::optional<LiftTag> only;
  if (!o.mode.empty()) only = parse_tag(o.mode);
  const std::size_t samples = o.samples ? o.samples : 50;
  const auto rep = verify_theorems_35_36(f, samples, o.seed, only, o.tol);
  Json modes = Json::array();
  for (const auto& m : rep.modes) {
    modes.push_back(deviation_json(m));
    if (!m.hypothesis_holds) {
      r.text.push_back(std::string("mode ") + std::string(to_string(m.mode)) + ": hypothesis fails, skipped");
      continue;
    }
    for (const auto& c : m.cases) {
      std::ostringstream line;
      line << "mode " << to_string(m.mode) << " case " << static_cast<int>(c.plane) << ": max deviation "
           << format_double(c.max_deviation) << " (corrected form " << format_double(c.max_deviation_corrected)
           << ")";
      r.text.push_back(line.str());
    }
  }
  r.results = {{"samples_per_case", samples}, {"modes", modes}, {"modes_checked", rep.modes_checked()}};
  r.residuals = {{"max_deviation", rep.max_deviation(TheoremForm::as_printed)},
                 {"max_deviation_corrected", rep.max_deviation(TheoremForm::corrected)},
                 {"tolerance", kTheoremTolerance}};
  r.pass = rep.modes_checked() > 0 && rep.max_deviation(TheoremForm::as_printed) <= kTheoremTolerance;
  return r;
}

Json scan_json(const SignScan& s) {
  return {{"min", s.min},
          {"max", s.max},
          {"evaluations", s.evaluations},
          {"has_negative", s.has_negative},
          {"has_zero", s.has_zero},
          {"has_positive", s.has_positive}};
}

std::string scan_line(const SignScan& s) {
  return "min " + format_double(s.min) + ", max " + format_double(s.max) + ", negative " + yes_no(s.has_negative) +
         ", zero " + yes_no(s.has_zero) + ", positive " + yes_no(s.has_positive) + " (" +
         std::to_string(s.evaluations) + " evaluations)";
}

Report cmd_scan(const Input& in, const Options& o) {
  Report r;
  r.randomized = true;
  const auto f = randers_of<double>(in, o.tol);
  const auto tag = parse_tag(o.mode.empty() ? "c" : o.mode);
  const auto form = o.corrected ? TheoremForm::corrected : TheoremForm::as_printed;
  const auto s = curvature_sign_scan(f, tag, o.samples ? o.samples : 200, o.seed, form);
  r.results = scan_json(s);
  r.results["mode"] = to_string(tag);
  r.results["form"] = to_string(form);
  r.text.push_back(std::string("mode ") + std::string(to_string(tag)) + ": " + scan_line(s));
  return r;
}

// ---------------------------------------------------------------------------
// Catalog verification commands

Json params_json(const CatalogParams& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = format_rational(v);
  return j;
}

std::string params_text(const CatalogParams& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + format_rational(v);
  return s;
}

Report cmd_table1(const Options&) {
  Report r;
  const auto rep = verify_table1();
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"id", to_string(row.id)},
                    {"params", params_json(row.params)},
                    {"F_berwald", row.status.f_berwald},
                    {"Fc_berwald", row.status.fc_berwald},
                    {"Fv_berwald", row.status.fv_berwald},
                    {"Fv_expected", row.expected_fv},
                    {"lifted_checks_agree", row.status.oracle_agrees()},
                    {"pass", row.pass}});
    r.text.push_back(std::string(to_string(row.id)) + " " + params_text(row.params) + ": F " +
                     yes_no(row.status.f_berwald) + ", F^c " + yes_no(row.status.fc_berwald) + ", F^v " +
                     yes_no(row.status.fv_berwald) + " (expected " + yes_no(row.expected_fv) + ") " +
                     (row.pass ? "ok" : "MISMATCH"));
  }
  r.results["rows"] = rows;
  r.pass = rep.pass();
  return r;
}

Report cmd_example44(const Options& o) {
  Report r;
  r.randomized = true;
  const auto rep = verify_example44(o.seed, o.off_family);
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    Json fams = Json::array();
    const std::string head = std::string(to_string(c.id)) + " nu=" + format_rational(c.nu);
    for (const auto& fc : c.families) {
      fams.push_back({{"family", fc.label}, {"points", fc.points}, {"geodesic", fc.geodesic}, {"pass", fc.pass()}});
      r.text.push_back(head + ": family " + fc.label + ": " + std::to_string(fc.geodesic) + "/" +
                       std::to_string(fc.points) + " geodesic");
    }
    Json solved = Json::array();
    for (const auto& fam : c.solved.families) {
      Json b = Json::array();
      for (const auto& v : fam.basis) b.push_back(vector_json(v));
      solved.push_back(b);
    }
    cases.push_back({{"id", to_string(c.id)},
                     {"nu", format_rational(c.nu)},
                     {"families", fams},
                     {"off_family_samples", c.off_family_samples},
                     {"off_family_rejected", c.off_family_rejected},
                     {"solver_families", solved},
                     {"pass", c.pass()}});
    r.text.push_back(head + ": off-family vectors rejected " + std::to_string(c.off_family_rejected) + "/" +
                     std::to_string(c.off_family_samples));
    std::string sline = head + ": exact solution set:";
    for (const auto& b : solved) {
      sline += " span";
      for (const auto& v : b) sline += " " + format_vec(v);
      sline += ";";
    }
    r.text.push_back(sline);
  }
  r.results["cases"] = cases;
  r.pass = rep.pass();
  return r;
}

Report cmd_remark38(const Options& o) {
  Report r;
  r.randomized = true;
  const auto rep = verify_remark38(o.seed, o.samples ? o.samples : 200);
  r.results = {{"F_berwald", rep.status.f_berwald},
               {"Fc_berwald", rep.status.fc_berwald},
               {"Fv_berwald", rep.status.fv_berwald},
               {"complete", scan_json(rep.complete)},
               {"vertical", scan_json(rep.vertical)}};
  r.pass = rep.pass();
  r.text.push_back("nilpotent5 eps=1/2: F " + yes_no(rep.status.f_berwald) + ", F^c " +
                   yes_no(rep.status.fc_berwald) + ", F^v " + yes_no(rep.status.fv_berwald) + " Berwald");
  r.text.push_back("F^c: " + scan_line(rep.complete));
  r.text.push_back("F^v: " + scan_line(rep.vertical));
  return r;
}

Report cmd_catalog(const Options& o) {
  Report r;
  r.bare = true;
  if (o.catalog.empty()) {
    Json ids = Json::object();
    for (auto id : kCatalogIds) {
      ids[std::string(to_string(id))] = parameter_names(id);
      std::string line = std::string(to_string(id)) + ":";
      for (const auto& p : parameter_names(id)) line += " " + p;
      r.text.push_back(line);
    }
    r.results["ids"] = ids;
    return r;
  }
  const auto in = load_input(o);
  r.results["source"] = in.source;
  r.results["document"] = in.doc;
  r.digest = fnv1a_hex(in.doc.dump());
  r.text.push_back(in.doc.dump(2));
  return r;
}

// ---------------------------------------------------------------------------

void emit(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    Json doc;
    doc["command"] = r.command;
    doc["config"] = {{"arith", o.arith}, {"tol", o.tol}, {"format", o.format}, {"seed", o.seed}};
    doc["inputs_digest"] = r.digest ? Json(*r.digest) : Json(nullptr);
    doc["results"] = r.results;
    doc["residuals"] = r.residuals;
    doc["pass"] = r.pass;
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& line : r.text) out << line << '\n';
  if (r.bare) return;
  if (r.randomized) out << "seed: " << o.seed << '\n';
  out << (r.pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Left-invariant Riemannian and Randers geometry of Lie algebras and their tangent lifts",
               "tangentlie"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--arith", o.arith, "Arithmetic: exact rationals or floats")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--tol", o.tol, "Zero tolerance in float mode")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for sampling commands")->capture_default_str();

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Algebra document (json)");
    sub->add_option("--catalog", o.catalog, "Built-in instance: case1, case2, case3, nilpotent5");
    sub->add_option("--param", o.params, "Catalog parameter name=value (repeatable)");
    return sub;
  };

  struct Entry {
    std::string name;
    std::string help;
    std::function<Report()> exec;
  };
  std::vector<Entry> entries;
  auto dual = [&](std::string name, std::string help, auto exact_fn, auto float_fn) {
    entries.push_back({name, help, [&, exact_fn, float_fn]() {
                         const auto in = load_input(o);
                         Report r = o.arith == "exact" ? exact_fn(in, o) : float_fn(in, o);
                         r.digest = fnv1a_hex(in.doc.dump());
                         return r;
                       }});
  };
  auto single = [&](std::string name, std::string help, Report (*fn)(const Input&, const Options&)) {
    entries.push_back({name, help, [&, fn]() {
                         const auto in = load_input(o);
                         Report r = fn(in, o);
                         r.digest = fnv1a_hex(in.doc.dump());
                         return r;
                       }});
  };

  dual("validate", "Check Jacobi identity, metric positivity and drift norm", cmd_validate<Rational>,
       cmd_validate<double>);
  dual("connection", "Levi-Civita connection on basis pairs", cmd_connection<Rational>, cmd_connection<double>);
  dual("curvature", "Sectional curvature of basis planes", cmd_curvature<Rational>, cmd_curvature<double>);
  dual("berwald", "Berwald status of F, F^c and F^v", cmd_berwald<Rational>, cmd_berwald<double>);
  dual("douglas", "Douglas status of F", cmd_douglas<Rational>, cmd_douglas<double>);
  single("geodesics", "Geodesic vectors (exact)", cmd_geodesics);
  dual("lift", "Doubled algebra document with lifted metric and drift", cmd_lift<Rational>, cmd_lift<double>);
  dual("prop31", "Lifted connection formulas vs Koszul formula on the doubled algebra", cmd_prop31<Rational>,
       cmd_prop31<double>);
  single("flag", "Closed-form flag curvature of F^c or F^v on a lifted plane", cmd_flag);
  single("theorems", "Closed-form flag curvatures vs definitional flag curvature", cmd_theorems);
  single("scan", "Signs of the lifted flag curvature", cmd_scan);
  entries.push_back({"table1", "Berwald status over the parameter grid of the three 3-dimensional cases",
                     [&]() { return cmd_table1(o); }});
  entries.push_back({"example44", "Geodesic vector families of case2 and case3", [&]() { return cmd_example44(o); }});
  entries.push_back({"remark38", "Berwald lifts and curvature signs on nilpotent5", [&]() { return cmd_remark38(o); }});
  entries.push_back({"catalog", "List built-in instances or print one as a document", [&]() { return cmd_catalog(o); }});

  std::string selected;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    sub->callback([&selected, name = e.name]() { selected = name; });
    if (e.name == "table1" || e.name == "example44" || e.name == "remark38") {
      if (e.name == "example44") sub->add_option("--off-family", o.off_family, "Off-family samples per case");
      if (e.name == "remark38") sub->add_option("--samples", o.samples, "Random pairs per scan (default 200)");
      continue;
    }
    if (e.name == "catalog") {
      sub->add_option("id", o.catalog, "Catalog id");
      sub->add_option("--param", o.params, "Parameter name=value (repeatable)");
      continue;
    }
    with_input(sub);
    if (e.name == "lift" || e.name == "scan" || e.name == "theorems")
      sub->add_option("--mode", o.mode, "Lift: c (complete) or v (vertical)");
    if (e.name == "flag") {
      sub->add_option("--mode", o.mode, "Lift: c (complete) or v (vertical)")->required();
      sub->add_option("--case", o.plane_case, "Plane case 1..4")->required();
      sub->add_option("--pole", o.pole, "Y: basis name or coefficients")->required();
      sub->add_option("--transverse", o.transverse, "U: basis name or coefficients")->required();
    }
    if (e.name == "flag" || e.name == "scan")
      sub->add_flag("--corrected", o.corrected, "Use the corrected sign of the last mixed-plane term");
    if (e.name == "theorems") sub->add_option("--samples", o.samples, "Samples per plane case (default 50)");
    if (e.name == "scan") sub->add_option("--samples", o.samples, "Random pairs (default 200)");
    if (e.name == "geodesics") sub->add_option("--vector", o.vector, "Also test this vector");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (const auto& e : entries) {
      if (e.name != selected) continue;
      Report r = e.exec();
      r.command = selected;
      emit(r, o, out);
      return r.pass ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace tangentlie::cli

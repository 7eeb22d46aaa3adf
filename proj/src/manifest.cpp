#include <fstream>
#include <set>
#include <sstream>

#include "descartes/claims.hpp"
#include "descartes/error.hpp"

namespace descartes {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::ManifestParse, where + ": " + msg);
}

Rational rational_field(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const Error&) {
  }
  bad(where, "expected a rational, got " + v.dump());
}

std::optional<Rational> bound_field(const json& v, const std::string& where) {
  if (v.is_null() || (v.is_string() && (v == "inf" || v == "+inf"))) return std::nullopt;
  return rational_field(v, where);
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(where, "expected a string, got " + e.dump());
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> definitions(const json& v, const std::string& where) {
  std::vector<std::pair<std::string, std::string>> out;
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!it.value().is_string()) bad(where, "definition '" + it.key() + "' must be a string");
      out.emplace_back(it.key(), it.value().get<std::string>());
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        bad(where, "definitions must be [name, expression] pairs");
      out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } else {
    bad(where, "definitions must be an object or an array");
  }
  for (const auto& [name, text] : out) {
    try {
      parse_expression(text);
    } catch (const Error& e) {
      bad(where, "definition '" + name + "': " + e.what());
    }
  }
  return out;
}

const std::set<std::string> kKnownKeys = {
    "id", "kind", "citation", "note", "variables", "definitions", "expressions", "strategy", "coeff_tolerance",
    "expected_roots", "expected_count", "tolerance", "range", "boxes", "strict", "matrix", "parameters", "solve",
    "positive", "nonzero", "expected_rank", "trials", "equations", "steps", "pattern", "pos", "neg", "control",
    "budget", "m", "n", "q", "expected_values", "samples", "seed"};

}  // namespace

Claim parse_claim(const json& j) {
  if (!j.is_object()) bad("claim", "must be an object");
  if (!j.contains("id") || !j["id"].is_string()) bad("claim", "missing string field 'id'");
  Claim c;
  c.id = j["id"].get<std::string>();
  const std::string where = "claim '" + c.id + "'";
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kKnownKeys.count(it.key())) bad(where, "unknown field '" + it.key() + "'");
  if (!j.contains("kind") || !j["kind"].is_string()) bad(where, "missing string field 'kind'");
  c.kind = parse_claim_kind(j["kind"].get<std::string>());
  try {
    c.citation = j.value("citation", "");
    c.note = j.value("note", "");
    c.strategy = j.value("strategy", "auto");
    c.strict = j.value("strict", true);
    c.trials = j.value("trials", 20);
    c.seed = j.value("seed", std::uint64_t{1});
    c.budget = j.value("budget", std::uint64_t{1000000});
    c.samples = j.value("samples", 10000);
    c.pattern = j.value("pattern", "");
    c.pos = j.value("pos", 0);
    c.neg = j.value("neg", 0);
    c.m = j.value("m", 1);
    c.n = j.value("n", 1);
    if (j.contains("q")) c.q = j["q"].get<std::vector<int>>();
    if (j.contains("expected_count")) c.expected_count = j["expected_count"].get<int>();
    if (j.contains("expected_rank")) c.expected_rank = j["expected_rank"].get<int>();
  } catch (const json::exception& e) {
    bad(where, e.what());
  }
  if (c.strategy != "auto" && c.strategy != "expand" && c.strategy != "grid" && c.strategy != "both")
    bad(where, "unknown strategy '" + c.strategy + "'");
  if (j.contains("variables")) c.variables = string_list(j["variables"], where);
  if (j.contains("definitions")) c.definitions = definitions(j["definitions"], where);
  if (j.contains("expressions")) {
    if (!j["expressions"].is_object()) bad(where, "expressions must be an object");
    for (auto it = j["expressions"].begin(); it != j["expressions"].end(); ++it) {
      if (!it.value().is_string()) bad(where, "expression '" + it.key() + "' must be a string");
      c.expressions[it.key()] = it.value().get<std::string>();
    }
  }
  if (j.contains("coeff_tolerance")) c.coeff_tolerance = rational_field(j["coeff_tolerance"], where);
  Rational tol = j.contains("tolerance") ? rational_field(j["tolerance"], where) : Rational(1, 200);
  if (j.contains("expected_roots")) {
    for (const auto& e : j["expected_roots"]) {
      if (e.is_object()) {
        if (!e.contains("value")) bad(where, "expected root without value");
        c.expected_roots.push_back({rational_field(e["value"], where),
                                    e.contains("tolerance") ? rational_field(e["tolerance"], where) : tol});
      } else {
        c.expected_roots.push_back({rational_field(e, where), tol});
      }
    }
  }
  if (j.contains("range")) {
    const auto& r = j["range"];
    if (!r.is_array() || r.size() != 2) bad(where, "range must be [lo, hi]");
    if (!r[0].is_null()) c.range_lo = rational_field(r[0], where);
    c.range_hi = bound_field(r[1], where);
  }
  if (j.contains("boxes")) {
    for (const auto& b : j["boxes"]) {
      if (!b.is_object()) bad(where, "each box must map variables to [lo, hi]");
      std::vector<BoxSpec> box;
      for (auto it = b.begin(); it != b.end(); ++it) {
        const auto& iv = it.value();
        if (!iv.is_array() || iv.size() != 2) bad(where, "box side must be [lo, hi]");
        BoxSpec s{it.key(), rational_field(iv[0], where), bound_field(iv[1], where)};
        if (s.hi && *s.hi < s.lo) bad(where, "box side with lo > hi");
        box.push_back(s);
      }
      c.boxes.push_back(std::move(box));
    }
  }
  if (j.contains("matrix")) {
    for (const auto& row : j["matrix"]) c.matrix.push_back(string_list(row, where));
    for (const auto& row : c.matrix)
      for (const auto& e : row) parse_expression(e);
  }
  if (j.contains("parameters")) {
    for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it) {
      const auto& iv = it.value();
      if (!iv.is_array() || iv.size() != 2) bad(where, "parameter range must be [lo, hi]");
      c.parameters[it.key()] = {rational_field(iv[0], where), rational_field(iv[1], where)};
    }
  }
  if (j.contains("solve")) {
    for (const auto& s : j["solve"]) {
      if (!s.is_object() || !s.contains("var") || !s.contains("equation")) bad(where, "solve steps need var and equation");
      c.solve.push_back({s["var"].get<std::string>(), s["equation"].get<std::string>()});
    }
  }
  if (j.contains("positive")) c.positive = string_list(j["positive"], where);
  if (j.contains("nonzero")) c.nonzero = string_list(j["nonzero"], where);
  if (j.contains("equations")) c.equations = string_list(j["equations"], where);
  if (j.contains("expected_values"))
    for (const auto& v : j["expected_values"]) c.expected_values.push_back(rational_field(v, where));
  if (j.contains("control")) {
    const auto& k = j["control"];
    c.control_pattern = k.value("pattern", "");
    c.control_pos = k.value("pos", 0);
    c.control_neg = k.value("neg", 0);
  }
  if (j.contains("steps"))
    for (const auto& s : j["steps"]) c.steps.push_back(parse_claim(s));

  try {
    for (const auto& [k, t] : c.expressions) parse_expression(t);
    for (const auto& t : c.equations) parse_expression(t);
    for (const auto& t : c.positive) parse_expression(t);
    for (const auto& t : c.nonzero) parse_expression(t);
    for (const auto& s : c.solve) parse_expression(s.equation);
  } catch (const Error& e) {
    bad(where, e.what());
  }
  return c;
}

Manifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad("manifest", e.what());
  }
  if (!j.is_object()) bad("manifest", "top level must be an object");
  Manifest m;
  m.schema = j.value("schema", "");
  if (j.contains("definitions")) m.definitions = definitions(j["definitions"], "manifest");
  if (j.contains("claims")) {
    if (!j["claims"].is_array()) bad("manifest", "claims must be an array");
    std::set<std::string> ids;
    for (const auto& cj : j["claims"]) {
      m.claims.push_back(parse_claim(cj));
      if (!ids.insert(m.claims.back().id).second) bad("manifest", "duplicate claim id '" + m.claims.back().id + "'");
    }
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ManifestParse, "cannot open manifest '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

}  // namespace descartes

#include "torusplit_cli/report.hpp"

#include <array>
#include <iomanip>
#include <regex>
#include <sstream>

#include <openssl/evp.h>

#include "torusplit/error.hpp"
#include "torusplit/polynomial.hpp"

namespace torusplit::cli {

using nlohmann::json;

namespace {

json monomial_strings(const std::vector<IntVector>& exponents, const VariableTable& vars) {
  json out = json::array();
  for (const auto& e : exponents) {
    Monomial m;
    for (const auto& x : e) m.exponents.push_back(x.get_si());
    out.push_back(to_string(m, vars));
  }
  return out;
}

json optional_size(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

// Schema description helpers.
json scalar(const char* type) { return {{"type", type}}; }
json nullable(json s) {
  s["nullable"] = true;
  return s;
}
json array_of(json items) { return {{"type", "array"}, {"items", std::move(items)}}; }
json object_of(json fields) { return {{"type", "object"}, {"fields", std::move(fields)}}; }
json one_of(std::vector<std::string> values) {
  return {{"type", "string"}, {"enum", std::move(values)}};
}

json build_schema() {
  const json integer = scalar("integer");
  const json boolean = scalar("boolean");
  const json string = scalar("string");
  const json vec = array_of(integer);
  const json vecs = array_of(vec);
  const json variety = object_of({
      {"description", nullable(string)},
      {"variables", array_of(object_of({{"name", string}, {"invertible", boolean}}))},
      {"torus_rank", integer},
      {"weights", vecs},
      {"equations", array_of(string)},
      {"assertions", object_of({{"smooth", boolean},
                                {"rational", boolean},
                                {"no_variable_vanishes", boolean},
                                {"complete_intersection", boolean}})},
  });
  return object_of({
      {"tool", string},
      {"version", string},
      {"seed", integer},
      {"trials", integer},
      {"input", object_of({{"name", string}, {"sha256", string}, {"variety", variety}})},
      {"reduction", nullable(object_of({{"weights", vecs}, {"embedding", vecs}}))},
      {"presentation", object_of({{"n_vars", integer},
                                  {"torus_rank", integer},
                                  {"invertible_count", integer},
                                  {"weights", vecs},
                                  {"equations", array_of(string)},
                                  {"equation_weights", vecs}})},
      {"weight_cone", nullable(object_of({{"monoid_generators", vecs},
                                          {"generators", vecs},
                                          {"dim", integer},
                                          {"pointed", boolean},
                                          {"full_space", boolean}}))},
      {"splitting", nullable(object_of({{"lineality_basis", vecs},
                                        {"n1_basis", vecs},
                                        {"n2_basis", vecs},
                                        {"det_n1_n2", integer},
                                        {"t1_weights", vecs},
                                        {"t2_weights", vecs}}))},
      {"invariants", object_of({{"a0_generators", array_of(string)}, {"a0_exponents", vecs}})},
      {"x_h", nullable(object_of({{"ah_generators", array_of(string)},
                                  {"ah_exponents", vecs},
                                  {"t2_weights", vecs}}))},
      {"classification", object_of({{"hypotheses_asserted", boolean},
                                    {"splitting_available", boolean},
                                    {"t1_fix_pointed", boolean},
                                    {"t2_hyperbolic_on_xh", boolean}})},
      {"quotient", object_of({{"ambient_dim", integer},
                              {"estimated_dim", nullable(integer)},
                              {"decided_dim", nullable(integer)},
                              {"decided_by", nullable(one_of({"ambient", "sampled", "complexity"}))},
                              {"unknown_reason", nullable(string)}})},
      {"factorization_verified", boolean},
      {"complexity", nullable(integer)},
      {"smoothness_evidence", object_of({{"supported", boolean},
                                         {"points", integer},
                                         {"full_rank_points", integer}})},
      {"verdict", object_of({{"branch", one_of({"QuotientPoint", "QuotientCurve", "Inapplicable"})},
                             {"statement", string},
                             {"l", nullable(integer)},
                             {"asserted", array_of(string)}})},
  });
}

void validate_into(const json& v, const json& s, const std::string& path,
                   std::vector<std::string>& out) {
  auto at = [&] { return path.empty() ? std::string("<root>") : path; };
  if (v.is_null()) {
    if (!s.value("nullable", false)) out.push_back(at() + ": unexpected null");
    return;
  }
  const std::string type = s.at("type").get<std::string>();
  if (type == "string") {
    if (!v.is_string()) {
      out.push_back(at() + ": expected string");
    } else if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) out.push_back(at() + ": value " + v.dump() + " not allowed");
    }
  } else if (type == "integer") {
    static const std::regex digits("-?[0-9]+");
    bool ok = v.is_number_integer() ||
              (v.is_string() && std::regex_match(v.get_ref<const std::string&>(), digits));
    if (!ok) out.push_back(at() + ": expected integer");
  } else if (type == "boolean") {
    if (!v.is_boolean()) out.push_back(at() + ": expected boolean");
  } else if (type == "array") {
    if (!v.is_array()) {
      out.push_back(at() + ": expected array");
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      validate_into(v[i], s["items"], path + "[" + std::to_string(i) + "]", out);
  } else if (type == "object") {
    if (!v.is_object()) {
      out.push_back(at() + ": expected object");
      return;
    }
    const json& fields = s["fields"];
    const std::string prefix = path.empty() ? "" : path + ".";
    for (const auto& [key, sub] : fields.items()) {
      if (v.contains(key)) {
        validate_into(v[key], sub, prefix + key, out);
      } else if (!sub.value("nullable", false)) {
        out.push_back(prefix + key + ": missing");
      }
    }
    for (const auto& [key, _] : v.items())
      if (!fields.contains(key)) out.push_back(prefix + key + ": unexpected key");
  }
}

std::string vec_text(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return s + ")";
}

std::string vecs_text(const json& vs) {
  if (vs.empty()) return "{0}";
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vec_text(vs[i]);
  return s;
}

std::string rows_text(const json& rows) {
  if (rows.empty()) return "(no rows)";
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "; " : "") + vec_text(rows[i]);
  return s + "]";
}

std::string strings_text(const json& items) {
  if (items.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i].get<std::string>();
  return s;
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string num_or(const json& v, const char* fallback) {
  if (v.is_null()) return fallback;
  return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalInconsistency, "SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

json build_report(const VarietyFile& file, const GradedPresentation& pres,
                  const Analysis& analysis, const SmoothnessEvidence& smoothness,
                  const ReportInputs& inputs) {
  const Evidence& ev = analysis.verdict.evidence;
  json r;
  r["tool"] = "torusplit";
  r["version"] = TORUSPLIT_VERSION_STRING;
  r["seed"] = inputs.seed;
  r["trials"] = inputs.trials;
  r["input"] = {{"name", inputs.input_name},
                {"sha256", inputs.input_sha256},
                {"variety", to_json(file)}};

  r["reduction"] = nullptr;
  if (inputs.reduction_embedding)
    r["reduction"] = {{"weights", matrix_rows_json(pres.weights())},
                      {"embedding", matrix_rows_json(*inputs.reduction_embedding)}};

  json eq_text = json::array();
  std::vector<IntVector> eq_weights;
  for (const auto& p : pres.equations()) {
    eq_text.push_back(to_string(p));
    eq_weights.push_back(weight_of(p, pres));
  }
  r["presentation"] = {{"n_vars", pres.n_vars()},
                       {"torus_rank", pres.torus_rank()},
                       {"invertible_count", pres.invertible_count()},
                       {"weights", matrix_rows_json(pres.weights())},
                       {"equations", eq_text},
                       {"equation_weights", vectors_json(eq_weights)}};

  r["weight_cone"] = nullptr;
  if (analysis.weights) {
    const Cone& c = analysis.weights->cone;
    r["weight_cone"] = {{"monoid_generators", vectors_json(analysis.weights->monoid_generators)},
                        {"generators", vectors_json(c.generators())},
                        {"dim", dim(c)},
                        {"pointed", is_pointed(c)},
                        {"full_space", is_full_space(c)}};
  }

  r["splitting"] = nullptr;
  if (analysis.splitting) {
    const TorusSplitting& s = *analysis.splitting;
    r["splitting"] = {{"lineality_basis", vectors_json(s.lineality.basis)},
                      {"n1_basis", vectors_json(s.n1.basis_vectors())},
                      {"n2_basis", vectors_json(s.n2.basis_vectors())},
                      {"det_n1_n2", integer_json(s.n1.basis().hstack(s.n2.basis()).determinant())},
                      {"t1_weights", matrix_rows_json(s.t1_weights)},
                      {"t2_weights", matrix_rows_json(s.t2_weights)}};
  }

  r["invariants"] = {{"a0_generators", monomial_strings(analysis.invariant_exponents, pres.variables())},
                     {"a0_exponents", vectors_json(analysis.invariant_exponents)}};

  r["x_h"] = nullptr;
  if (analysis.xh) {
    const XHData& x = *analysis.xh;
    r["x_h"] = {{"ah_generators", monomial_strings(x.ah_exponents, pres.variables())},
                {"ah_exponents", vectors_json(x.ah_exponents)},
                {"t2_weights", vectors_json(x.t2_weights_on_generators)}};
  }

  r["classification"] = {{"hypotheses_asserted", ev.hypotheses_asserted},
                         {"splitting_available", ev.splitting_available},
                         {"t1_fix_pointed", ev.fix_pointed},
                         {"t2_hyperbolic_on_xh", ev.hyperbolic}};
  r["quotient"] = {
      {"ambient_dim", ev.quotient.ambient_dim},
      {"estimated_dim", optional_size(ev.quotient.estimated_dim)},
      {"decided_dim", optional_size(ev.decided_dim)},
      {"decided_by", ev.dim_source.empty() ? json(nullptr) : json(ev.dim_source)},
      {"unknown_reason",
       ev.quotient.unknown_reason.empty() ? json(nullptr) : json(ev.quotient.unknown_reason)}};
  r["factorization_verified"] = ev.factorization;
  r["complexity"] = ev.complexity ? json(*ev.complexity) : json(nullptr);
  r["smoothness_evidence"] = {{"supported", smoothness.supported},
                              {"points", smoothness.points},
                              {"full_rank_points", smoothness.full_rank_points}};
  r["verdict"] = {{"branch", std::string(to_string(analysis.verdict.branch))},
                  {"statement", analysis.verdict.statement},
                  {"l", optional_size(analysis.verdict.l_value)},
                  {"asserted", ev.asserted}};
  return r;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::string render_human(const json& r) {
  std::ostringstream o;
  const json& in = r["input"];
  const json& pres = r["presentation"];
  o << r["tool"].get<std::string>() << " " << r["version"].get<std::string>()
    << " (seed " << r["seed"].dump() << ", trials " << r["trials"].dump() << ")\n";
  o << "input:            " << in["name"].get<std::string>() << "\n";
  o << "sha256:           " << in["sha256"].get<std::string>() << "\n";
  o << "variables:        " << pres["n_vars"].dump() << " (" << pres["invertible_count"].dump()
    << " invertible), torus rank " << pres["torus_rank"].dump() << "\n";
  o << "weights:          " << rows_text(pres["weights"]) << "\n";
  if (!r["reduction"].is_null())
    o << "reduced from:     embedding " << rows_text(r["reduction"]["embedding"]) << "\n";
  for (std::size_t i = 0; i < pres["equations"].size(); ++i)
    o << "equation:         " << pres["equations"][i].get<std::string>() << " = 0, weight "
      << vec_text(pres["equation_weights"][i]) << "\n";

  o << "\n";
  if (r["weight_cone"].is_null()) {
    o << "weight cone:      unavailable (no_variable_vanishes not asserted)\n";
  } else {
    const json& c = r["weight_cone"];
    o << "weight cone:      generated by " << vecs_text(c["generators"]) << "; dim "
      << c["dim"].dump() << ", pointed " << yes_no(c["pointed"]) << ", full space "
      << yes_no(c["full_space"]) << "\n";
  }
  if (!r["splitting"].is_null()) {
    const json& s = r["splitting"];
    o << "lineality H:      " << vecs_text(s["lineality_basis"]) << "\n";
    o << "N1 basis:         " << vecs_text(s["n1_basis"]) << "\n";
    o << "N2 basis:         " << vecs_text(s["n2_basis"]) << "\n";
    o << "det[N1|N2]:       " << num_or(s["det_n1_n2"], "?") << "\n";
    o << "T1 weights:       " << rows_text(s["t1_weights"]) << "\n";
    o << "T2 weights:       " << rows_text(s["t2_weights"]) << "\n";
  }
  o << "A_0 generators:   " << strings_text(r["invariants"]["a0_generators"]) << "\n";
  if (!r["x_h"].is_null()) {
    const json& x = r["x_h"];
    o << "A_H generators:   " << strings_text(x["ah_generators"]) << "\n";
    o << "T2 weights on A_H: " << (x["t2_weights"].empty() ? "(none)" : vecs_text(x["t2_weights"]))
      << "\n";
  }

  o << "\n";
  const json& cl = r["classification"];
  o << "hypotheses (smooth, rational) asserted: " << yes_no(cl["hypotheses_asserted"]) << "\n";
  if (cl["splitting_available"].get<bool>()) {
    o << "T1 fix-pointed:   " << yes_no(cl["t1_fix_pointed"]) << "\n";
    o << "T2 hyperbolic on X_H: " << yes_no(cl["t2_hyperbolic_on_xh"]) << "\n";
    o << "X//T = X_H//T2 on invariant monoids: "
      << (r["factorization_verified"].get<bool>() ? "verified" : "not verified") << "\n";
  }
  const json& q = r["quotient"];
  o << "dim X//T:         ambient " << q["ambient_dim"].dump() << ", estimated "
    << num_or(q["estimated_dim"], "unknown") << ", decided " << num_or(q["decided_dim"], "no");
  if (!q["decided_by"].is_null()) o << " (" << q["decided_by"].get<std::string>() << ")";
  o << "\n";
  if (!q["unknown_reason"].is_null())
    o << "  estimate unavailable: " << q["unknown_reason"].get<std::string>() << "\n";
  o << "complexity:       " << num_or(r["complexity"], "not reported") << "\n";
  const json& sm = r["smoothness_evidence"];
  if (sm["supported"].get<bool>())
    o << "smoothness probe: Jacobian of full rank at " << sm["full_rank_points"].dump() << " of "
      << sm["points"].dump() << " sampled points (evidence only)\n";
  else
    o << "smoothness probe: not available\n";

  o << "\n";
  const json& v = r["verdict"];
  o << "verdict:          " << v["branch"].get<std::string>();
  if (!v["l"].is_null()) o << " (l = " << v["l"].dump() << ")";
  o << "\n  " << v["statement"].get<std::string>() << "\n";
  return o.str();
}

const json& report_schema() {
  static const json schema = build_schema();
  return schema;
}

std::vector<std::string> validate_against(const json& value, const json& schema) {
  std::vector<std::string> out;
  validate_into(value, schema, "", out);
  return out;
}

std::vector<std::string> validate_report(const json& report) {
  return validate_against(report, report_schema());
}

} // namespace torusplit::cli

#include "torusplit_cli/variety_file.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "torusplit/error.hpp"
#include "torusplit/polynomial.hpp"

namespace torusplit::cli {

using nlohmann::json;

namespace {

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

/// Line of the `nth` occurrence of the quoted token, 0 if absent.
std::size_t line_of_token(std::string_view text, std::string_view token, std::size_t nth = 0) {
  std::string quoted = "\"" + std::string(token) + "\"";
  std::size_t pos = 0;
  for (std::size_t seen = 0;; ++seen) {
    pos = text.find(quoted, pos);
    if (pos == std::string_view::npos) return 0;
    if (seen == nth) return line_at(text, pos);
    pos += quoted.size();
  }
}

/// Location context for one file.
struct Locator {
  std::string_view text;
  std::string source;

  [[noreturn]] void fail(std::size_t line, const std::string& field, const std::string& msg) const {
    throw LoadError(source, line, field, msg);
  }
  [[noreturn]] void fail_key(std::string_view key, std::size_t nth, const std::string& field,
                             const std::string& msg) const {
    fail(line_of_token(text, key, nth), field, msg);
  }
};

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& prefix, const Locator& loc) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key))
      loc.fail_key(key, 0, prefix + key, "unknown key");
  }
}

bool read_bool(const json& obj, const std::string& key, const std::string& field,
               const Locator& loc) {
  if (!obj.contains(key)) return false;
  if (!obj[key].is_boolean()) loc.fail_key(key, 0, field, "expected true or false");
  return obj[key].get<bool>();
}

std::optional<Integer> as_integer(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = v.get_ref<const std::string&>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  return std::nullopt;
}

} // namespace

bool operator==(const VarietyFile& a, const VarietyFile& b) {
  auto flags = [](const Assertions& x) {
    return std::tuple(x.smooth, x.rational, x.no_variable_vanishes, x.complete_intersection);
  };
  return a.description == b.description && a.variables == b.variables &&
         a.torus_rank == b.torus_rank && a.weights == b.weights &&
         a.equations == b.equations && flags(a.assertions) == flags(b.assertions);
}

LoadError::LoadError(std::string file, std::size_t line, std::string field,
                     const std::string& message)
    : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         (field.empty() ? std::string() : "field '" + field + "': ") + message),
      file_(std::move(file)),
      line_(line),
      field_(std::move(field)) {}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), 0, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw LoadError(path.string(), 0, "", "read error");
  return buf.str();
}

VarietyFile parse_variety_file(std::string_view text, const std::string& source) {
  Locator loc{text, source};
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    loc.fail(line_at(text, at), "", std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) loc.fail(1, "", "top level must be an object");
  reject_unknown_keys(doc, {"description", "variables", "torus_rank", "weights", "equations",
                            "assertions"},
                      "", loc);

  VarietyFile out;
  if (doc.contains("description")) {
    if (!doc["description"].is_string())
      loc.fail_key("description", 0, "description", "expected a string");
    out.description = doc["description"].get<std::string>();
  }

  if (!doc.contains("variables")) loc.fail(1, "variables", "missing required key");
  const json& vars = doc["variables"];
  if (!vars.is_array()) loc.fail_key("variables", 0, "variables", "expected a list");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string field = "variables[" + std::to_string(i) + "]";
    const json& v = vars[i];
    if (!v.is_object())
      loc.fail_key("variables", 0, field, "expected an object {name, invertible}");
    reject_unknown_keys(v, {"name", "invertible"}, field + ".", loc);
    if (!v.contains("name") || !v["name"].is_string())
      loc.fail_key("variables", 0, field + ".name", "expected a string");
    VariableSpec spec{v["name"].get<std::string>(), false};
    if (v.contains("invertible")) {
      if (!v["invertible"].is_boolean())
        loc.fail_key("invertible", i, field + ".invertible", "expected true or false");
      spec.invertible = v["invertible"].get<bool>();
    }
    out.variables.push_back(std::move(spec));
  }

  if (!doc.contains("torus_rank")) loc.fail(1, "torus_rank", "missing required key");
  const json& k = doc["torus_rank"];
  if (!k.is_number_unsigned() && !(k.is_number_integer() && k.get<std::int64_t>() >= 0))
    loc.fail_key("torus_rank", 0, "torus_rank", "expected a nonnegative integer");
  out.torus_rank = k.get<std::size_t>();

  if (!doc.contains("weights")) loc.fail(1, "weights", "missing required key");
  const json& w = doc["weights"];
  if (!w.is_array()) loc.fail_key("weights", 0, "weights", "expected a list of rows");
  std::size_t weights_line = line_of_token(text, "weights");
  for (std::size_t r = 0; r < w.size(); ++r) {
    std::string field = "weights[" + std::to_string(r) + "]";
    if (!w[r].is_array()) loc.fail(weights_line, field, "expected a list of integers");
    IntVector row;
    for (std::size_t c = 0; c < w[r].size(); ++c) {
      auto x = as_integer(w[r][c]);
      if (!x) loc.fail(weights_line, field + "[" + std::to_string(c) + "]", "expected an integer");
      row.push_back(*x);
    }
    out.weights.push_back(std::move(row));
  }

  if (doc.contains("equations")) {
    const json& eqs = doc["equations"];
    if (!eqs.is_array()) loc.fail_key("equations", 0, "equations", "expected a list of strings");
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (!eqs[i].is_string())
        loc.fail_key("equations", 0, "equations[" + std::to_string(i) + "]", "expected a string");
      out.equations.push_back(eqs[i].get<std::string>());
    }
  }

  if (doc.contains("assertions")) {
    const json& a = doc["assertions"];
    if (!a.is_object()) loc.fail_key("assertions", 0, "assertions", "expected an object");
    reject_unknown_keys(a, {"smooth", "rational", "no_variable_vanishes", "complete_intersection"},
                        "assertions.", loc);
    out.assertions.smooth = read_bool(a, "smooth", "assertions.smooth", loc);
    out.assertions.rational = read_bool(a, "rational", "assertions.rational", loc);
    out.assertions.no_variable_vanishes =
        read_bool(a, "no_variable_vanishes", "assertions.no_variable_vanishes", loc);
    out.assertions.complete_intersection =
        read_bool(a, "complete_intersection", "assertions.complete_intersection", loc);
  }
  return out;
}

GradedPresentation to_presentation(const VarietyFile& file, std::string_view text,
                                   const std::string& source, bool allow_nonfaithful) {
  Locator loc{text, source};
  auto equation_line = [&](std::size_t i) {
    std::size_t line = line_of_token(text, file.equations[i]);
    return line ? line : line_of_token(text, "equations");
  };

  VariableTablePtr table;
  std::vector<Variable> vars;
  for (const auto& v : file.variables) vars.push_back({v.name, v.invertible});
  try {
    table = make_variable_table(std::move(vars));
  } catch (const Error& e) {
    loc.fail_key("variables", 0, "variables", e.what());
  }

  std::size_t n = file.variables.size();
  if (file.weights.size() != file.torus_rank)
    loc.fail_key("weights", 0, "weights",
                 "expected " + std::to_string(file.torus_rank) + " rows (torus_rank), got " +
                     std::to_string(file.weights.size()));
  for (std::size_t r = 0; r < file.weights.size(); ++r) {
    if (file.weights[r].size() != n)
      loc.fail_key("weights", 0, "weights[" + std::to_string(r) + "]",
                   "expected " + std::to_string(n) + " entries (one per variable), got " +
                       std::to_string(file.weights[r].size()));
  }
  IntMatrix weights = IntMatrix::from_rows(file.weights, n);

  std::vector<Polynomial> equations;
  for (std::size_t i = 0; i < file.equations.size(); ++i) {
    std::string field = "equations[" + std::to_string(i) + "]";
    try {
      Polynomial p = parse_polynomial(file.equations[i], table);
      if (p.is_zero()) loc.fail(equation_line(i), field, "equation is identically zero");
      weight_of(p, weights);
      equations.push_back(std::move(p));
    } catch (const Error& e) {
      loc.fail(equation_line(i), field, e.what());
    }
  }

  try {
    return GradedPresentation(table, file.torus_rank, weights, std::move(equations),
                              file.assertions, allow_nonfaithful);
  } catch (const Error& e) {
    std::string msg = e.what();
    if (e.code() == ErrorCode::NotFaithful)
      msg += " (rerun with --reduce to pass to the torus acting faithfully)";
    loc.fail_key("weights", 0, "weights", msg);
  }
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json vectors_json(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json matrix_rows_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

json to_json(const VarietyFile& file) {
  json vars = json::array();
  for (const auto& v : file.variables)
    vars.push_back({{"name", v.name}, {"invertible", v.invertible}});
  json out = {
      {"variables", vars},
      {"torus_rank", file.torus_rank},
      {"weights", vectors_json(file.weights)},
      {"equations", file.equations},
      {"assertions",
       {{"smooth", file.assertions.smooth},
        {"rational", file.assertions.rational},
        {"no_variable_vanishes", file.assertions.no_variable_vanishes},
        {"complete_intersection", file.assertions.complete_intersection}}},
  };
  if (!file.description.empty()) out["description"] = file.description;
  return out;
}

} // namespace torusplit::cli

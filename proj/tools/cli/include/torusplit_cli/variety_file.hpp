#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "torusplit/integer.hpp"
#include "torusplit/variety.hpp"

namespace torusplit::cli {

struct VariableSpec {
  std::string name;
  bool invertible = false;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

/// On-disk description of a graded presentation. Optional keys: description,
/// invertible (false), equations (empty), each assertion (false).
struct VarietyFile {
  std::string description;
  std::vector<VariableSpec> variables;
  std::size_t torus_rank = 0;
  std::vector<IntVector> weights;  ///< k rows of length n
  std::vector<std::string> equations;
  Assertions assertions;
};

bool operator==(const VarietyFile& a, const VarietyFile& b);

/// Load or validation failure pointing into the source file. `line` is 1-based,
/// 0 when no location applies (e.g. unreadable file).
class LoadError : public std::runtime_error {
public:
  LoadError(std::string file, std::size_t line, std::string field, const std::string& message);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

private:
  std::string file_;
  std::size_t line_;
  std::string field_;
};

/// Structural parse. Rejects unknown keys and wrong types; polynomial text and
/// homogeneity are checked later by to_presentation.
VarietyFile parse_variety_file(std::string_view text, const std::string& source);

/// Reads `path` fully; LoadError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Builds the presentation, mapping every core error to a LoadError naming the
/// offending field. Non-faithful weights are kept only with `allow_nonfaithful`.
GradedPresentation to_presentation(const VarietyFile& file, std::string_view text,
                                   const std::string& source, bool allow_nonfaithful);

nlohmann::json to_json(const VarietyFile& file);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json integer_json(const Integer& x);
nlohmann::json vector_json(const IntVector& v);
nlohmann::json vectors_json(const std::vector<IntVector>& vs);
nlohmann::json matrix_rows_json(const IntMatrix& m);

} // namespace torusplit::cli

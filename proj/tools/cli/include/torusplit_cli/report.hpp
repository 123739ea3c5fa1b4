#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "torusplit/splitting.hpp"
#include "torusplit/variety.hpp"
#include "torusplit_cli/variety_file.hpp"

namespace torusplit::cli {

struct ReportInputs {
  std::string input_name;  ///< file name without directories
  std::string input_sha256;
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  std::optional<IntMatrix> reduction_embedding;  ///< set when --reduce applied
};

/// Machine-readable report. Keys are emitted in sorted order, so equal inputs
/// give byte-identical dumps.
nlohmann::json build_report(const VarietyFile& file, const GradedPresentation& pres,
                            const Analysis& analysis, const SmoothnessEvidence& smoothness,
                            const ReportInputs& inputs);

/// Serialized form written by `analyze --json` (two-space indent, trailing newline).
std::string dump_report(const nlohmann::json& report);

/// Human-readable rendering; every number it shows is read from `report`.
std::string render_human(const nlohmann::json& report);

/// Structural schema of the machine report, in the small description language
/// understood by validate_against.
const nlohmann::json& report_schema();

/// Paths of violations ("verdict.branch: expected string"); empty when valid.
std::vector<std::string> validate_against(const nlohmann::json& value,
                                          const nlohmann::json& schema);
std::vector<std::string> validate_report(const nlohmann::json& report);

std::string sha256_hex(std::string_view bytes);

} // namespace torusplit::cli

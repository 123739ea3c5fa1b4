#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace torusplit::cli {

// Exit codes, fixed so batch wrappers can triage without parsing text.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      ///< internal error, or oracle found ungenerated solutions
inline constexpr int kExitInvalidInput = 2;  ///< parse or validation error
inline constexpr int kExitUnsupported = 3;  ///< analysis ran but cannot decide; partial report
inline constexpr int kExitSearchSpace = 4;  ///< oracle enumeration over the cap
inline constexpr int kExitUnwritable = 5;   ///< examples target not writable

struct AnalyzeOptions {
  std::filesystem::path file;
  bool json = false;
  std::uint64_t seed = 0;
  bool reduce = false;
  std::size_t trials = 8;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::filesystem::path& file, long bound, std::ostream& out, std::ostream& err);
int cmd_examples(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace torusplit::cli

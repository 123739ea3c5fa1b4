#pragma once

#include <span>
#include <string_view>

namespace torusplit::cli {

struct Fixture {
  std::string_view file_name;
  std::string_view contents;
};

/// The shipped example files, embedded at build time from data/fixtures.
std::span<const Fixture> builtin_fixtures();

} // namespace torusplit::cli

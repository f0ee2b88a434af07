#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/cover.hpp"

namespace sturmian::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::string alpha_spec;
  std::string beta_spec;
  std::size_t n = 10;
  std::string point = "omega";
  std::size_t K = 4;
  std::size_t L = 10;
  std::vector<std::size_t> F{1};
  std::optional<std::size_t> window;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Text;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command, writing the report to out and diagnostics to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses "omega", "shift:j", "pre:WORD" or "t:VALUE[:L|R]".
OrbitPoint parse_point(const SturmianSystem& sys, const std::string& text);

/// Full command-line entry point; argv[0] is the program name.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sturmian::cli

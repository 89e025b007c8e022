#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/arithmetic.hpp"

namespace gbs::cli {

enum class Format { Json, Text, Dot };

struct CliConfig {
  std::string command;                 // classify reduce modular radical check-elliptic fuzz
  std::string input = "-";             // path, "-" for stdin
  std::optional<PrimeSet> rho;
  Format format = Format::Json;
  bool explain = false;
  bool emit_trace = false;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  bool fuzz_json = false;
  bool fault_xi = false;
};

struct CliResult {
  int exit_code = 0;
  std::string output;
};

// Dispatches one command on an already-read input document.
CliResult run(const CliConfig& config, std::string_view input);

// Parses argv; on a usage problem returns the result to print instead.
struct Parsed {
  std::optional<CliConfig> config;
  CliResult early;
};
Parsed parse_args(const std::vector<std::string>& args);

// Whole program: parse, read the input, run.
CliResult main_entry(const std::vector<std::string>& args);

}  // namespace gbs::cli

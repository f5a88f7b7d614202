#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace golomb::cli {

enum class Command { kError, kVerify, kCycles, kDecompose, kBolts, kGen };

struct RunConfig {
  Command command = Command::kError;
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::optional<std::size_t> max_support;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::size_t>> shape;
  std::optional<long long> value_range;
};

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2 };

/// Runs one subcommand. The report is written (to the output path or `out`)
/// only after it is complete; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "3x3x2" -> {3, 3, 2}; throws InputError on malformed text.
std::vector<std::size_t> parse_shape(const std::string& text);

/// Integer table with values uniform in [-range, range], drawn from
/// std::mt19937_64(seed) by rejection sampling (bit-reproducible).
std::string generate_function_json(const std::vector<std::size_t>& shape, std::uint64_t seed, long long range);

}  // namespace golomb::cli

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "golomb/bolts2d.hpp"
#include "golomb/chebyshev.hpp"
#include "golomb/cycle.hpp"
#include "golomb/error.hpp"
#include "golomb/io.hpp"

namespace golomb::cli {

namespace {

using io::json;

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("--input is required for this command");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

EnumerationOptions enumeration_options(const RunConfig& config) {
  EnumerationOptions options;
  options.max_support = config.max_support;
  return options;
}

struct Report {
  std::string body;
  int code = kSuccess;
};

Report run_error(const RunConfig& config) {
  const TabulatedFunction f = io::parse_function(read_file(config.input_path));
  return {io::to_json(best_error(f)).dump(2)};
}

Report run_verify(const RunConfig& config) {
  const TabulatedFunction f = io::parse_function(read_file(config.input_path));
  const GolombReport report = verify_golomb(f, VerifyOptions{config.max_support});
  return {io::to_json(report).dump(2), report.equal ? kSuccess : kNegative};
}

Report run_cycles(const RunConfig& config) {
  ProductGrid grid;
  if (config.shape) {
    grid = ProductGrid(*config.shape);
  } else {
    grid = io::parse_function(read_file(config.input_path)).grid();
  }
  const EnumerationResult result = enumerate_minimal_cycles(grid, enumeration_options(config));
  json cycles = json::array();
  for (const auto& c : result.cycles) cycles.push_back(io::to_json(c));
  json out = {{"shape", grid.factor_sizes()},
              {"count", result.cycles.size()},
              {"complete", result.complete},
              {"candidates_examined", result.candidates_examined},
              {"cycles", std::move(cycles)}};
  return {out.dump(2), result.complete ? kSuccess : kNegative};
}

Report run_decompose(const RunConfig& config) {
  const FiniteSignedMeasure mu = io::measure_from_json(parse_json(read_file(config.input_path)));
  return {io::to_json(decompose(mu)).dump(2)};
}

Report run_bolts(const RunConfig& config) {
  const TabulatedFunction f = io::parse_function(read_file(config.input_path));
  if (f.grid().dimension() != 2) throw InputError("bolts: the function must live on a two-factor grid");
  const EnumerationResult cycles = enumerate_minimal_cycles(f.grid(), enumeration_options(config));
  const BoltReport report = bolt_report(f, cycles.cycles);
  const Rat error = best_error(f).error;

  json bolts = json::array();
  for (const auto& cycle : cycles.cycles) {
    const IntegerCertificate cert = integer_certificate(cycle.lambda());
    for (const auto& b : cycle_to_closed_bolts(to_golomb_form(cycle.points(), cycle.grid(), cert))) {
      bolts.push_back(io::to_json(b, f.grid()));
    }
  }
  json out = io::to_json(report, f.grid());
  out["enumerated"] = cycles.complete;
  out["error"] = io::to_json(error);
  out["equal"] = cycles.complete && error == report.supremum;
  out["bolts"] = std::move(bolts);
  return {out.dump(2), out["equal"].get<bool>() ? kSuccess : kNegative};
}

Report run_gen(const RunConfig& config) {
  if (!config.shape) throw InputError("gen: --shape is required");
  if (!config.seed) throw InputError("gen: --seed is required");
  if (!config.value_range) throw InputError("gen: --range is required");
  return {generate_function_json(*config.shape, *config.seed, *config.value_range)};
}

}  // namespace

std::vector<std::size_t> parse_shape(const std::string& text) {
  std::vector<std::size_t> shape;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find_first_of("xX", pos);
    const std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed shape '" + text + "' (expected e.g. 3x3x2)");
    }
    shape.push_back(std::stoul(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  ProductGrid validated(shape);
  return shape;
}

std::string generate_function_json(const std::vector<std::size_t>& shape, std::uint64_t seed, long long range) {
  if (range < 0) throw InputError("gen: --range must be nonnegative");
  const ProductGrid grid(shape);
  std::mt19937_64 engine(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  RatVector values;
  for (std::size_t k = 0; k < grid.volume(); ++k) {
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    values.emplace_back(static_cast<long>(static_cast<long long>(draw % span) - range));
  }
  return io::to_json(TabulatedFunction(grid, std::move(values))).dump(2);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    switch (config.command) {
      case Command::kError: report = run_error(config); break;
      case Command::kVerify: report = run_verify(config); break;
      case Command::kCycles: report = run_cycles(config); break;
      case Command::kDecompose: report = run_decompose(config); break;
      case Command::kBolts: report = run_bolts(config); break;
      case Command::kGen: report = run_gen(config); break;
    }
  } catch (const InputError& e) {
    err << "golomb: " << e.what() << '\n';
    return kInputError;
  }

  if (config.output_path.empty()) {
    out << report.body << '\n';
  } else {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "golomb: cannot open output file '" << config.output_path << "'\n";
      return kInputError;
    }
    file << report.body << '\n';
  }
  return report.code;
}

}  // namespace golomb::cli

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"
#include "golomb/error.hpp"

int main(int argc, char** argv) {
  using golomb::cli::Command;

  CLI::App app{"Exact best approximation by sums of univariate functions on finite grids"};
  app.require_subcommand(1);

  golomb::cli::RunConfig config;
  std::string shape_text;
  long long seed = 0;
  long long range = 0;
  std::size_t max_support = 0;

  auto add_io = [&](CLI::App* sub, bool input_required) {
    auto* opt = sub->add_option("-i,--input", config.input_path, "function table (JSON or n=2 CSV) or measure JSON");
    if (input_required) opt->required();
    sub->add_option("-o,--output", config.output_path, "write the report here instead of stdout");
  };
  auto add_support = [&](CLI::App* sub) {
    sub->add_option("--max-support", max_support, "largest cycle size to enumerate");
  };

  auto* error = app.add_subcommand("error", "best approximation error, optimal g and dual measure");
  add_io(error, true);
  auto* verify = app.add_subcommand("verify", "compare E(f) with the minimal-cycle supremum");
  add_io(verify, true);
  add_support(verify);
  auto* cycles = app.add_subcommand("cycles", "list the minimal projection cycles of a grid");
  add_io(cycles, false);
  add_support(cycles);
  cycles->add_option("--shape", shape_text, "grid shape, e.g. 3x3x2 (instead of --input)");
  auto* decompose = app.add_subcommand("decompose", "split an orthogonal measure into minimal-cycle measures");
  add_io(decompose, true);
  auto* bolts = app.add_subcommand("bolts", "closed lightning bolts of a two-factor function");
  add_io(bolts, true);
  add_support(bolts);
  auto* gen = app.add_subcommand("gen", "random integer function table");
  gen->add_option("-o,--output", config.output_path, "write the table here instead of stdout");
  gen->add_option("--shape", shape_text, "grid shape, e.g. 3x3x2")->required();
  gen->add_option("--seed", seed, "mt19937_64 seed")->required();
  gen->add_option("--range", range, "values are uniform in [-range, range]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : golomb::cli::kInputError;
  }

  if (*error) config.command = Command::kError;
  if (*verify) config.command = Command::kVerify;
  if (*cycles) config.command = Command::kCycles;
  if (*decompose) config.command = Command::kDecompose;
  if (*bolts) config.command = Command::kBolts;
  if (*gen) config.command = Command::kGen;

  try {
    if (!shape_text.empty()) config.shape = golomb::cli::parse_shape(shape_text);
  } catch (const golomb::InputError& e) {
    std::cerr << "golomb: " << e.what() << '\n';
    return golomb::cli::kInputError;
  }
  if (max_support > 0) config.max_support = max_support;
  if (*gen) {
    config.seed = static_cast<std::uint64_t>(seed);
    config.value_range = range;
  }
  if (*cycles && !config.shape && config.input_path.empty()) {
    std::cerr << "golomb: cycles needs --shape or --input\n";
    return golomb::cli::kInputError;
  }
  return golomb::cli::run(config, std::cout, std::cerr);
}

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace vanish::cli;
  CLI::App app{"Reduced lex Groebner bases of vanishing ideals of finite point sets"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string method = "inductive";
  std::string field = "prime:7919";
  std::string sizes = "64,128,256";
  std::string out, basis, timings;
  std::uint64_t seed = 0;

  auto* gb = app.add_subcommand("gb", "compute the reduced basis of I(A)");
  auto* staircase = app.add_subcommand("staircase", "compute D(A) and its corners");
  auto* check = app.add_subcommand("check", "verify a basis file against a point set");
  auto* compare = app.add_subcommand("compare", "run both methods and compare");
  auto* bench = app.add_subcommand("bench", "time both methods on random instances");

  for (auto* sub : {gb, staircase, check, compare}) {
    sub->add_option("--points", cfg.points, "point set file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "write the result here instead of stdout");
  }
  for (auto* sub : {gb, staircase}) {
    sub->add_option("--method", method, "inductive, bm or both")->capture_default_str()->check(CLI::IsMember({"inductive", "lederer", "bm", "both"}));
  }
  staircase->add_flag("--render", cfg.render, "append an ASCII picture (dimension 2)");
  check->add_option("--basis", basis, "basis file")->required()->check(CLI::ExistingFile);

  bench->add_option("--seed", seed, "PRNG seed")->required();
  bench->add_option("--sizes", sizes, "comma-separated point counts")->capture_default_str();
  bench->add_option("--field", field, "rational or prime:P")->capture_default_str();
  bench->add_option("--dimension", cfg.dimension, "ambient dimension 1..4")->capture_default_str();
  bench->add_option("--runs", cfg.runs, "instances per size")->capture_default_str();
  bench->add_option("--out", out, "write results here instead of stdout");
  bench->add_option("--timings", timings, "write timings here instead of stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*gb) cfg.command = Command::Gb;
    if (*staircase) cfg.command = Command::Staircase;
    if (*check) cfg.command = Command::Check;
    if (*compare) cfg.command = Command::Compare;
    if (*bench) {
      cfg.command = Command::Bench;
      cfg.seed = seed;
      cfg.field = parse_field_option(field);
      cfg.sizes = parse_sizes_option(sizes);
    }
    cfg.method = parse_method_option(method);
    if (!out.empty()) cfg.out = out;
    if (!basis.empty()) cfg.basis = basis;
    if (!timings.empty()) cfg.timings = timings;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return run_command(cfg, std::cout, std::cerr);
}

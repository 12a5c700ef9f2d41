#ifndef VANISH_TOOLS_COMMANDS_HPP
#define VANISH_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vanish/field.hpp"

namespace vanish::cli {

enum class Command { Gb, Staircase, Check, Compare, Bench };
enum class Method { Inductive, Bm, Both };

struct JobConfig {
  Command command = Command::Gb;
  std::filesystem::path points;
  std::filesystem::path basis;
  std::optional<std::filesystem::path> out;
  Method method = Method::Inductive;
  bool render = false;

  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> sizes{64, 128, 256};
  FieldSpec field = FieldSpec::prime(7919);
  std::size_t dimension = 2;
  std::size_t runs = 5;
  std::optional<std::filesystem::path> timings;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// "rational" or "prime:P".
FieldSpec parse_field_option(const std::string& text);
/// "64,128,256".
std::vector<std::size_t> parse_sizes_option(const std::string& text);
Method parse_method_option(const std::string& text);

/// Runs one command. Results go to `out` (or cfg.out), diagnostics and
/// timings to `err`. Returns an ExitCode.
int run_command(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace vanish::cli

#endif  // VANISH_TOOLS_COMMANDS_HPP

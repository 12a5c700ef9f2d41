#ifndef VANISH_BENCH_HPP
#define VANISH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vanish/core.hpp"

namespace vanish {

/// Instance generator. The engine is std::mt19937_64; bounded draws use
/// rejection sampling so sequences do not depend on the standard library.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t draw(std::uint64_t bound);

  /// `count` distinct points of k^n: residues uniform in [0, p) over F_p,
  /// integers uniform in [-9, 9] over Q. Repeated points are redrawn.
  /// Throws std::invalid_argument if the field has fewer than `count` points.
  PointSet points(const FieldSpec& spec, std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
};

struct BenchTrial {
  std::size_t size = 0;
  std::size_t run = 0;
  std::size_t staircase_size = 0;
  std::size_t corners = 0;
  bool methods_agree = false;
  bool verified = false;
  /// FNV-1a of the serialized basis.
  std::uint64_t digest = 0;
  double inductive_seconds = 0;
  double bm_seconds = 0;
};

struct BenchConfig {
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::prime(7919);
  std::size_t dimension = 2;
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t runs = 5;
  /// Also run the four verification checks on each basis.
  bool verify = false;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchTrial> trials;

  bool all_agree() const;
  double median_seconds(std::size_t size, bool inductive) const;
  /// Least-squares slope of log(median time) against log(size).
  double loglog_slope(bool inductive) const;
};

BenchReport run_bench(const BenchConfig& config);

std::uint64_t fnv1a(const std::string& text);

/// The seed-determined part of a report: parameters, instance shapes,
/// cross-check verdicts and digests. No timings.
std::string format_bench_results(const BenchReport& report);
/// Median timings per size and the fitted log-log slopes.
std::string format_bench_timings(const BenchReport& report);

}  // namespace vanish

#endif  // VANISH_BENCH_HPP

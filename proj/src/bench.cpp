#include "vanish/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vanish/bm.hpp"
#include "vanish/io.hpp"
#include "vanish/verify.hpp"

namespace vanish {

std::uint64_t InstanceGenerator::draw(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

PointSet InstanceGenerator::points(const FieldSpec& spec, std::size_t n, std::size_t count) {
  const std::uint64_t per_axis = spec.is_rational() ? 19 : spec.modulus();
  double capacity = 1;
  for (std::size_t i = 0; i < n; ++i) capacity *= static_cast<double>(per_axis);
  if (static_cast<double>(count) > capacity) throw std::invalid_argument("not enough distinct points in the field");

  std::vector<Point> out;
  std::set<std::vector<std::uint64_t>> seen;
  while (out.size() < count) {
    std::vector<std::uint64_t> raw(n);
    for (auto& r : raw) r = draw(per_axis);
    if (!seen.insert(raw).second) continue;
    std::vector<Scalar> coords;
    for (std::uint64_t r : raw) {
      coords.push_back(spec.is_rational() ? Scalar::from_int(static_cast<long>(r) - 9, spec)
                                          : Scalar::from_int(static_cast<long>(r), spec));
    }
    out.emplace_back(std::move(coords));
  }
  return PointSet(n, spec, std::move(out));
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool BenchReport::all_agree() const {
  return std::all_of(trials.begin(), trials.end(), [&](const BenchTrial& t) {
    return t.methods_agree && (!config.verify || t.verified);
  });
}

double BenchReport::median_seconds(std::size_t size, bool inductive) const {
  std::vector<double> times;
  for (const BenchTrial& t : trials) {
    if (t.size == size) times.push_back(inductive ? t.inductive_seconds : t.bm_seconds);
  }
  if (times.empty()) throw std::invalid_argument("no trials for size " + std::to_string(size));
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

double BenchReport::loglog_slope(bool inductive) const {
  std::vector<double> xs, ys;
  for (std::size_t size : config.sizes) {
    xs.push_back(std::log(static_cast<double>(size)));
    ys.push_back(std::log(std::max(median_seconds(size, inductive), 1e-9)));
  }
  if (xs.size() < 2) return std::nan("");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nan("");
  return (n * sxy - sx * sy) / denom;
}

BenchReport run_bench(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  BenchReport report{config, {}};
  InstanceGenerator generator(config.seed);
  for (std::size_t size : config.sizes) {
    for (std::size_t run = 0; run < config.runs; ++run) {
      const PointSet a = generator.points(config.field, config.dimension, size);
      BenchTrial trial;
      trial.size = size;
      trial.run = run;

      auto start = clock::now();
      const GroebnerBasis inductive = inductive_gb(a);
      trial.inductive_seconds = std::chrono::duration<double>(clock::now() - start).count();

      start = clock::now();
      const GroebnerBasis bm = bm_gb(a);
      trial.bm_seconds = std::chrono::duration<double>(clock::now() - start).count();

      trial.methods_agree = inductive == bm;
      trial.staircase_size = inductive.staircase.size();
      trial.corners = inductive.elements.size();
      trial.digest = fnv1a(basis_to_json(inductive).dump());
      if (config.verify) trial.verified = verify_basis(inductive, a).overall();
      report.trials.push_back(trial);
    }
  }
  return report;
}

std::string format_bench_results(const BenchReport& report) {
  const BenchConfig& c = report.config;
  std::ostringstream os;
  os << "bench seed=" << c.seed << " field=" << c.field.to_string() << " dimension=" << c.dimension
     << " runs=" << c.runs << "\n";
  os << "size run staircase corners agree";
  if (c.verify) os << " verified";
  os << " digest\n";
  for (const BenchTrial& t : report.trials) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(t.digest));
    os << t.size << " " << t.run << " " << t.staircase_size << " " << t.corners << " "
       << (t.methods_agree ? "yes" : "NO");
    if (c.verify) os << " " << (t.verified ? "yes" : "NO");
    os << " " << digest << "\n";
  }
  os << (report.all_agree() ? "all cross-checks passed" : "CROSS-CHECK FAILURE") << "\n";
  return os.str();
}

std::string format_bench_timings(const BenchReport& report) {
  std::ostringstream os;
  os << "size inductive_median_ms bm_median_ms\n";
  char line[128];
  for (std::size_t size : report.config.sizes) {
    std::snprintf(line, sizeof line, "%zu %.3f %.3f\n", size, 1e3 * report.median_seconds(size, true),
                  1e3 * report.median_seconds(size, false));
    os << line;
  }
  std::snprintf(line, sizeof line, "loglog_slope inductive=%.3f bm=%.3f\n", report.loglog_slope(true),
                report.loglog_slope(false));
  os << line;
  return os.str();
}

}  // namespace vanish

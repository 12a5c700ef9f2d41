#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vanish/bench.hpp"
#include "vanish/bm.hpp"
#include "vanish/io.hpp"
#include "vanish/verify.hpp"

namespace vanish::cli {

namespace {

void emit(const JobConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out) {
    write_text_file(*cfg.out, text);
  } else {
    out << text;
  }
}

GroebnerBasis compute(const PointSet& a, Method method) {
  return method == Method::Bm ? bm_gb(a) : inductive_gb(a);
}

// Index of the first position where the bases differ, comparing the corner
// lists first and then the elements.
std::string describe_difference(const GroebnerBasis& x, const GroebnerBasis& y) {
  std::ostringstream os;
  const std::size_t common = std::min(x.elements.size(), y.elements.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (x.elements[i] != y.elements[i]) {
      os << "first difference at element " << i << ":\n  inductive: " << x.elements[i].to_string()
         << "\n  bm:        " << y.elements[i].to_string() << "\n";
      return os.str();
    }
  }
  if (x.elements.size() != y.elements.size()) {
    os << "element counts differ: inductive " << x.elements.size() << ", bm " << y.elements.size() << "\n";
  } else {
    os << "staircases differ\n";
  }
  return os.str();
}

int run_gb(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const PointSet a = load_pointset(cfg.points);
  const GroebnerBasis gb = compute(a, cfg.method);
  if (cfg.method == Method::Both) {
    const GroebnerBasis other = bm_gb(a);
    if (!(gb == other)) {
      err << "methods disagree\n" << describe_difference(gb, other);
      return kCheckFailed;
    }
  }
  emit(cfg, out, format_document(basis_to_json(gb)));
  return kOk;
}

int run_staircase(const JobConfig& cfg, std::ostream& out) {
  const PointSet a = load_pointset(cfg.points);
  const Staircase d = cfg.method == Method::Bm ? bm_staircase(a) : compute_staircase(a);
  if (cfg.method == Method::Both && !(d == bm_staircase(a))) {
    throw std::logic_error("staircases disagree");
  }
  nlohmann::json doc;
  doc["staircase"] = staircase_to_json(d);
  doc["corners"] = exponents_to_json(limiting_set(d));
  std::string text = format_document(doc);
  if (cfg.render) {
    if (a.dimension() != 2) throw InputError("--render needs dimension 2");
    text += render_ascii(d);
  }
  emit(cfg, out, text);
  return kOk;
}

int run_check(const JobConfig& cfg, std::ostream& out) {
  const PointSet a = load_pointset(cfg.points);
  const GroebnerBasis gb = load_basis(cfg.basis, a.spec(), a.dimension());
  const VerificationReport report = verify_basis(gb, a);
  nlohmann::json doc;
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    doc["checks"].push_back({{"name", c.name}, {"pass", c.passed}, {"witness", c.witness}});
  }
  doc["overall"] = report.overall();
  emit(cfg, out, format_document(doc));
  return report.overall() ? kOk : kCheckFailed;
}

int run_compare(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const PointSet a = load_pointset(cfg.points);
  auto start = clock::now();
  const GroebnerBasis inductive = inductive_gb(a);
  const double inductive_seconds = std::chrono::duration<double>(clock::now() - start).count();
  start = clock::now();
  const GroebnerBasis bm = bm_gb(a);
  const double bm_seconds = std::chrono::duration<double>(clock::now() - start).count();

  char line[96];
  std::snprintf(line, sizeof line, "inductive_ms %.3f\nbm_ms %.3f\n", 1e3 * inductive_seconds, 1e3 * bm_seconds);
  err << line;
  if (!(inductive == bm)) {
    emit(cfg, out, "different\n" + describe_difference(inductive, bm));
    return kCheckFailed;
  }
  emit(cfg, out, "equal (" + std::to_string(inductive.elements.size()) + " elements, staircase size " +
                     std::to_string(inductive.staircase.size()) + ")\n");
  return kOk;
}

int run_bench_command(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.seed) throw InputError("bench needs --seed");
  if (cfg.dimension < 1 || cfg.dimension > 4) throw InputError("--dimension must be between 1 and 4");
  if (cfg.sizes.empty()) throw InputError("--sizes is empty");
  if (cfg.runs == 0) throw InputError("--runs must be positive");
  BenchConfig bc;
  bc.seed = *cfg.seed;
  bc.field = cfg.field;
  bc.dimension = cfg.dimension;
  bc.sizes = cfg.sizes;
  bc.runs = cfg.runs;
  BenchReport report;
  try {
    report = run_bench(bc);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit(cfg, out, format_bench_results(report));
  const std::string timings = format_bench_timings(report);
  if (cfg.timings) {
    write_text_file(*cfg.timings, timings);
  } else {
    err << timings;
  }
  return report.all_agree() ? kOk : kCheckFailed;
}

}  // namespace

FieldSpec parse_field_option(const std::string& text) {
  if (text == "rational") return FieldSpec::rational();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) throw InputError("bad prime in --field: " + text);
    try {
      return FieldSpec::prime(p);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("--field must be 'rational' or 'prime:P', got '" + text + "'");
}

std::vector<std::size_t> parse_sizes_option(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::size_t value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last || value == 0) {
      throw InputError("bad --sizes entry in '" + text + "'");
    }
    sizes.push_back(value);
    start = comma + 1;
  }
  return sizes;
}

Method parse_method_option(const std::string& text) {
  if (text == "inductive" || text == "lederer") return Method::Inductive;
  if (text == "bm") return Method::Bm;
  if (text == "both") return Method::Both;
  throw InputError("--method must be inductive, bm or both");
}

int run_command(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Gb:
        return run_gb(cfg, out, err);
      case Command::Staircase:
        return run_staircase(cfg, out);
      case Command::Check:
        return run_check(cfg, out);
      case Command::Compare:
        return run_compare(cfg, out, err);
      case Command::Bench:
        return run_bench_command(cfg, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DuplicatePointError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace vanish::cli

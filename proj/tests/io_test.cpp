#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "support.hpp"
#include "vanish/io.hpp"
#include "vanish/verify.hpp"

namespace vanish {
namespace {

using testing::example_a;
using testing::example_a_prime;
using testing::Q;
namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("vanish_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const char* kExampleA =
    R"({"field": {"type": "rational"}, "dimension": 2, "points": [["1","0"],["1","2"],["3","1"],["3","4"]]})";
const char* kExampleAPrime =
    R"({"field": {"type": "rational"}, "dimension": 2,
        "points": [["1","0"],["1","2"],["2","3"],["3","1"],["3","4"]]})";

using PointSetFileTest = TempDir;

TEST_F(PointSetFileTest, LoadsExample) {
  const PointSet a = load_pointset(write("a.json", kExampleA));
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_TRUE(a.spec().is_rational());
  EXPECT_EQ(a[3].to_string(), "(3,4)");
}

TEST_F(PointSetFileTest, RoundTripsThroughJson) {
  const PointSet a = make_points(FieldSpec::prime(101), 3, {{1, -2, 3}, {0, 0, 100}});
  const PointSet b = parse_pointset(pointset_to_json(a));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.spec(), a.spec());
  EXPECT_EQ(b[0], a[0]);
  EXPECT_EQ(b[1], a[1]);
}

TEST_F(PointSetFileTest, ReportsErrors) {
  auto message = [&](const std::string& text) {
    try {
      load_pointset(write("bad.json", text));
    } catch (const InputError& e) {
      return std::string(e.what());
    } catch (const DuplicatePointError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"field":{"type":"prime","p":10},"dimension":1,"points":[["1"]]})").find("p not prime"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"type":"rational"},"dimension":2,"points":[["1","0"],["2","2"],["1","0"]]})")
                .find("indices 0 and 2"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"type":"rational"},"dimension":2,"points":[["1","0"],["2","x"]]})")
                .find("points[1][1]"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"type":"rational"},"dimension":2,"points":[["1"]]})").find("points[0]"),
            std::string::npos);
  EXPECT_NE(message("{\"field\": {\"type\": \"rational\"},\n \"dimension\": 2,\n \"points\": [}").find("line 3"),
            std::string::npos);
  EXPECT_NE(message(R"({"dimension":2,"points":[]})").find("field"), std::string::npos);
  EXPECT_NE(message(R"({"field":{"type":"real"},"dimension":2,"points":[]})").find("field.type"), std::string::npos);
  EXPECT_THROW(load_pointset(dir_ / "missing.json"), InputError);
}

using BasisFileTest = TempDir;

TEST_F(BasisFileTest, SerializedBasisLoadsAndVerifies) {
  for (const PointSet& a : {example_a(), example_a_prime()}) {
    const GroebnerBasis gb = inductive_gb(a);
    const fs::path p = write("gb.json", format_document(basis_to_json(gb)));
    const GroebnerBasis loaded = load_basis(p, a.spec(), a.dimension());
    EXPECT_EQ(loaded, gb);
    EXPECT_TRUE(verify_basis(loaded, a).overall());
  }
}

TEST_F(BasisFileTest, OutputFormat) {
  const nlohmann::json doc = basis_to_json(inductive_gb(example_a()));
  EXPECT_EQ(doc["corners"].dump(), "[[2,0],[0,2]]");
  EXPECT_EQ(doc["staircase"].dump(), "[[0,0],[1,0],[0,1],[1,1]]");
  EXPECT_EQ(doc["basis"][1]["leading"].dump(), "[0,2]");
  EXPECT_EQ(doc["basis"][1]["terms"][1]["coeff"], "-3/2");
  EXPECT_EQ(doc["basis"][1]["terms"][1]["exp"].dump(), "[1,1]");
}

TEST_F(BasisFileTest, StaircaseIsDerivedWhenAbsent) {
  const GroebnerBasis gb = basis_from_json(
      nlohmann::json::parse(R"({"basis":[{"terms":[{"exp":[2],"coeff":"1"},{"exp":[0],"coeff":"-1"}]}]})"), Q(), 1);
  EXPECT_EQ(gb.staircase, Staircase::interval(2));
}

TEST_F(BasisFileTest, RejectsInconsistentInput) {
  EXPECT_THROW(basis_from_json(nlohmann::json::parse(
                                   R"({"basis":[{"leading":[1],"terms":[{"exp":[2],"coeff":"1"}]}]})"),
                               Q(), 1),
               InputError);
  EXPECT_THROW(basis_from_json(nlohmann::json::parse(R"({"basis":[{"terms":[{"exp":[2,0],"coeff":"1"}]}]})"), Q(), 1),
               InputError);
  EXPECT_THROW(basis_from_json(nlohmann::json::parse(R"({"basis":[{"terms":[]}]})"), Q(), 1), InputError);
  EXPECT_THROW(basis_from_json(nlohmann::json::parse(R"({"basis":[{"terms":[{"exp":[1,1],"coeff":"1"}]}]})"), Q(), 2),
               InputError);
  EXPECT_THROW(
      basis_from_json(nlohmann::json::parse(
                          R"({"staircase":[[1]],"basis":[{"terms":[{"exp":[2],"coeff":"1"}]}]})"),
                      Q(), 1),
      InputError);
}

class CliTest : public TempDir {
 protected:
  int run(const cli::JobConfig& cfg) {
    out_.str("");
    err_.str("");
    return cli::run_command(cfg, out_, err_);
  }
  cli::JobConfig job(cli::Command command, const fs::path& points) {
    cli::JobConfig cfg;
    cfg.command = command;
    cfg.points = points;
    return cfg;
  }

  std::ostringstream out_, err_;
};

TEST_F(CliTest, GbBothMethodsAgree) {
  cli::JobConfig cfg = job(cli::Command::Gb, write("a2.json", kExampleAPrime));
  cfg.method = cli::Method::Both;
  EXPECT_EQ(run(cfg), cli::kOk) << err_.str();
  const nlohmann::json doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["corners"].dump(), "[[3,0],[2,1],[0,2]]");
}

TEST_F(CliTest, GbWritesOutFileThatCheckAccepts) {
  cli::JobConfig cfg = job(cli::Command::Gb, write("a.json", kExampleA));
  cfg.method = cli::Method::Bm;
  cfg.out = dir_ / "gb.json";
  ASSERT_EQ(run(cfg), cli::kOk) << err_.str();
  EXPECT_TRUE(out_.str().empty());

  cli::JobConfig check = job(cli::Command::Check, cfg.points);
  check.basis = *cfg.out;
  EXPECT_EQ(run(check), cli::kOk) << out_.str();
  const nlohmann::json report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report["overall"], true);
  EXPECT_EQ(report["checks"].size(), 4u);
}

TEST_F(CliTest, StaircaseRender) {
  cli::JobConfig cfg = job(cli::Command::Staircase, write("a.json", kExampleA));
  cfg.render = true;
  ASSERT_EQ(run(cfg), cli::kOk);
  EXPECT_NE(out_.str().find("*..\noo.\noo*\n"), std::string::npos);
  EXPECT_NE(out_.str().find("\"corners\": [[2,0],[0,2]]"), std::string::npos);

  cli::JobConfig three_d = job(cli::Command::Staircase,
                               write("p.json", R"({"field":{"type":"rational"},"dimension":3,"points":[["1","2","3"]]})"));
  three_d.render = true;
  EXPECT_EQ(run(three_d), cli::kInputError);
}

TEST_F(CliTest, CheckRejectsFlawedBasis) {
  const fs::path points = write("a2.json", kExampleAPrime);
  // f1 and the interpolated f2 built with X2^2 - 9 on the middle slice.
  const fs::path basis = write("flawed.json", R"({"basis":[
    {"terms":[{"exp":[3,0],"coeff":"1"},{"exp":[2,0],"coeff":"-6"},{"exp":[1,0],"coeff":"11"},{"exp":[0,0],"coeff":"-6"}]},
    {"terms":[{"exp":[0,2],"coeff":"1"},{"exp":[2,1],"coeff":"-7/2"},{"exp":[1,1],"coeff":"25/2"},{"exp":[0,1],"coeff":"-11"},
              {"exp":[2,0],"coeff":"11"},{"exp":[1,0],"coeff":"-42"},{"exp":[0,0],"coeff":"31"}]}]})");
  cli::JobConfig cfg = job(cli::Command::Check, points);
  cfg.basis = basis;
  EXPECT_EQ(run(cfg), cli::kCheckFailed);
  const nlohmann::json report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report["overall"], false);
  EXPECT_EQ(report["checks"][3]["name"], "dimension");
  EXPECT_EQ(report["checks"][3]["witness"], "6 != 5");
  EXPECT_EQ(report["checks"][0]["pass"], true);
}

TEST_F(CliTest, CompareReportsTimingsAndEquality) {
  ASSERT_EQ(run(job(cli::Command::Compare, write("a.json", kExampleA))), cli::kOk);
  EXPECT_EQ(out_.str().rfind("equal", 0), 0u);
  EXPECT_NE(err_.str().find("inductive_ms"), std::string::npos);
  EXPECT_NE(err_.str().find("bm_ms"), std::string::npos);
}

TEST_F(CliTest, InputErrorsGiveExitTwo) {
  EXPECT_EQ(run(job(cli::Command::Gb, dir_ / "missing.json")), cli::kInputError);
  EXPECT_EQ(run(job(cli::Command::Gb, write("dup.json", R"({"field":{"type":"rational"},"dimension":1,"points":[["1"],["1"]]})"))),
            cli::kInputError);
  EXPECT_NE(err_.str().find("indices 0 and 1"), std::string::npos);
  cli::JobConfig bench;
  bench.command = cli::Command::Bench;
  EXPECT_EQ(run(bench), cli::kInputError);
  bench.seed = 1;
  bench.sizes = {5};
  bench.field = FieldSpec::prime(2);
  bench.dimension = 2;
  EXPECT_EQ(run(bench), cli::kInputError);
}

TEST_F(CliTest, BenchIsDeterministic) {
  cli::JobConfig cfg;
  cfg.command = cli::Command::Bench;
  cfg.seed = 99;
  cfg.sizes = {8, 16};
  cfg.runs = 2;
  ASSERT_EQ(run(cfg), cli::kOk) << err_.str();
  const std::string first = out_.str();
  EXPECT_NE(err_.str().find("loglog_slope"), std::string::npos);
  ASSERT_EQ(run(cfg), cli::kOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_NE(first.find("all cross-checks passed"), std::string::npos);

  cfg.seed = 100;
  ASSERT_EQ(run(cfg), cli::kOk);
  EXPECT_NE(out_.str(), first);
}

TEST(CliOptionsTest, Parsing) {
  EXPECT_TRUE(cli::parse_field_option("rational").is_rational());
  EXPECT_EQ(cli::parse_field_option("prime:7919").modulus(), 7919u);
  EXPECT_THROW(cli::parse_field_option("prime:10"), InputError);
  EXPECT_THROW(cli::parse_field_option("prime:"), InputError);
  EXPECT_THROW(cli::parse_field_option("real"), InputError);
  EXPECT_EQ(cli::parse_sizes_option("64,128,256"), (std::vector<std::size_t>{64, 128, 256}));
  EXPECT_THROW(cli::parse_sizes_option("64,,256"), InputError);
  EXPECT_THROW(cli::parse_sizes_option("0"), InputError);
  EXPECT_EQ(cli::parse_method_option("both"), cli::Method::Both);
  EXPECT_THROW(cli::parse_method_option("groebner"), InputError);
}

TEST(InstanceGeneratorTest, DrawsDistinctPointsInRange) {
  InstanceGenerator g(5);
  const PointSet a = g.points(Q(), 2, 300);
  EXPECT_EQ(a.size(), 300u);
  for (const Point& p : a.points()) {
    for (const Scalar& x : p.coords()) {
      EXPECT_GE(x.rational_value(), -9);
      EXPECT_LE(x.rational_value(), 9);
    }
  }
  EXPECT_EQ(g.points(FieldSpec::prime(3), 2, 9).size(), 9u);
  EXPECT_THROW(g.points(FieldSpec::prime(3), 2, 10), std::invalid_argument);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(g.draw(7), 7u);
}

}  // namespace
}  // namespace vanish

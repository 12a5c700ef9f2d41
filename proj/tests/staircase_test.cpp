#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "vanish/staircase.hpp"

namespace vanish {
namespace {

using testing::cells;
using testing::corners_by_scan;
using testing::drop_onto;
using testing::Random;

Staircase square() { return Staircase::validate(cells({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 2); }

TEST(StaircaseTest, ValidateAcceptsLowerSets) {
  EXPECT_EQ(square().size(), 4u);
  EXPECT_TRUE(Staircase::validate({}, 2).empty());
  EXPECT_EQ(Staircase::interval(3), Staircase::validate(cells({{0}, {1}, {2}}), 1));
}

TEST(StaircaseTest, ValidateReportsWitness) {
  try {
    Staircase::validate(cells({{1, 0}}), 2);
    FAIL() << "expected StaircaseError";
  } catch (const StaircaseError& e) {
    EXPECT_EQ(e.cell(), (Exponent{1, 0}));
    EXPECT_EQ(e.direction(), 0u);
  }
  try {
    Staircase::validate(cells({{0, 0}, {1, 0}, {1, 1}}), 2);
    FAIL() << "expected StaircaseError";
  } catch (const StaircaseError& e) {
    EXPECT_EQ(e.cell(), (Exponent{1, 1}));
    EXPECT_EQ(e.direction(), 0u);
  }
  EXPECT_THROW(Staircase::validate(cells({{0, 0, 0}}), 2), std::invalid_argument);
}

TEST(StaircaseTest, LimitingSetExamples) {
  EXPECT_EQ(limiting_set(square()), (std::vector<Exponent>{{2, 0}, {0, 2}}));
  const Staircase d = Staircase::validate(cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}), 2);
  EXPECT_EQ(limiting_set(d), (std::vector<Exponent>{{3, 0}, {2, 1}, {0, 2}}));
  EXPECT_EQ(limiting_set(Staircase(3)), (std::vector<Exponent>{{0, 0, 0}}));
  EXPECT_EQ(limiting_set(Staircase::interval(4)), (std::vector<Exponent>{{4}}));
}

TEST(StaircaseTest, ProjectHat) {
  EXPECT_EQ(project_hat(square()), Staircase::interval(2));
  EXPECT_EQ(project_hat(Staircase(2)), Staircase(1));
  EXPECT_EQ(project_hat(Staircase::validate(cells({{0, 0}, {1, 0}, {2, 0}}), 2)), Staircase::interval(1));
  EXPECT_THROW(project_hat(Staircase::interval(2)), std::invalid_argument);
}

TEST(StaircaseTest, FiberCount) {
  EXPECT_EQ(fiber_count(square(), Exponent{0}), 2u);
  EXPECT_EQ(fiber_count(square(), Exponent{5}), 0u);
  EXPECT_THROW(fiber_count(square(), Exponent{0, 0}), std::invalid_argument);
  const Staircase d = Staircase::validate(cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}), 2);
  EXPECT_EQ(fiber_count_along(d, Exponent{0, 0}, 0), 3u);
  EXPECT_EQ(fiber_count_along(d, Exponent{0, 0}, 1), 2u);
  EXPECT_EQ(fiber_count_along(d, Exponent{2, 1}, 0), 2u);
}

TEST(StaircaseTest, AddExamples) {
  const Staircase column = Staircase::validate(cells({{0, 0}, {0, 1}}), 2);
  const Staircase dot = Staircase::validate(cells({{0, 0}}), 2);
  EXPECT_EQ(staircase_add(column, column), square());
  EXPECT_EQ(staircase_add(staircase_add(column, dot), column),
            Staircase::validate(cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}), 2));
  EXPECT_EQ(staircase_add(square(), Staircase(2)), square());
  EXPECT_EQ(staircase_add(Staircase(2), square()), square());
  EXPECT_THROW(staircase_add(square(), Staircase::interval(2)), std::invalid_argument);
}

TEST(StaircaseTest, SumOfFamily) {
  const std::vector<Staircase> none;
  EXPECT_EQ(staircase_sum(none, 2), Staircase(2));
  EXPECT_THROW(staircase_sum(none), std::invalid_argument);
  const std::vector<Staircase> one{square()};
  EXPECT_EQ(staircase_sum(one), square());
}

TEST(StaircaseTest, TwoBlockShapesStackRowByRow) {
  std::set<Exponent> a, b;
  for (unsigned j = 0; j <= 12; ++j) {
    for (unsigned i = 0; i <= 2; ++i) a.insert({i, j});
  }
  for (unsigned j = 0; j <= 2; ++j) {
    for (unsigned i = 3; i <= 7; ++i) a.insert({i, j});
  }
  for (unsigned j = 0; j <= 9; ++j) {
    for (unsigned i = 0; i <= 4; ++i) b.insert({i, j});
  }
  for (unsigned j = 0; j <= 5; ++j) {
    for (unsigned i = 5; i <= 7; ++i) b.insert({i, j});
  }
  const Staircase d = Staircase::validate(a, 2), d2 = Staircase::validate(b, 2);
  const Staircase sum = staircase_add(d, d2);
  const std::size_t expected_width[] = {16, 16, 16, 11, 11, 11, 8, 8, 8, 8, 3, 3, 3};
  for (unsigned j = 0; j < 13; ++j) EXPECT_EQ(fiber_count(sum, Exponent{j}), expected_width[j]) << "row " << j;
  EXPECT_EQ(fiber_count(sum, Exponent{13}), 0u);
  EXPECT_EQ(sum.cells(), drop_onto(d, d2));
}

TEST(StaircaseTest, RenderAscii) {
  EXPECT_EQ(render_ascii(square()), "*..\noo.\noo*\n");
  EXPECT_EQ(render_ascii(Staircase(2)), "*\n");
  EXPECT_THROW(render_ascii(Staircase::interval(2)), std::invalid_argument);
}

TEST(StaircaseTest, BelowLeadingExponents) {
  const Exponent leads[] = {{3, 0}, {2, 1}, {0, 2}};
  EXPECT_EQ(Staircase::below_leading_exponents(leads, 2),
            Staircase::validate(cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}), 2));
  const Exponent no_pure_power[] = {{3, 0}, {1, 1}};
  EXPECT_THROW(Staircase::below_leading_exponents(no_pure_power, 2), std::invalid_argument);
  const Exponent unit[] = {{0, 0}};
  EXPECT_TRUE(Staircase::below_leading_exponents(unit, 2).empty());
}

TEST(StaircaseProperties, AdditionLaws) {
  Random rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Staircase a = rng.staircase(n, 40), b = rng.staircase(n, 40), c = rng.staircase(n, 40);
    const Staircase ab = staircase_add(a, b);
    EXPECT_EQ(ab, staircase_add(b, a));
    EXPECT_EQ(staircase_add(ab, c), staircase_add(a, staircase_add(b, c)));
    EXPECT_EQ(ab.size(), a.size() + b.size());
    EXPECT_NO_THROW(Staircase::validate(ab.cells(), n));
    EXPECT_EQ(ab.cells(), drop_onto(a, b));
    if (n >= 2) {
      std::set<Exponent> united = project_hat(a).cells();
      const Staircase projected_b = project_hat(b);
      united.insert(projected_b.cells().begin(), projected_b.cells().end());
      EXPECT_EQ(project_hat(ab).cells(), united);
    }
    const Staircase family[] = {a, b, c};
    EXPECT_EQ(staircase_sum(family), staircase_add(ab, c));
  }
}

TEST(StaircaseProperties, CornersMatchScanAndFiberCounts) {
  Random rng(8080);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Staircase d = rng.staircase(n, 40);
    const std::vector<Exponent> corners = limiting_set(d);
    EXPECT_EQ(corners, corners_by_scan(d));
    EXPECT_TRUE(std::is_sorted(corners.begin(), corners.end()));
    for (const Exponent& beta : corners) EXPECT_TRUE(is_corner_by_fibers(d, beta)) << beta;
    for (const Exponent& cell : d.cells()) EXPECT_FALSE(is_corner_by_fibers(d, cell)) << cell;
    for (int probe = 0; probe < 20; ++probe) {
      const Exponent e = rng.exponent(n, 5);
      const bool is_corner = std::find(corners.begin(), corners.end(), e) != corners.end();
      EXPECT_EQ(is_corner_by_fibers(d, e), is_corner) << e;
    }
    for (std::size_t i = 0; i < corners.size(); ++i) {
      for (std::size_t j = 0; j < corners.size(); ++j) {
        if (i != j) EXPECT_FALSE(corners[i].divides(corners[j]));
      }
    }
    if (n >= 2) {
      std::size_t total = 0;
      const Staircase projected = project_hat(d);
      for (const Exponent& dhat : projected.cells()) total += fiber_count(d, dhat);
      EXPECT_EQ(total, d.size());
    }
  }
}

}  // namespace
}  // namespace vanish

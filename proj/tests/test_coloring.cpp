#include <gtest/gtest.h>

#include <set>

#include "foxcolor/braid.hpp"
#include "foxcolor/coloring.hpp"
#include "foxcolor/parse.hpp"
#include "oracle.hpp"

using namespace foxcolor;

namespace {

Diagram closure(const char* w) { return braid_closure(parse_braid(w)); }

}  // namespace

TEST(Validity, TrefoilThreeColoring) {
  const Diagram d = closure("1 1 1");
  EXPECT_TRUE(is_valid(d, {3, {0, 1, 2}}));
  EXPECT_FALSE(is_valid(d, {3, {0, 1, 1}}));
  EXPECT_FALSE(is_valid(d, {3, {0, 1, 3}}));  // out of range
  EXPECT_FALSE(is_valid(d, {3, {0, 1}}));     // wrong length
  EXPECT_THROW(require_valid(d, {3, {0, 0, 1}}), DomainError);
}

TEST(Matrix, RowsOfTheColoringMatrix) {
  const Diagram d = parse_diagram("C 0 1 1\nC 1 0 0\n");
  EXPECT_EQ(coloring_matrix(d), (IntMatrix{{2, -2}, {-2, 2}}));
}

TEST(Determinant, SmallKnots) {
  // frozen from the cofactor oracle below
  EXPECT_EQ(determinant(closure("1 1 1")), 3);
  EXPECT_EQ(determinant(closure("1 -2 1 -2")), 5);
  EXPECT_EQ(determinant(closure("1 1 1 1 1")), 5);
  EXPECT_EQ(determinant(closure("1 1 1 2 -1 2")), 7);
  EXPECT_EQ(determinant(closure("1 1")), 2);
  EXPECT_EQ(determinant(Diagram::unknot()), 1);
}

TEST(Determinant, AgreesWithCofactorOracle) {
  for (const auto& [name, d] : oracle::small_generator_diagrams(8)) {
    if (!d.is_connected() || d.crossing_count() == 0) continue;
    const IntMatrix m = coloring_matrix(d);
    if (m.rows() != m.cols()) continue;
    EXPECT_EQ(determinant(d), oracle::cofactor_minor(m, 0, 0)) << name;
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_EQ(minor_abs_det(m, i, i), determinant(d)) << name;
  }
}

TEST(Determinant, SplitDiagramsAreRefused) {
  EXPECT_THROW(determinant(closure("strands=3 1 1 1")), DomainError);
}

TEST(Determinant, OverOnlyCircleUsesInvariantFactors) {
  // a circle lying over another circle at two crossings: a split link
  const Diagram d = Diagram(3, 2, {{0, 1, 2}, {0, 2, 1}});
  EXPECT_TRUE(d.is_connected());
  EXPECT_EQ(coloring_matrix(d).cols(), 3u);
  EXPECT_EQ(determinant(d), 0);
}

TEST(Solve, CountsMatchBruteForce) {
  for (const auto& [name, d] : oracle::small_generator_diagrams(6))
    for (std::int64_t n = 1; n <= 9; ++n)
      EXPECT_EQ(solve_colorings(d, n).total_count(), oracle::count_colorings(d, n)) << name << " mod " << n;
}

TEST(Solve, TrefoilCounts) {
  const Diagram d = closure("1 1 1");
  EXPECT_EQ(solve_colorings(d, 3).total_count(), 9);
  EXPECT_EQ(solve_colorings(d, 5).total_count(), 5);
  EXPECT_TRUE(solve_colorings(d, 3).has_nontrivial());
  EXPECT_FALSE(solve_colorings(d, 5).has_nontrivial());
  EXPECT_EQ(solve_colorings(d, 6).total_count(), 18);
}

TEST(Enumerate, MatchesOracleSet) {
  for (const auto& [name, d] : oracle::small_generator_diagrams(5))
    for (std::int64_t n : {3, 4, 5, 6}) {
      std::set<std::vector<std::int64_t>> want;
      for (auto& c : oracle::all_colorings(d, n))
        if (std::set<std::int64_t>(c.begin(), c.end()).size() >= 2) want.insert(c);
      std::set<std::vector<std::int64_t>> got;
      for (auto& c : collect(enumerate_nontrivial(d, n))) {
        EXPECT_TRUE(is_valid(d, c));
        EXPECT_TRUE(got.insert(c.colors).second) << "duplicate";
      }
      EXPECT_EQ(got, want) << name << " mod " << n;
    }
}

TEST(Enumerate, NontrivialCountIsTotalMinusConstants) {
  const Diagram d = closure("1 -2 1 -2");
  const auto total = solve_colorings(d, 5).total_count();
  EXPECT_EQ(BigInt(collect(enumerate_nontrivial(d, 5)).size()), total - 5);
}

TEST(Enumerate, CapIsEnforced) {
  const Diagram d = closure("strands=2 1 1 1 1 1 1 1 1 1 1 1 1");
  EXPECT_THROW(enumerate_nontrivial(d, 12, 10), CapExceeded);
}

TEST(Palette, ReportAndHistogram) {
  const auto r = palette_report({5, {0, 2, 2, 4, 0, 2}});
  EXPECT_EQ(r.palette, (std::vector<std::int64_t>{0, 2, 4}));
  EXPECT_EQ(r.size, 3u);
  EXPECT_EQ(r.histogram, (std::map<std::int64_t, int>{{0, 2}, {2, 3}, {4, 1}}));
}

TEST(Palette, KhProperty) {
  const Diagram trefoil = closure("1 1 1");
  EXPECT_TRUE(kh_property(trefoil, {3, {0, 1, 2}}));
  EXPECT_FALSE(kh_property(trefoil, {3, {1, 1, 1}}));
  EXPECT_THROW(kh_property(trefoil, {3, {0, 0, 1}}), DomainError);
}

TEST(Palette, Mincol) {
  EXPECT_EQ(mincol_on_diagram(closure("1 1 1"), 3), 3u);
  EXPECT_EQ(mincol_on_diagram(closure("1 -2 1 -2"), 5), 4u);
  EXPECT_EQ(mincol_on_diagram(closure("1 1 1"), 5), std::nullopt);
}

TEST(Palette, Closure) {
  EXPECT_TRUE(is_palette_closed({0, 3, 6}, 9));
  EXPECT_TRUE(is_palette_closed({4}, 9));
  EXPECT_FALSE(is_palette_closed({0, 1}, 3));
  EXPECT_TRUE(is_palette_closed({0, 1, 2}, 3));
  EXPECT_THROW(is_palette_closed({}, 3), DomainError);
}

TEST(Palette, EnvironmentCap) {
  ::setenv("FOXCOLOR_CAP", "17", 1);
  EXPECT_EQ(enumeration_cap(), 17u);
  ::setenv("FOXCOLOR_CAP", "junk", 1);
  EXPECT_EQ(enumeration_cap(), kDefaultEnumerationCap);
  ::unsetenv("FOXCOLOR_CAP");
  EXPECT_EQ(enumeration_cap(), kDefaultEnumerationCap);
}

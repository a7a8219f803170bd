#include <gtest/gtest.h>

#include <algorithm>

#include "foxcolor/families.hpp"
#include "foxcolor/moves.hpp"
#include "foxcolor/parse.hpp"

using namespace foxcolor;

namespace {

Diagram closure(const char* w) { return braid_closure(parse_braid(w)); }

std::vector<int> sorted_multiplicities(const Coloring& c) {
  std::vector<int> out;
  for (const auto& [color, count] : palette_report(c).histogram) out.push_back(count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Normalize, MapsSiteToZeroOneTwo) {
  const Diagram d = closure("1 1 1 2 -1 2");
  const auto start = *enumerate_nontrivial(d, 7).next();
  const int site = *eligible_crossing(d, start);
  const Coloring base = normalize_affine(d, start, site);
  // x -> 3 + 2x turns the site into (3, 5, 0)
  Coloring shifted = base;
  for (auto& x : shifted.colors) x = mod(3 + 2 * x, 7);
  const auto sc = site_colors(d, shifted, {site, slot::under_in});
  EXPECT_EQ(sc.low, 3);
  EXPECT_EQ(sc.over, 5);
  EXPECT_EQ(sc.high, 0);
  const Coloring back = normalize_affine(d, shifted, site);
  EXPECT_EQ(back, base);
  const auto nc = site_colors(d, back, {site, slot::under_in});
  EXPECT_EQ(nc.low, 0);
  EXPECT_EQ(nc.over, 1);
  EXPECT_EQ(nc.high, 2);
  EXPECT_EQ(normalize_affine(d, base, site), base);
}

TEST(Normalize, PreservesPaletteStructure) {
  const Diagram d = closure("1 -2 1 -2");
  for (const auto& c : collect(enumerate_nontrivial(d, 5)))
    for (int i = 0; i < d.crossing_count(); ++i) {
      const auto sc = site_colors(d, c, {i, slot::under_in});
      if (sc.low == sc.over) continue;
      const Coloring n = normalize_affine(d, c, i);
      EXPECT_TRUE(is_valid(d, n));
      EXPECT_EQ(palette_size(n), palette_size(c));
      EXPECT_EQ(sorted_multiplicities(n), sorted_multiplicities(c));
    }
}

TEST(Normalize, NonInvertibleDifferenceIsAnObstruction) {
  const Diagram d = closure("1 1 1 1 1 1 1 1 1 1 1 1");
  const std::vector<std::int64_t> top{0, 3};
  const auto c = braid_coloring(parse_braid("1 1 1 1 1 1 1 1 1 1 1 1"), top, 9);
  ASSERT_TRUE(c.has_value());
  try {
    normalize_affine(d, *c, 0);
    FAIL() << "expected Obstruction";
  } catch (const Obstruction& e) {
    EXPECT_NE(std::string(e.what()).find("not invertible mod 9"), std::string::npos);
  }
}

TEST(R2Expand, InsertsColorThree) {
  const Diagram d = closure("1 -2 1 -2");
  const auto start = *enumerate_nontrivial(d, 5).next();
  const int site = *eligible_crossing(d, start);
  const Coloring c = normalize_affine(d, start, site);
  const auto r = r2_expand(d, c, {site, slot::under_in});
  EXPECT_EQ(r.diagram.crossing_count(), d.crossing_count() + 2);
  EXPECT_EQ(r.diagram.arc_count(), d.arc_count() + 2);
  EXPECT_TRUE(is_valid(r.diagram, r.coloring));
  EXPECT_EQ(validate_embedding(r.diagram), validate_embedding(d) + 2);
  EXPECT_NE(std::find(r.coloring.colors.begin(), r.coloring.colors.end(), 3), r.coloring.colors.end());
  const auto next = site_colors(r.diagram, r.coloring, r.site);
  EXPECT_EQ(next.low, 1);
  EXPECT_EQ(next.over, 2);
  EXPECT_EQ(next.high, 3);
  // every old color survives
  for (auto x : c.colors)
    EXPECT_NE(std::find(r.coloring.colors.begin(), r.coloring.colors.end(), x), r.coloring.colors.end());
}

TEST(R2Expand, WrapsAroundModN) {
  const Diagram d = closure("1 -2 1 -2");
  const auto start = *enumerate_nontrivial(d, 5).next();
  const int site = *eligible_crossing(d, start);
  Coloring c = normalize_affine(d, start, site);
  for (auto& x : c.colors) x = mod(x + 2, 5);  // site now (2, 3, 4)
  const auto r = r2_expand(d, c, {site, slot::under_in});
  const auto next = site_colors(r.diagram, r.coloring, r.site);
  EXPECT_EQ(next.high, 0);
  EXPECT_TRUE(is_valid(r.diagram, r.coloring));
}

TEST(R2Expand, ChainsAlongTheNewSite) {
  auto [d, s] = rational_snf(7, 2);
  Coloring c = snf_bridge_coloring(s, d, 0, 1, 7);
  const int site = *eligible_crossing(d, c);
  c = normalize_affine(d, c, site);
  MoveSite ms{site, slot::under_in};
  for (int step = 0; step < 20; ++step) {
    const int n0 = d.crossing_count(), a0 = d.arc_count();
    auto r = r2_expand(d, c, ms);
    EXPECT_EQ(r.diagram.crossing_count(), n0 + 2);
    EXPECT_EQ(r.diagram.arc_count(), a0 + 2);
    EXPECT_TRUE(is_valid(r.diagram, r.coloring));
    d = std::move(r.diagram);
    c = std::move(r.coloring);
    ms = r.site;
  }
}

TEST(R2Expand, RefusesRepeatedColors) {
  const Diagram d = closure("1 1 1");
  EXPECT_THROW(r2_expand(d, {3, {1, 1, 1}}, {0, slot::under_in}), DomainError);
}

TEST(R2Expand, RefusesNonPlanarRotation) {
  const Diagram d = parse_diagram("C 1 0 2\nC 2 1 0\nC 0 2 1\nR 0 0 3 2 1\nR 1 1 4 5 2\nR 2 4 0 3 5\n");
  EXPECT_THROW(r2_expand(d, {3, {0, 1, 2}}, {0, slot::under_in}), EmbeddingError);
}

TEST(R2Expand, RefusesDiagramsWithoutRotation) {
  const Diagram d = parse_diagram("C 1 0 2\nC 2 1 0\nC 0 2 1\n");
  EXPECT_THROW(r2_expand(d, {3, {0, 1, 2}}, {0, slot::under_in}), DomainError);
}

TEST(Spectrum, TrefoilIsAlreadyMaximal) {
  const Diagram d = closure("1 1 1");
  const auto t = realize_spectrum(d, {3, {0, 1, 2}}, 3);
  EXPECT_EQ(t.sizes(), (std::vector<std::size_t>{3}));
}

TEST(Spectrum, FigureEightGainsOneColor) {
  const Diagram d = closure("1 -2 1 -2");
  const auto t = realize_spectrum(d, *enumerate_nontrivial(d, 5).next(), 5);
  EXPECT_EQ(t.sizes(), (std::vector<std::size_t>{4, 5}));
}

TEST(Spectrum, RecordsAreValidAndContiguous) {
  const Diagram d = closure("1 1 1 2 -1 2");
  for (const auto& start : collect(enumerate_nontrivial(d, 7))) {
    const auto t = realize_spectrum(d, start, 7);
    const auto sizes = t.sizes();
    EXPECT_EQ(sizes.back(), 7u);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      EXPECT_GE(sizes[i], sizes[i - 1]);
      EXPECT_LE(sizes[i], sizes[i - 1] + 1);
    }
    for (const auto& r : t.records) EXPECT_TRUE(is_valid(r.diagram, r.coloring));
  }
}

TEST(Spectrum, SnfReachesP) {
  const auto [d, s] = rational_snf(7, 2);
  const auto t = realize_spectrum(d, snf_bridge_coloring(s, d, 0, 1, 7), 7);
  EXPECT_EQ(t.records.back().palette_size, 7u);
}

TEST(Spectrum, Mod9ObstructionReport) {
  const BraidWord w = BraidWord::torus(2, 12);
  const std::vector<std::int64_t> top{0, 3};
  const auto c = braid_coloring(w, top, 9);
  ASSERT_TRUE(c.has_value());
  try {
    realize_spectrum(braid_closure(w), *c, 9);
    FAIL() << "expected Obstruction";
  } catch (const Obstruction& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("palette {0, 3, 6} is closed"), std::string::npos) << msg;
  }
}

TEST(Spectrum, RejectsTrivialStart) {
  const Diagram d = closure("1 1 1");
  EXPECT_THROW(realize_spectrum(d, {3, {1, 1, 1}}, 3), DomainError);
}

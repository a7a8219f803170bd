#include <gtest/gtest.h>

#include "foxcolor/experiments.hpp"
#include "foxcolor/json_io.hpp"

using namespace foxcolor;

TEST(Json, ColoringRoundTrip) {
  const Coloring c{7, {0, 3, 6, 2, 5, 1, 4, 0, 0, 0, 6, 1}};
  const Json j = to_json(c);
  EXPECT_EQ(j["colors"]["10"], 6);
  EXPECT_EQ(coloring_from_json(Json::parse(j.dump())), c);
}

TEST(Json, MalformedColoring) {
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"modulus": 3})")), ParseError);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"modulus": 3, "colors": {"5": 1}})")), ParseError);
}

TEST(Json, PaletteAndTrace) {
  const auto r = palette_report({5, {0, 2, 2}});
  EXPECT_EQ(to_json(r).dump(), R"({"palette":[0,2],"histogram":{"0":1,"2":2}})");
  const Diagram d = braid_closure(parse_braid("1 -2 1 -2"));
  const auto t = realize_spectrum(d, *enumerate_nontrivial(d, 5).next(), 5);
  const Json j = to_json(t);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["palette_size"], 4);
  EXPECT_EQ(j[1]["crossings"], 6);
  EXPECT_EQ(j[1]["coloring"]["modulus"], 5);
}

TEST(Suites, ReportsAreDeterministic) {
  for (const char* name : {"n-eq-2d-2", "spectrum", "mod9-obstruction", "kh-survey"}) {
    const SuiteBounds b{10, 2, 2, kDefaultEnumerationCap};
    EXPECT_EQ(format_report(run_suite(name, b)), format_report(run_suite(name, b))) << name;
    EXPECT_EQ(to_json(run_suite(name, b)).dump(), to_json(run_suite(name, b)).dump()) << name;
  }
}

TEST(Suites, EveryGridPointAppearsOnce) {
  const auto r = run_suite("n-eq-2d-2", {12, {}, {}, kDefaultEnumerationCap});
  std::set<std::string> params;
  for (const auto& c : r.cases) EXPECT_TRUE(params.insert(c.params).second);
  std::size_t pairs = 0;
  for (int p = 2; p <= 12; ++p)
    for (int q = 1; q < p; ++q) pairs += std::gcd(p, q) == 1;
  EXPECT_EQ(params.size(), pairs);
}

TEST(Suites, UnknownAndOutOfRange) {
  EXPECT_THROW(run_suite("no-such-suite", {}), DomainError);
  EXPECT_THROW(run_suite("n-eq-2d-2", {1000, {}, {}, kDefaultEnumerationCap}), DomainError);
  EXPECT_THROW(run_suite("torus-histogram", {{}, 0, 1, kDefaultEnumerationCap}), DomainError);
}

TEST(Suites, OverCapIsRefusedWithOffenders) {
  try {
    run_suite("snf-prime-surjective", {7, {}, {}, 30});
    FAIL() << "expected refusal";
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("b(7,1) count 49"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("b(5,1)"), std::string::npos) << msg;
  }
}

TEST(Suites, FailuresCarryPayload) {
  CaseResult c{"x", Verdict::fail, "why", "arcs=1 components=1\n", Coloring{3, {0}}};
  ExperimentReport r{"demo", "grid", {c}};
  EXPECT_FALSE(r.passed());
  const auto text = format_report(r);
  EXPECT_NE(text.find("| arcs=1 components=1"), std::string::npos);
  EXPECT_NE(text.find("| coloring"), std::string::npos);
}

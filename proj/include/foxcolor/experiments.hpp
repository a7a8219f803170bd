#pragma once

// Exhaustive experiment suites over the generator families. Every suite is
// deterministic: cases are produced and reported in grid order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "foxcolor/braid.hpp"
#include "foxcolor/coloring.hpp"
#include "foxcolor/families.hpp"
#include "foxcolor/json_io.hpp"
#include "foxcolor/moves.hpp"
#include "foxcolor/parse.hpp"

namespace foxcolor {

enum class Verdict { pass, fail, recorded };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::recorded:
      return "recorded";
  }
  return "?";
}

struct CaseResult {
  std::string params;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::string diagram;             // set on failure
  std::optional<Coloring> coloring;  // set on failure when one is involved
};

struct ExperimentReport {
  std::string name;
  std::string grid;
  std::vector<CaseResult> cases;

  bool passed() const {
    return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.verdict == Verdict::fail; });
  }
  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [v](const CaseResult& c) { return c.verdict == v; }));
  }
};

struct SuiteBounds {
  std::optional<int> pmax;
  std::optional<int> kmax;
  std::optional<int> lmax;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Small knots given by braid words, with a prime dividing the determinant.
struct CatalogueKnot {
  const char* name;
  const char* braid;
  std::int64_t prime;
};

inline const std::vector<CatalogueKnot>& knot_catalogue() {
  static const std::vector<CatalogueKnot> table{
      {"3_1", "1 1 1", 3},       {"4_1", "1 -2 1 -2", 5}, {"5_1", "1 1 1 1 1", 5},
      {"5_2", "1 1 1 2 -1 2", 7}, {"7_1", "1 1 1 1 1 1 1", 7},
  };
  return table;
}

namespace detail {

inline std::vector<std::pair<int, int>> coprime_pairs(int pmax) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= pmax; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

inline std::string snf_name(int p, int q) { return "b(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

inline CaseResult failure(std::string params, std::string detail, const Diagram& d,
                          std::optional<Coloring> c = std::nullopt) {
  return {std::move(params), Verdict::fail, std::move(detail), format_diagram(d), std::move(c)};
}

inline void refuse_over_cap(const std::string& suite, const std::vector<std::string>& offenders) {
  if (offenders.empty()) return;
  std::string msg = "suite " + suite + ": bounds exceed the enumeration cap for";
  for (const auto& o : offenders) msg += " " + o + ";";
  throw DomainError(msg);
}

inline bool trace_contiguous(const SpectrumTrace& t) {
  const auto sizes = t.sizes();
  if (sizes.empty() || sizes.back() != static_cast<std::size_t>(t.modulus)) return false;
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] < sizes[i - 1] || sizes[i] > sizes[i - 1] + 1) return false;
  return true;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// Runs realize_spectrum and checks every record plus contiguity.
inline CaseResult spectrum_case(const std::string& params, const Diagram& d, const Coloring& start, std::int64_t p) {
  try {
    const auto trace = realize_spectrum(d, start, p);
    for (const auto& r : trace.records) {
      if (!is_valid(r.diagram, r.coloring)) return failure(params, "invalid record coloring", r.diagram, r.coloring);
      validate_embedding(r.diagram);
    }
    if (!trace_contiguous(trace)) return failure(params, "sizes " + join_sizes(trace.sizes()) + " not contiguous", d, start);
    return {params, Verdict::pass, "sizes " + join_sizes(trace.sizes()), {}, {}};
  } catch (const Error& e) {
    return failure(params, e.what(), d, start);
  }
}

inline Coloring first_nontrivial(const Diagram& d, std::int64_t n, std::uint64_t cap) {
  auto c = enumerate_nontrivial(d, n, cap).next();
  if (!c) throw DomainError("no nontrivial " + std::to_string(n) + "-coloring");
  return *c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites

inline ExperimentReport suite_crossing_count(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(31);
  ExperimentReport r{"n-eq-2d-2", "2 <= p <= " + std::to_string(pmax) + ", 0 < q < p coprime", {}};
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    auto [d, s] = rational_snf(p, q);
    const int want_comp = p % 2 ? 1 : 2;
    if (d.crossing_count() != 2 * p - 2 || d.component_count() != want_comp)
      r.cases.push_back(detail::failure(detail::snf_name(p, q),
                                        "N = " + std::to_string(d.crossing_count()) + ", components " +
                                            std::to_string(d.component_count()),
                                        d));
    else
      r.cases.push_back({detail::snf_name(p, q), Verdict::pass, "N = " + std::to_string(2 * p - 2), {}, {}});
  }
  return r;
}

inline ExperimentReport suite_snf_determinant(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(31);
  ExperimentReport r{"snf-determinant", "2 <= p <= " + std::to_string(pmax) + ", every first minor in row 0 and column 0", {}};
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    auto [d, s] = rational_snf(p, q);
    const IntMatrix m = coloring_matrix(d);
    const BigInt det = determinant(d);
    std::string bad;
    if (det != p) bad = "determinant " + det.str();
    // invariant-factor product, computed independently of the minors
    const SmithForm snf = smith_normal_form(m);
    BigInt prod = 1;
    for (const auto& f : snf.invariant_factors) prod *= f;
    if (bad.empty() && (snf.rank + 1 != m.cols() || prod != p)) bad = "invariant factors give " + prod.str();
    for (std::size_t i = 0; i < m.rows() && bad.empty(); ++i)
      if (auto v = minor_abs_det(m, i, 0); v != p) bad = "minor (" + std::to_string(i) + ",0) = " + v.str();
    for (std::size_t j = 0; j < m.cols() && bad.empty(); ++j)
      if (auto v = minor_abs_det(m, 0, j); v != p) bad = "minor (0," + std::to_string(j) + ") = " + v.str();
    if (bad.empty())
      r.cases.push_back({detail::snf_name(p, q), Verdict::pass, "det = " + std::to_string(p), {}, {}});
    else
      r.cases.push_back(detail::failure(detail::snf_name(p, q), bad, d));
  }
  return r;
}

inline ExperimentReport suite_snf_surjective(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(31);
  ExperimentReport r{"snf-surjective", "2 <= p <= " + std::to_string(pmax) + ", bridges (0,1) mod p", {}};
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    auto [d, s] = rational_snf(p, q);
    try {
      const Coloring c = snf_bridge_coloring(s, d, 0, 1, p);
      if (!is_valid(d, c) || palette_size(c) != static_cast<std::size_t>(p))
        r.cases.push_back(detail::failure(detail::snf_name(p, q), "palette " + std::to_string(palette_size(c)), d, c));
      else
        r.cases.push_back({detail::snf_name(p, q), Verdict::pass, "palette " + std::to_string(p), {}, {}});
    } catch (const Error& e) {
      r.cases.push_back(detail::failure(detail::snf_name(p, q), e.what(), d));
    }
  }
  return r;
}

inline ExperimentReport suite_snf_prime_surjective(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(13);
  ExperimentReport r{"snf-prime-surjective", "odd prime p <= " + std::to_string(pmax) + ", all nontrivial p-colorings", {}};
  std::vector<std::pair<int, int>> grid;
  std::vector<std::string> offenders;
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    if (p == 2 || !is_prime(p)) continue;
    grid.push_back({p, q});
    auto [d, s] = rational_snf(p, q);
    const auto space = solve_colorings(d, p);
    if (!space.solutions.within(b.cap)) offenders.push_back(detail::snf_name(p, q) + " count " + space.total_count().str());
  }
  detail::refuse_over_cap(r.name, offenders);
  for (const auto& [p, q] : grid) {
    auto [d, s] = rational_snf(p, q);
    auto stream = enumerate_nontrivial(d, p, b.cap);
    std::size_t seen = 0;
    std::optional<CaseResult> bad;
    while (auto c = stream.next()) {
      ++seen;
      const bool distinct = c->colors[static_cast<std::size_t>(s.bridge_left)] != c->colors[static_cast<std::size_t>(s.bridge_right)];
      if (palette_size(*c) != static_cast<std::size_t>(p) || !distinct) {
        bad = detail::failure(detail::snf_name(p, q), distinct ? "non-surjective coloring" : "bridges share a color", d, *c);
        break;
      }
    }
    r.cases.push_back(bad ? *bad
                          : CaseResult{detail::snf_name(p, q), Verdict::pass,
                                       std::to_string(seen) + " nontrivial colorings, all surjective", {}, {}});
  }
  return r;
}

inline ExperimentReport suite_torus_histogram(const SuiteBounds& b) {
  const int kmax = b.kmax.value_or(3), lmax = b.lmax.value_or(3);
  ExperimentReport r{"torus-histogram", "families 1 and 2, k <= " + std::to_string(kmax) + ", l <= " + std::to_string(lmax), {}};
  for (int fam = 1; fam <= 2; ++fam)
    for (int k = 1; k <= kmax; ++k)
      for (int l = 1; l <= lmax; ++l) {
        const TorusParams t{TorusFamily(fam), k, l};
        const std::string params = "family " + std::to_string(fam) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        const Diagram d = torus_diagram(t);
        const Coloring c = torus_theorem5_coloring(t);
        const auto rep = palette_report(c);
        const std::int64_t n = 2 * k + 1;
        std::string bad;
        if (!is_valid(d, c)) bad = "invalid coloring";
        if (bad.empty() && rep.size != static_cast<std::size_t>(n)) bad = "palette " + std::to_string(rep.size);
        for (const auto& [color, count] : rep.histogram) {
          if (!bad.empty()) break;
          const int want = fam == 1 ? 2 * l - 1 : (color <= 1 ? l : 2 * l);
          if (count != want) bad = "color " + std::to_string(color) + " appears " + std::to_string(count) + " times";
        }
        if (bad.empty() && fam == 2 && std::gcd(2 * l, 2 * k + 1) == 1 && (2 * k) * (2 * l) % (2 * k + 1) == 0)
          bad = "crossing count divisible by 2k+1";
        if (bad.empty())
          r.cases.push_back({params, Verdict::pass, "histogram ok", {}, {}});
        else
          r.cases.push_back(detail::failure(params, bad, d, c));
      }
  return r;
}

inline ExperimentReport suite_torus_determinant(const SuiteBounds& b) {
  const int kmax = b.kmax.value_or(3), lmax = b.lmax.value_or(3);
  ExperimentReport r{"torus-determinant", "family 3, k <= " + std::to_string(kmax) + ", l <= " + std::to_string(lmax), {}};
  std::vector<std::string> offenders;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) {
      const Diagram d = torus_diagram({TorusFamily::even_even, k, l});
      const std::int64_t n = 2 * static_cast<std::int64_t>(k) * l;
      if (d.arc_count() >= n) {
        const auto space = solve_colorings(d, n);
        if (!space.solutions.within(b.cap))
          offenders.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) + " count " + space.total_count().str());
      }
    }
  detail::refuse_over_cap(r.name, offenders);
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) {
      const std::string params = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      const Diagram d = torus_diagram({TorusFamily::even_even, k, l});
      const std::int64_t n = 2 * static_cast<std::int64_t>(k) * l;
      const BigInt det = determinant(d);
      if (det == n)
        r.cases.push_back({params + " determinant", Verdict::pass, "det = " + det.str(), {}, {}});
      else
        r.cases.push_back(detail::failure(params + " determinant", "det = " + det.str() + ", expected " + std::to_string(n), d));
      const auto found = search_full_palette(d, n, b.cap);
      const std::string outcome = found ? "full " + std::to_string(n) + "-palette found"
                                        : "no coloring uses all " + std::to_string(n) + " colors (" +
                                              std::to_string(d.arc_count()) + " arcs)";
      if (k >= 2)
        r.cases.push_back({params + " search", Verdict::recorded, outcome, {}, {}});
      else if (found)
        r.cases.push_back({params + " search", Verdict::pass, outcome, {}, {}});
      else
        r.cases.push_back(detail::failure(params + " search", outcome, d));
    }
  return r;
}

inline ExperimentReport suite_maxcol(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(13);
  ExperimentReport r{"maxcol", "catalogue knots and SNFs with odd prime p <= " + std::to_string(pmax), {}};
  for (const auto& k : knot_catalogue()) {
    if (k.prime > pmax) continue;
    const Diagram d = braid_closure(parse_braid(k.braid));
    r.cases.push_back(detail::spectrum_case(std::string(k.name) + " mod " + std::to_string(k.prime), d,
                                            detail::first_nontrivial(d, k.prime, b.cap), k.prime));
  }
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    if (p == 2 || !is_prime(p)) continue;
    auto [d, s] = rational_snf(p, q);
    r.cases.push_back(detail::spectrum_case(detail::snf_name(p, q) + " mod " + std::to_string(p), d,
                                            snf_bridge_coloring(s, d, 0, 1, p), p));
  }
  return r;
}

inline ExperimentReport suite_spectrum(const SuiteBounds& b) {
  ExperimentReport r{"spectrum", "fixed list of starting colorings", {}};
  const Diagram trefoil = braid_closure(parse_braid("1 1 1"));
  r.cases.push_back(detail::spectrum_case("3_1 mod 3", trefoil, detail::first_nontrivial(trefoil, 3, b.cap), 3));
  for (auto [p, q] : {std::pair{5, 2}, std::pair{7, 2}}) {
    auto [d, s] = rational_snf(p, q);
    r.cases.push_back(detail::spectrum_case(detail::snf_name(p, q) + " mod " + std::to_string(p), d,
                                            snf_bridge_coloring(s, d, 0, 1, p), p));
  }
  const BraidWord t211 = BraidWord::torus(2, 11);
  const std::vector<std::int64_t> top{0, 1};
  r.cases.push_back(detail::spectrum_case("T(2,11) mod 11", braid_closure(t211), *braid_coloring(t211, top, 11), 11));
  const Diagram fig8 = braid_closure(parse_braid("1 -2 1 -2"));
  r.cases.push_back(detail::spectrum_case("4_1 mod 5", fig8, detail::first_nontrivial(fig8, 5, b.cap), 5));
  const Diagram k52 = braid_closure(parse_braid("1 1 1 2 -1 2"));
  r.cases.push_back(detail::spectrum_case("5_2 mod 7", k52, detail::first_nontrivial(k52, 7, b.cap), 7));
  return r;
}

inline ExperimentReport suite_mod9_obstruction(const SuiteBounds& b) {
  ExperimentReport r{"mod9-obstruction", "T(2,12) closure mod 9", {}};
  const Diagram d = braid_closure(BraidWord::torus(2, 12));
  const auto colorings = collect(enumerate_nontrivial(d, 9, b.cap));
  std::optional<CaseResult> bad;
  for (const auto& c : colorings) {
    const auto a = c.colors[0];
    for (auto x : c.colors)
      if (mod(x - a, 3) != 0) bad = detail::failure("cosets", "palette leaves a coset of {0,3,6}", d, c);
    if (bad) break;
  }
  r.cases.push_back(bad ? *bad
                        : CaseResult{"cosets", Verdict::pass,
                                     std::to_string(colorings.size()) + " nontrivial colorings, each in a coset a + {0,3,6}",
                                     {}, {}});
  if (is_palette_closed({0, 3, 6}, 9))
    r.cases.push_back({"closed {0,3,6}", Verdict::pass, "closed under 2b - a mod 9", {}, {}});
  else
    r.cases.push_back(detail::failure("closed {0,3,6}", "not closed", d));
  if (colorings.empty()) {
    r.cases.push_back(detail::failure("realize", "no nontrivial coloring to start from", d));
    return r;
  }
  try {
    realize_spectrum(d, colorings.front(), 9);
    r.cases.push_back(detail::failure("realize", "spectrum realization unexpectedly succeeded", d, colorings.front()));
  } catch (const Obstruction& e) {
    r.cases.push_back({"realize", Verdict::pass, e.what(), {}, {}});
  }
  return r;
}

inline ExperimentReport suite_kh_survey(const SuiteBounds& b) {
  const int pmax = b.pmax.value_or(7);
  ExperimentReport r{"kh-survey", "catalogue knots and SNFs with odd prime p <= " + std::to_string(pmax), {}};
  auto survey = [&](const std::string& params, const Diagram& d, std::int64_t p) {
    auto stream = enumerate_nontrivial(d, p, b.cap);
    std::size_t total = 0, kh = 0;
    while (auto c = stream.next()) {
      ++total;
      if (kh_property(d, *c)) ++kh;
    }
    r.cases.push_back({params, Verdict::recorded,
                       std::to_string(kh) + " of " + std::to_string(total) + " nontrivial colorings have distinct colors on distinct arcs",
                       {}, {}});
  };
  for (const auto& k : knot_catalogue())
    if (k.prime <= pmax) survey(std::string(k.name) + " mod " + std::to_string(k.prime), braid_closure(parse_braid(k.braid)), k.prime);
  for (const auto& [p, q] : detail::coprime_pairs(pmax)) {
    if (p == 2 || !is_prime(p)) continue;
    survey(detail::snf_name(p, q) + " mod " + std::to_string(p), rational_snf(p, q).first, p);
  }
  return r;
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, std::function<ExperimentReport(const SuiteBounds&)>>& suite_table() {
  static const std::map<std::string, std::function<ExperimentReport(const SuiteBounds&)>> table{
      {"n-eq-2d-2", suite_crossing_count},
      {"snf-determinant", suite_snf_determinant},
      {"snf-surjective", suite_snf_surjective},
      {"snf-prime-surjective", suite_snf_prime_surjective},
      {"torus-histogram", suite_torus_histogram},
      {"torus-determinant", suite_torus_determinant},
      {"maxcol", suite_maxcol},
      {"spectrum", suite_spectrum},
      {"mod9-obstruction", suite_mod9_obstruction},
      {"kh-survey", suite_kh_survey},
  };
  return table;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : suite_table()) out.push_back(name);
  return out;
}

/// Grid bounds above these are refused outright; enumerative suites also
/// refuse any case whose coloring space exceeds the cap.
inline constexpr int kMaxSuitePrime = 61;
inline constexpr int kMaxSuiteTorus = 6;

inline ExperimentReport run_suite(const std::string& name, const SuiteBounds& bounds) {
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw DomainError("unknown suite '" + name + "'");
  if (bounds.pmax && (*bounds.pmax < 2 || *bounds.pmax > kMaxSuitePrime))
    throw DomainError("pmax must be in 2.." + std::to_string(kMaxSuitePrime));
  for (const auto& v : {bounds.kmax, bounds.lmax})
    if (v && (*v < 1 || *v > kMaxSuiteTorus)) throw DomainError("kmax and lmax must be in 1.." + std::to_string(kMaxSuiteTorus));
  return it->second(bounds);
}

inline std::string format_report(const ExperimentReport& r) {
  std::ostringstream out;
  out << "suite " << r.name << " [" << r.grid << "]\n";
  for (const auto& c : r.cases) {
    out << "  " << to_string(c.verdict) << "  " << c.params << ": " << c.detail << '\n';
    if (c.verdict == Verdict::fail) {
      std::istringstream lines(c.diagram);
      for (std::string line; std::getline(lines, line);) out << "      | " << line << '\n';
      if (c.coloring) out << "      | coloring " << to_json(*c.coloring).dump() << '\n';
    }
  }
  out << r.cases.size() << " cases: " << r.count(Verdict::pass) << " pass, " << r.count(Verdict::fail) << " fail, "
      << r.count(Verdict::recorded) << " recorded\n";
  return out.str();
}

inline Json to_json(const ExperimentReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json j{{"params", c.params}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    if (!c.diagram.empty()) j["diagram"] = c.diagram;
    if (c.coloring) j["coloring"] = to_json(*c.coloring);
    cases.push_back(std::move(j));
  }
  return Json{{"suite", r.name}, {"grid", r.grid}, {"passed", r.passed()}, {"cases", std::move(cases)}};
}

}  // namespace foxcolor

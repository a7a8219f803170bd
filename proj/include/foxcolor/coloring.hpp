#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foxcolor/diagram.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/linalg.hpp"

namespace foxcolor {

/// Fox coloring: a residue mod `modulus` on every arc.
struct Coloring {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> colors;  // indexed by arc id

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Enumeration cap: FOXCOLOR_CAP if set to a positive integer, else 10^6.
inline std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("FOXCOLOR_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

/// 2*over - under_in - under_out == 0 (mod n) at every crossing, residues in [0, n).
inline bool is_valid(const Diagram& d, const Coloring& c) {
  if (c.modulus < 1 || c.colors.size() != static_cast<std::size_t>(d.arc_count())) return false;
  for (auto x : c.colors)
    if (x < 0 || x >= c.modulus) return false;
  for (const auto& x : d.crossings()) {
    const auto o = c.colors[static_cast<std::size_t>(x.over)];
    const auto a = c.colors[static_cast<std::size_t>(x.under_in)];
    const auto b = c.colors[static_cast<std::size_t>(x.under_out)];
    if (mod(2 * o - a - b, c.modulus) != 0) return false;
  }
  return true;
}

inline void require_valid(const Diagram& d, const Coloring& c) {
  if (!is_valid(d, c)) throw DomainError("coloring is not a valid Fox coloring of this diagram");
}

/// One row per crossing: +2 at the over arc, -1 at each under arc, summed
/// where columns coincide.
inline IntMatrix coloring_matrix(const Diagram& d) {
  IntMatrix m(static_cast<std::size_t>(d.crossing_count()), static_cast<std::size_t>(d.arc_count()));
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossing(i);
    const auto r = static_cast<std::size_t>(i);
    m(r, static_cast<std::size_t>(x.over)) += 2;
    m(r, static_cast<std::size_t>(x.under_in)) -= 1;
    m(r, static_cast<std::size_t>(x.under_out)) -= 1;
  }
  return m;
}

/// |first minor| of the coloring matrix. Split (disconnected) diagrams are
/// refused. The crossingless unknot has determinant 1. When the matrix is not
/// square (over-only circles) the product of invariant factors is used, which
/// agrees with the minor whenever both are defined.
inline BigInt determinant(const Diagram& d) {
  if (!d.is_connected()) throw DomainError("determinant is only defined here for non-split (connected) diagrams");
  if (d.crossing_count() == 0) return 1;
  const IntMatrix m = coloring_matrix(d);
  if (m.rows() == m.cols()) return minor_abs_det(m, 0, 0);
  const SmithForm snf = smith_normal_form(m);
  if (snf.rank + 1 != m.cols()) return 0;
  BigInt det = 1;
  for (const auto& f : snf.invariant_factors) det *= f;
  return det;
}

/// All n-colorings of a diagram.
struct ColoringSpace {
  int arc_count = 0;
  SolutionSpace solutions;

  std::int64_t modulus() const { return solutions.modulus; }
  std::size_t rank() const { return solutions.rank; }
  const std::vector<BigInt>& invariant_factors() const { return solutions.invariant_factors; }
  const BigInt& total_count() const { return solutions.count; }
  /// Nontrivial colorings exist iff there are more than the n constant ones.
  bool has_nontrivial() const { return solutions.count > solutions.modulus; }
};

inline ColoringSpace solve_colorings(const Diagram& d, std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  return ColoringSpace{d.arc_count(), solve_homogeneous_mod_n(coloring_matrix(d), n)};
}

inline std::size_t palette_size(const Coloring& c) {
  return std::set<std::int64_t>(c.colors.begin(), c.colors.end()).size();
}

/// Single-consumer stream of colorings from a ColoringSpace.
class ColoringStream {
 public:
  ColoringStream(const ColoringSpace& space, std::uint64_t cap, bool nontrivial_only)
      : modulus_(space.modulus()), inner_(space.solutions.enumerate(cap)), nontrivial_only_(nontrivial_only) {}

  std::optional<Coloring> next() {
    while (auto v = inner_.next()) {
      Coloring c{modulus_, std::move(*v)};
      if (!nontrivial_only_ || palette_size(c) >= 2) return c;
    }
    return std::nullopt;
  }

 private:
  std::int64_t modulus_;
  SolutionEnumerator inner_;
  bool nontrivial_only_;
};

/// Every valid n-coloring using at least two colors, each exactly once.
inline ColoringStream enumerate_nontrivial(const Diagram& d, std::int64_t n, std::uint64_t cap = enumeration_cap()) {
  return ColoringStream(solve_colorings(d, n), cap, true);
}

inline std::vector<Coloring> collect(ColoringStream stream) {
  std::vector<Coloring> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

struct PaletteReport {
  std::vector<std::int64_t> palette;  // ascending
  std::size_t size = 0;
  std::map<std::int64_t, int> histogram;

  friend bool operator==(const PaletteReport&, const PaletteReport&) = default;
};

inline PaletteReport palette_report(const Coloring& c) {
  PaletteReport r;
  for (auto x : c.colors) ++r.histogram[x];
  for (const auto& [color, _] : r.histogram) r.palette.push_back(color);
  r.size = r.palette.size();
  return r;
}

/// Distinct arcs carry distinct colors.
inline bool kh_property(const Diagram& d, const Coloring& c) {
  require_valid(d, c);
  return palette_size(c) == c.colors.size();
}

/// Fewest colors over all nontrivial n-colorings of this fixed diagram, or
/// nullopt when only trivial colorings exist.
inline std::optional<std::size_t> mincol_on_diagram(const Diagram& d, std::int64_t n,
                                                    std::uint64_t cap = enumeration_cap()) {
  auto stream = enumerate_nontrivial(d, n, cap);
  std::optional<std::size_t> best;
  while (auto c = stream.next()) {
    const auto k = palette_size(*c);
    if (!best || k < *best) best = k;
    if (*best == 2) break;
  }
  return best;
}

/// Closed under a * b = 2b - a (mod n).
inline bool is_palette_closed(const std::set<std::int64_t>& s, std::int64_t n) {
  if (s.empty()) throw DomainError("palette must be nonempty");
  if (n < 1) throw DomainError("modulus must be >= 1");
  for (auto a : s)
    for (auto b : s)
      if (!s.contains(mod(2 * b - a, n))) return false;
  return true;
}

}  // namespace foxcolor

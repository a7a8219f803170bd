#pragma once

// Affine renormalization of colorings and color insertion by a type II move.

#include <array>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/linalg.hpp"

namespace foxcolor {

/// A crossing plus one of its under-slots. With a = color at `low_slot`,
/// b = over color and c = color at the opposite under-slot, the move pushes
/// the c-strand over the b-strand next to the crossing.
struct MoveSite {
  int crossing = 0;
  int low_slot = slot::under_in;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

struct SiteColors {
  std::int64_t low = 0, over = 0, high = 0;
};

inline SiteColors site_colors(const Diagram& d, const Coloring& c, const MoveSite& site) {
  if (site.crossing < 0 || site.crossing >= d.crossing_count())
    throw DomainError("site crossing " + std::to_string(site.crossing) + " out of range");
  if (site.low_slot != slot::under_in && site.low_slot != slot::under_out)
    throw DomainError("site low_slot must be an under-slot (0 or 2)");
  const auto col = [&](int s) { return c.colors[static_cast<std::size_t>(d.arc_at(site.crossing, s))]; };
  return {col(site.low_slot), col(slot::over_a), col((site.low_slot + 2) % 4)};
}

/// x -> (x - a) * (b - a)^{-1} on every arc, where a and b are the low and over
/// colors at the site. Afterwards the site reads (0, 1, 2).
inline Coloring normalize_affine(const Diagram& d, const Coloring& c, const MoveSite& site) {
  require_valid(d, c);
  const auto [a, b, high] = site_colors(d, c, site);
  const std::int64_t n = c.modulus;
  const auto inv = inverse_mod(b - a, n);
  if (!inv)
    throw Obstruction("cannot normalize at crossing " + std::to_string(site.crossing) + ": b - a = " +
                      std::to_string(mod(b - a, n)) + " is not invertible mod " + std::to_string(n));
  Coloring out{n, c.colors};
  for (auto& x : out.colors) x = mul_mod(mod(x - a, n), *inv, n);
  return out;
}

inline Coloring normalize_affine(const Diagram& d, const Coloring& c, int crossing) {
  return normalize_affine(d, c, MoveSite{crossing, slot::under_in});
}

struct MoveResult {
  Diagram diagram;
  Coloring coloring;
  MoveSite site;
};

/// Type II move at a site with three distinct colors (a, b, c): the edge at
/// the high under-slot is pushed over the adjacent over-edge, creating two
/// crossings and an arc colored 2c - b. The returned site is the new crossing
/// whose colors read (b, c, 2c - b).
inline MoveResult r2_expand(const Diagram& d, const Coloring& c, const MoveSite& site) {
  require_valid(d, c);
  const auto [ka, kb, kc] = site_colors(d, c, site);
  if (ka == kb || kb == kc || ka == kc)
    throw DomainError("site crossing " + std::to_string(site.crossing) + " does not carry three distinct colors");
  validate_embedding(d);

  const int n_cross = d.crossing_count();
  const int v = site.crossing;
  const int hi = (site.low_slot + 2) % 4;
  const int ov = (hi + 3) % 4;  // over-slot preceding hi; the two share a face
  std::vector<Rotation> rot(d.rotation().begin(), d.rotation().end());
  const int eA = rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(hi)];
  const int eB = rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(ov)];
  if (eA == eB) throw DomainError("site edges form a kink; the move is not defined there");

  const auto darts = d.edge_darts();
  const auto far = [&](int e, Dart near) {
    const auto& pair = darts[static_cast<std::size_t>(e)];
    return pair[0] == near ? pair[1] : pair[0];
  };
  const Dart farA = far(eA, Dart{v, hi});
  const Dart farB = far(eB, Dart{v, ov});

  const int E = d.edge_count();
  const int b1 = eB, b2 = E, b3 = E + 1;
  const int a1 = eA, a2 = E + 2, a3 = E + 3;
  rot[static_cast<std::size_t>(farB.crossing)][static_cast<std::size_t>(farB.slot)] = b3;
  rot[static_cast<std::size_t>(farA.crossing)][static_cast<std::size_t>(farA.slot)] = a3;
  rot.push_back({b1, a2, b2, a1});  // X: A over B
  rot.push_back({b3, a3, b2, a2});  // Y: A over B again

  // arcs that never meet a crossing stay last, in their old order
  const auto old_edge_arcs = d.edge_arcs();
  std::vector<bool> on_edge(static_cast<std::size_t>(d.arc_count()), false);
  for (int a : old_edge_arcs) on_edge[static_cast<std::size_t>(a)] = true;
  std::vector<std::int64_t> free_colors;
  for (int a = 0; a < d.arc_count(); ++a)
    if (!on_edge[static_cast<std::size_t>(a)]) free_colors.push_back(c.colors[static_cast<std::size_t>(a)]);

  Diagram out = Diagram::from_rotation(std::move(rot), static_cast<int>(free_colors.size()));
  if (out.arc_count() != d.arc_count() + 2)
    throw DomainError("the over-strand at the site is a closed loop; the move would not split it");

  const std::int64_t n = c.modulus;
  std::vector<std::int64_t> edge_color(static_cast<std::size_t>(E + 4));
  for (int e = 0; e < E; ++e)
    edge_color[static_cast<std::size_t>(e)] = c.colors[static_cast<std::size_t>(old_edge_arcs[static_cast<std::size_t>(e)])];
  edge_color[static_cast<std::size_t>(b2)] = mod(2 * kc - kb, n);
  edge_color[static_cast<std::size_t>(b3)] = kb;
  edge_color[static_cast<std::size_t>(a2)] = kc;
  edge_color[static_cast<std::size_t>(a3)] = kc;

  Coloring col{n, std::vector<std::int64_t>(static_cast<std::size_t>(out.arc_count()), -1)};
  const auto new_edge_arcs = out.edge_arcs();
  for (std::size_t e = 0; e < new_edge_arcs.size(); ++e)
    col.colors[static_cast<std::size_t>(new_edge_arcs[e])] = edge_color[e];
  for (std::size_t i = 0; i < free_colors.size(); ++i)
    col.colors[col.colors.size() - free_colors.size() + i] = free_colors[i];

  require_valid(out, col);
  validate_embedding(out);
  return {std::move(out), std::move(col), MoveSite{n_cross, slot::under_in}};
}

// ---------------------------------------------------------------------------
// Spectrum realization

struct SpectrumRecord {
  Diagram diagram;
  Coloring coloring;
  std::size_t palette_size = 0;
};

struct SpectrumTrace {
  std::int64_t modulus = 0;
  std::vector<SpectrumRecord> records;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& r : records) out.push_back(r.palette_size);
    return out;
  }
};

/// First crossing (by id) with three distinct colors and an invertible
/// over - under_in difference.
inline std::optional<int> eligible_crossing(const Diagram& d, const Coloring& c) {
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto [a, b, high] = site_colors(d, c, MoveSite{i, slot::under_in});
    if (a != b && b != high && a != high && inverse_mod(b - a, c.modulus)) return i;
  }
  return std::nullopt;
}

/// Normalizes at the first eligible crossing, then applies type II moves
/// until all p colors are used. Every record's coloring is validated.
inline SpectrumTrace realize_spectrum(const Diagram& d, const Coloring& c, std::int64_t p) {
  if (p < 3) throw DomainError("realize_spectrum needs p >= 3");
  if (c.modulus != p) throw DomainError("coloring modulus " + std::to_string(c.modulus) + " differs from p = " + std::to_string(p));
  require_valid(d, c);
  if (palette_size(c) < 2) throw DomainError("realize_spectrum needs a nontrivial coloring");

  const auto start = eligible_crossing(d, c);
  if (!start) {
    std::set<std::int64_t> palette(c.colors.begin(), c.colors.end());
    std::set<std::int64_t> diffs;
    for (const auto& x : d.crossings()) {
      const auto b = c.colors[static_cast<std::size_t>(x.over)];
      for (int a : {x.under_in, x.under_out})
        if (c.colors[static_cast<std::size_t>(a)] != b) diffs.insert(mod(b - c.colors[static_cast<std::size_t>(a)], p));
    }
    std::ostringstream msg;
    msg << "no crossing carries three distinct colors with an invertible difference mod " << p << "; differences {";
    bool first = true;
    for (auto x : diffs) {
      msg << (first ? "" : ", ") << x;
      first = false;
    }
    msg << "} are not units; palette {";
    first = true;
    for (auto x : palette) {
      msg << (first ? "" : ", ") << x;
      first = false;
    }
    msg << "} is " << (is_palette_closed(palette, p) ? "" : "not ") << "closed under 2b - a";
    throw Obstruction(msg.str());
  }

  SpectrumTrace trace{p, {}};
  MoveSite site{*start, slot::under_in};
  Diagram cur = d;
  Coloring col = normalize_affine(d, c, site);
  trace.records.push_back({cur, col, palette_size(col)});
  for (std::int64_t step = 0; static_cast<std::int64_t>(palette_size(col)) < p; ++step) {
    if (step > p) throw DomainError("internal: spectrum realization did not terminate");
    auto next = r2_expand(cur, col, site);
    cur = std::move(next.diagram);
    col = std::move(next.coloring);
    site = next.site;
    trace.records.push_back({cur, col, palette_size(col)});
  }
  return trace;
}

}  // namespace foxcolor

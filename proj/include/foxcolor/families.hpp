#pragma once

// Generators: two-bridge diagrams in Schubert normal form and torus braid
// closures, with their standard colorings.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foxcolor/braid.hpp"
#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/error.hpp"

namespace foxcolor {

// ---------------------------------------------------------------------------
// Schubert normal form b(p, q)

struct SnfDescriptor {
  int p = 0;
  int q = 0;
  int bridge_left = 0;   // arc id of the bottom bridge
  int bridge_right = 0;  // arc id of the top bridge

  friend bool operator==(const SnfDescriptor&, const SnfDescriptor&) = default;
};

namespace detail {

// Layout on the pillowcase: the unit square is folded from a torus of size
// 2 x 2. The two bridges run along its bottom and top edges; the two
// underbridges are the lines of slope p/q through two of the four corners.
// Coordinates along a bridge are kept as integers in units of 1/p.
inline std::vector<Rotation> snf_rotation(int p, int q) {
  enum Dir { E = 0, N = 1, W = 2, S = 3 };
  struct End {
    bool corner;
    int a, b;  // corner (x, y), or (crossing, dart)
  };
  std::vector<std::pair<End, End>> segs;
  std::map<std::pair<int, int>, int> index;  // (h, u) -> crossing
  std::vector<std::pair<int, int>> at;       // crossing -> (h, u)
  auto crossing = [&](int h, int u) {
    auto [it, inserted] = index.emplace(std::pair{h, u}, static_cast<int>(at.size()));
    if (inserted) at.push_back({h, u});
    return it->second;
  };

  const std::array<int, 2> s{q % 2, p % 2};
  std::vector<std::array<int, 2>> starts{{0, 0}};
  for (std::array<int, 2> c : {std::array{1, 0}, std::array{0, 1}, std::array{1, 1}})
    if (c != s && starts.size() < 2) starts.push_back(c);

  for (const auto& [x0, y0] : starts) {
    End prev{true, x0, y0};
    for (int k = 1; k < p; ++k) {
      const int y = y0 + k;
      const long long xp = static_cast<long long>(x0) * p + static_cast<long long>(k) * q;  // x * p
      const int i = static_cast<int>(xp / p);
      const int frac = static_cast<int>(xp % p);
      const int h = y % 2;
      const int u = i % 2 == 0 ? frac : p - frac;
      const int v = crossing(h, u);
      const bool below_front = (i + y - 1) % 2 == 0;
      const int inside = h == 0 ? N : S;
      const int outside = h == 0 ? S : N;
      segs.push_back({prev, End{false, v, below_front ? inside : outside}});
      prev = End{false, v, below_front ? outside : inside};
    }
    segs.push_back({prev, End{true, (x0 + q) % 2, (y0 + p) % 2}});
  }
  for (int h = 0; h < 2; ++h) {
    std::vector<std::pair<int, int>> along;  // (u, crossing)
    for (int v = 0; v < static_cast<int>(at.size()); ++v)
      if (at[static_cast<std::size_t>(v)].first == h) along.push_back({at[static_cast<std::size_t>(v)].second, v});
    std::sort(along.begin(), along.end());
    End prev{true, 0, h};
    for (const auto& [u, v] : along) {
      segs.push_back({prev, End{false, v, W}});
      prev = End{false, v, E};
    }
    segs.push_back({prev, End{true, 1, h}});
  }

  // segments meeting at a corner are one edge
  DisjointSets sets(segs.size());
  std::map<std::pair<int, int>, std::vector<std::size_t>> corner_ends;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (const End& e : {segs[i].first, segs[i].second})
      if (e.corner) corner_ends[{e.a, e.b}].push_back(i);
  for (const auto& [corner, list] : corner_ends) {
    if (list.size() != 2) throw DomainError("internal: corner of the Schubert layout is not 2-valent");
    sets.unite(list[0], list[1]);
  }
  std::vector<int> label(segs.size(), -1);
  int next = 0;
  std::vector<Rotation> rotation(at.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto root = sets.find(i);
    if (label[root] < 0) label[root] = next++;
    for (const End& e : {segs[i].first, segs[i].second}) {
      if (e.corner) continue;
      // rotation order N, W, S, E: under_in, over, under_out, over
      const int s = e.b == N ? 0 : e.b == W ? 1 : e.b == S ? 2 : 3;
      rotation[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(s)] = label[root];
    }
  }
  return rotation;
}

}  // namespace detail

/// Schubert normal form of the two-bridge link b(p, q): 2p - 2 crossings,
/// determinant p, one component when p is odd and two when p is even.
inline std::pair<Diagram, SnfDescriptor> rational_snf(int p, int q) {
  if (p < 2) throw DomainError("b(p,q) needs p >= 2, got p = " + std::to_string(p));
  if (q <= 0 || q >= p) throw DomainError("b(p,q) needs 0 < q < p, got q = " + std::to_string(q));
  if (std::gcd(p, q) != 1) throw DomainError("b(p,q) needs gcd(p,q) = 1");
  if (p > 100000) throw DomainError("b(p,q): p too large");
  auto rotation = detail::snf_rotation(p, q);
  Diagram d = Diagram::from_rotation(std::move(rotation));
  SnfDescriptor s{p, q, -1, -1};
  std::vector<int> over_arcs;
  for (const auto& c : d.crossings())
    if (std::find(over_arcs.begin(), over_arcs.end(), c.over) == over_arcs.end()) over_arcs.push_back(c.over);
  if (over_arcs.size() != 2) throw DomainError("internal: Schubert layout does not have two bridges");
  // crossing 0 sits on the top edge (first underpass at height 1)
  s.bridge_right = d.crossing(0).over;
  s.bridge_left = over_arcs[0] == s.bridge_right ? over_arcs[1] : over_arcs[0];
  return {std::move(d), s};
}

/// Arcs in the order the bridge propagation colors them: each strand is
/// walked from its bridge, and every step passes under the other bridge.
inline std::vector<int> snf_propagation_order(const SnfDescriptor& s, const Diagram& d) {
  const std::array<int, 2> starts{s.bridge_left, s.bridge_right};
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(d.arc_count()), false);
  for (const auto& walk : d.walks_from(starts))
    for (const auto& step : walk)
      if (!seen[static_cast<std::size_t>(step.arc)]) {
        seen[static_cast<std::size_t>(step.arc)] = true;
        order.push_back(step.arc);
      }
  return order;
}

/// The coloring determined by the two bridge colors. Requires
/// p * (bl - br) == 0 (mod n).
inline Coloring snf_bridge_coloring(const SnfDescriptor& s, const Diagram& d, std::int64_t bl, std::int64_t br,
                                    std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  if (mod(mul_mod(mod(s.p, n), mod(bl - br, n), n), n) != 0)
    throw DomainError("bridge colors inconsistent: " + std::to_string(s.p) + " * (" + std::to_string(bl) + " - " +
                      std::to_string(br) + ") is not 0 mod " + std::to_string(n));
  Coloring c{n, std::vector<std::int64_t>(static_cast<std::size_t>(d.arc_count()), -1)};
  c.colors[static_cast<std::size_t>(s.bridge_left)] = mod(bl, n);
  c.colors[static_cast<std::size_t>(s.bridge_right)] = mod(br, n);
  const std::array<int, 2> starts{s.bridge_left, s.bridge_right};
  for (const auto& walk : d.walks_from(starts)) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const auto& x = d.crossing(walk[i].exit_crossing);
      auto& next = c.colors[static_cast<std::size_t>(walk[i + 1].arc)];
      const auto value =
          mod(2 * c.colors[static_cast<std::size_t>(x.over)] - c.colors[static_cast<std::size_t>(walk[i].arc)], n);
      if (next >= 0 && next != value) throw DomainError("internal: bridge propagation is inconsistent");
      next = value;
    }
  }
  require_valid(d, c);
  return c;
}

// ---------------------------------------------------------------------------
// Torus braid closures

enum class TorusFamily {
  odd_power = 1,   // (s_{2l-1} ... s_1)^{2k+1}
  even_power = 2,  // (s_{2k} ... s_1)^{2l}
  even_even = 3,   // (s_{2k-1} ... s_1)^{2l}
};

struct TorusParams {
  TorusFamily family = TorusFamily::odd_power;
  int k = 1;
  int l = 1;

  friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

inline BraidWord torus_word(const TorusParams& t) {
  if (t.k < 1 || t.l < 1) throw DomainError("torus parameters need k, l >= 1");
  if (t.k > 1000 || t.l > 1000) throw DomainError("torus parameters too large");
  switch (t.family) {
    case TorusFamily::odd_power:
      return BraidWord::torus(2 * t.l, 2 * t.k + 1);
    case TorusFamily::even_power:
      return BraidWord::torus(2 * t.k + 1, 2 * t.l);
    case TorusFamily::even_even:
      return BraidWord::torus(2 * t.k, 2 * t.l);
  }
  throw DomainError("unknown torus family");
}

inline Diagram torus_diagram(const TorusParams& t) { return braid_closure(torus_word(t)); }

/// Top colors for the standard (2k+1)-colorings: alternating 0, 1 for the
/// first family, 1, 2, ..., 2k, 0 for the second.
inline std::vector<std::int64_t> torus_top_colors(const TorusParams& t) {
  std::vector<std::int64_t> top;
  if (t.family == TorusFamily::odd_power) {
    for (int i = 0; i < 2 * t.l; ++i) top.push_back(i % 2);
  } else if (t.family == TorusFamily::even_power) {
    for (int i = 1; i <= 2 * t.k; ++i) top.push_back(i);
    top.push_back(0);
  } else {
    throw DomainError("no standard coloring for the third torus family; use search_full_palette");
  }
  return top;
}

/// The (2k+1)-coloring of torus_diagram(t) using every color, for the first
/// two families.
inline Coloring torus_theorem5_coloring(const TorusParams& t) {
  const auto top = torus_top_colors(t);
  auto c = braid_coloring(torus_word(t), top, 2 * t.k + 1);
  if (!c) throw DomainError("internal: torus coloring does not close up");
  return *c;
}

/// A coloring of this diagram using all n colors, if one exists.
inline std::optional<Coloring> search_full_palette(const Diagram& d, std::int64_t n,
                                                   std::uint64_t cap = enumeration_cap()) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  if (static_cast<std::int64_t>(d.arc_count()) < n) return std::nullopt;
  ColoringStream stream(solve_colorings(d, n), cap, false);
  while (auto c = stream.next())
    if (static_cast<std::int64_t>(palette_size(*c)) == n) return c;
  return std::nullopt;
}

}  // namespace foxcolor

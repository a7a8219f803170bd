#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foxcolor/error.hpp"

namespace foxcolor {

/// One crossing of a link diagram. Arcs are severed only at undercrossings, so
/// the over-strand is a single arc id.
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// Edge labels of the four arc-ends at a crossing in counterclockwise order,
/// starting from the under_in end: {under_in, over, under_out, over}. An edge
/// is a segment of the 4-valent projection graph between two crossings.
using Rotation = std::array<int, 4>;

namespace slot {
inline constexpr int under_in = 0;
inline constexpr int over_a = 1;
inline constexpr int under_out = 2;
inline constexpr int over_b = 3;
}  // namespace slot

/// One end of an edge: crossing id plus rotation slot.
struct Dart {
  int crossing = 0;
  int slot = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// One arc on a strand walk, and the crossing where the walk leaves it by
/// passing under (-1 for an arc with no under-ends).
struct WalkStep {
  int arc = 0;
  int exit_crossing = -1;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// A link diagram: arcs 0..A-1, crossing triples, and an optional rotation
/// system describing the planar embedding. Immutable once constructed; the
/// constructor enforces the structural invariants.
class Diagram {
 public:
  /// Validates arc bounds, under-end incidence (0 or 2 per arc), the declared
  /// component count, and, when present, consistency of the rotation system.
  Diagram(int arc_count, int components, std::vector<Crossing> crossings, std::vector<Rotation> rotation = {})
      : arcs_(arc_count), components_(components), crossings_(std::move(crossings)), rotation_(std::move(rotation)) {
    validate();
  }

  /// Builds a diagram from rotation data alone. Arcs are the classes of edges
  /// joined through over-slots, numbered by their smallest edge label; any
  /// `free_loops` crossingless circles are appended as the last arcs.
  static Diagram from_rotation(std::vector<Rotation> rotation, int free_loops = 0) {
    const std::size_t n = rotation.size();
    const std::size_t edges = 2 * n;
    check_edge_labels(rotation);
    detail::DisjointSets arcs(edges);
    for (const auto& r : rotation) arcs.unite(r[slot::over_a], r[slot::over_b]);
    std::vector<int> arc_of_root(edges, -1);
    int next = 0;
    for (std::size_t e = 0; e < edges; ++e) {
      auto root = arcs.find(e);
      if (arc_of_root[root] < 0) arc_of_root[root] = next++;
    }
    auto arc = [&](int e) { return arc_of_root[arcs.find(static_cast<std::size_t>(e))]; };
    std::vector<Crossing> crossings;
    crossings.reserve(n);
    for (const auto& r : rotation)
      crossings.push_back({arc(r[slot::over_a]), arc(r[slot::under_in]), arc(r[slot::under_out])});
    const int arc_count = next + free_loops;
    const int components = count_components(arc_count, crossings);
    return Diagram(arc_count, components, std::move(crossings), std::move(rotation));
  }

  static Diagram unknot() { return Diagram(1, 1, {}); }

  int arc_count() const noexcept { return arcs_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int component_count() const noexcept { return components_; }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  bool has_rotation() const noexcept { return !rotation_.empty() || crossings_.empty(); }
  std::span<const Rotation> rotation() const noexcept { return rotation_; }

  /// Arc id of the arc-end at the given rotation slot.
  int arc_at(int crossing_id, int s) const {
    const Crossing& c = crossing(crossing_id);
    if (s == slot::under_in) return c.under_in;
    if (s == slot::under_out) return c.under_out;
    return c.over;
  }

  /// edge label -> arc id. Requires a rotation system.
  std::vector<int> edge_arcs() const {
    require_rotation("edge_arcs");
    std::vector<int> out(static_cast<std::size_t>(edge_count()), -1);
    for (int i = 0; i < crossing_count(); ++i)
      for (int s = 0; s < 4; ++s) out[static_cast<std::size_t>(rotation_[i][s])] = arc_at(i, s);
    return out;
  }

  /// Both darts of every edge, indexed by edge label.
  std::vector<std::array<Dart, 2>> edge_darts() const {
    require_rotation("edge_darts");
    std::vector<std::array<Dart, 2>> out(static_cast<std::size_t>(edge_count()));
    std::vector<int> seen(out.size(), 0);
    for (int i = 0; i < crossing_count(); ++i)
      for (int s = 0; s < 4; ++s) {
        auto e = static_cast<std::size_t>(rotation_[i][s]);
        out[e][seen[e]++] = Dart{i, s};
      }
    return out;
  }

  /// True when the projection graph (crossings joined by arcs) is connected
  /// and there are no crossingless circles, or the diagram is a lone circle.
  bool is_connected() const {
    if (arcs_ == 1) return true;
    detail::DisjointSets sets(static_cast<std::size_t>(arcs_));
    for (const auto& c : crossings_) {
      sets.unite(static_cast<std::size_t>(c.over), static_cast<std::size_t>(c.under_in));
      sets.unite(static_cast<std::size_t>(c.over), static_cast<std::size_t>(c.under_out));
    }
    for (int a = 1; a < arcs_; ++a)
      if (sets.find(static_cast<std::size_t>(a)) != sets.find(0)) return false;
    return true;
  }

  /// Arcs met while travelling along each component, in order. Each walk
  /// starts at the component's lowest arc and leaves through that arc's first
  /// listed under-end. Arcs with no under-ends form singleton walks.
  std::vector<std::vector<WalkStep>> strand_walks() const { return walks_from({}); }

  /// Like strand_walks, but components containing one of `starts` begin at
  /// that arc (first matching entry wins).
  std::vector<std::vector<WalkStep>> walks_from(std::span<const int> starts) const {
    const auto inc = under_incidence();
    std::vector<bool> visited(static_cast<std::size_t>(arcs_), false);
    std::vector<std::vector<WalkStep>> walks;
    auto walk_from = [&](int start) {
      std::vector<WalkStep> walk;
      int arc = start;
      Dart leave = inc[static_cast<std::size_t>(start)].empty() ? Dart{-1, -1} : inc[static_cast<std::size_t>(start)][0];
      while (true) {
        walk.push_back({arc, leave.crossing});
        visited[static_cast<std::size_t>(arc)] = true;
        if (leave.crossing < 0) break;
        const int other_slot = leave.slot == slot::under_in ? slot::under_out : slot::under_in;
        const int next = arc_at(leave.crossing, other_slot);
        const Dart entered{leave.crossing, other_slot};
        const auto& ends = inc[static_cast<std::size_t>(next)];
        Dart next_leave = ends[0] == entered ? ends[1] : ends[0];
        if (next == start && next_leave == inc[static_cast<std::size_t>(start)][0]) break;
        arc = next;
        leave = next_leave;
      }
      walks.push_back(std::move(walk));
    };
    for (int s : starts)
      if (s >= 0 && s < arcs_ && !visited[static_cast<std::size_t>(s)]) walk_from(s);
    for (int a = 0; a < arcs_; ++a)
      if (!visited[static_cast<std::size_t>(a)]) walk_from(a);
    return walks;
  }

  /// Number of faces traced from the rotation system.
  int face_count() const {
    require_rotation("face_count");
    return static_cast<int>(face_ids().second);
  }

  /// face id of the corner that starts at dart (i, s) and turns to slot s+1,
  /// plus the number of faces.
  std::pair<std::vector<int>, std::size_t> face_ids() const {
    require_rotation("face_ids");
    const auto darts = edge_darts();
    auto opposite = [&](Dart d) {
      const auto& pair = darts[static_cast<std::size_t>(rotation_[d.crossing][d.slot])];
      return pair[0] == d ? pair[1] : pair[0];
    };
    std::vector<int> face(crossings_.size() * 4, -1);
    int faces = 0;
    for (int i = 0; i < crossing_count(); ++i)
      for (int s = 0; s < 4; ++s) {
        if (face[static_cast<std::size_t>(i * 4 + s)] >= 0) continue;
        Dart d{i, s};
        while (face[static_cast<std::size_t>(d.crossing * 4 + d.slot)] < 0) {
          face[static_cast<std::size_t>(d.crossing * 4 + d.slot)] = faces;
          Dart o = opposite(d);
          d = Dart{o.crossing, (o.slot + 1) % 4};
        }
        ++faces;
      }
    return {face, static_cast<std::size_t>(faces)};
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  void require_rotation(const char* what) const {
    if (!has_rotation()) throw DomainError(std::string(what) + " needs a rotation system");
  }

  std::vector<std::vector<Dart>> under_incidence() const {
    std::vector<std::vector<Dart>> inc(static_cast<std::size_t>(arcs_));
    for (int i = 0; i < crossing_count(); ++i) {
      inc[static_cast<std::size_t>(crossings_[i].under_in)].push_back({i, slot::under_in});
      inc[static_cast<std::size_t>(crossings_[i].under_out)].push_back({i, slot::under_out});
    }
    return inc;
  }

  static int count_components(int arc_count, std::span<const Crossing> crossings) {
    detail::DisjointSets sets(static_cast<std::size_t>(arc_count));
    for (const auto& c : crossings)
      sets.unite(static_cast<std::size_t>(c.under_in), static_cast<std::size_t>(c.under_out));
    int count = 0;
    for (int a = 0; a < arc_count; ++a)
      if (sets.find(static_cast<std::size_t>(a)) == static_cast<std::size_t>(a)) ++count;
    return count;
  }

  static void check_edge_labels(std::span<const Rotation> rotation) {
    const auto edges = static_cast<int>(2 * rotation.size());
    std::vector<int> uses(static_cast<std::size_t>(edges), 0);
    for (std::size_t i = 0; i < rotation.size(); ++i)
      for (int e : rotation[i]) {
        if (e < 0 || e >= edges)
          throw InvalidDiagram("rotation of crossing " + std::to_string(i) + " names edge " + std::to_string(e) +
                               " outside 0.." + std::to_string(edges - 1));
        ++uses[static_cast<std::size_t>(e)];
      }
    for (int e = 0; e < edges; ++e)
      if (uses[static_cast<std::size_t>(e)] != 2)
        throw InvalidDiagram("edge " + std::to_string(e) + " has " + std::to_string(uses[static_cast<std::size_t>(e)]) +
                             " ends in the rotation system, expected 2");
  }

  void validate() const {
    if (arcs_ < 1) throw InvalidDiagram("a diagram needs at least one arc");
    std::vector<int> under_uses(static_cast<std::size_t>(arcs_), 0);
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& c = crossings_[i];
      for (int a : {c.over, c.under_in, c.under_out})
        if (a < 0 || a >= arcs_)
          throw InvalidDiagram("crossing " + std::to_string(i) + " uses arc " + std::to_string(a) +
                               " but only " + std::to_string(arcs_) + " arcs are declared");
      ++under_uses[static_cast<std::size_t>(c.under_in)];
      ++under_uses[static_cast<std::size_t>(c.under_out)];
    }
    for (int a = 0; a < arcs_; ++a) {
      const int u = under_uses[static_cast<std::size_t>(a)];
      if (u != 0 && u != 2)
        throw InvalidDiagram("arc " + std::to_string(a) + " ends at " + std::to_string(u) +
                             " undercrossings; every arc has 0 or 2 under-ends");
    }
    const int computed = count_components(arcs_, crossings_);
    if (computed != components_)
      throw InvalidDiagram("declared " + std::to_string(components_) + " components but the crossings describe " +
                           std::to_string(computed));
    if (rotation_.empty()) return;
    if (rotation_.size() != crossings_.size())
      throw InvalidDiagram("rotation system covers " + std::to_string(rotation_.size()) + " of " +
                           std::to_string(crossings_.size()) + " crossings");
    check_edge_labels(rotation_);
    // each edge must carry one arc, and each arc's edges must form one over-connected class
    const auto edges = static_cast<std::size_t>(edge_count());
    std::vector<int> arc_of_edge(edges, -1);
    for (int i = 0; i < crossing_count(); ++i)
      for (int s = 0; s < 4; ++s) {
        auto e = static_cast<std::size_t>(rotation_[i][s]);
        const int a = arc_at(i, s);
        if (arc_of_edge[e] >= 0 && arc_of_edge[e] != a)
          throw InvalidDiagram("rotation edge " + std::to_string(e) + " joins arc " + std::to_string(arc_of_edge[e]) +
                               " to arc " + std::to_string(a) + " without an undercrossing");
        arc_of_edge[e] = a;
      }
    detail::DisjointSets classes(edges);
    for (const auto& r : rotation_)
      classes.unite(static_cast<std::size_t>(r[slot::over_a]), static_cast<std::size_t>(r[slot::over_b]));
    std::map<int, std::size_t> root_of_arc;
    for (std::size_t e = 0; e < edges; ++e) {
      auto [it, inserted] = root_of_arc.emplace(arc_of_edge[e], classes.find(e));
      if (!inserted && it->second != classes.find(e))
        throw InvalidDiagram("arc " + std::to_string(arc_of_edge[e]) +
                             " is split by an undercrossing in the rotation system");
    }
  }

  int arcs_;
  int components_;
  std::vector<Crossing> crossings_;
  std::vector<Rotation> rotation_;
};

/// Traces faces of a connected diagram and checks V - E + F = 2. Returns F.
inline int validate_embedding(const Diagram& d) {
  if (d.crossing_count() == 0) throw DomainError("validate_embedding needs at least one crossing");
  if (!d.is_connected()) throw DomainError("validate_embedding needs a connected diagram");
  const int f = d.face_count();
  const int euler = d.crossing_count() - d.edge_count() + f;
  if (euler != 2)
    throw EmbeddingError("rotation system is not planar: V - E + F = " + std::to_string(d.crossing_count()) + " - " +
                         std::to_string(d.edge_count()) + " + " + std::to_string(f) + " = " + std::to_string(euler));
  return f;
}

}  // namespace foxcolor

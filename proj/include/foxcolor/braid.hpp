#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/error.hpp"

namespace foxcolor {

/// A braid word on `strands` strands. Letter +i is sigma_i, -i its inverse.
/// For sigma_i the strand at position i+1 crosses over the strand at position
/// i (positions 1-based, left to right); sigma_i^{-1} has the left strand over.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2) throw DomainError("a braid needs at least 2 strands");
    for (int g : letters_) {
      if (g == 0) throw DomainError("braid letter 0 is not a generator");
      if (std::abs(g) >= strands_)
        throw DomainError("braid letter " + std::to_string(g) + " needs more than " + std::to_string(strands_) +
                          " strands");
    }
  }

  /// Identity braid: the closure is an unlink of `strands` circles.
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  /// (sigma_{r-1} ... sigma_1)^s on r strands: the standard T(r, s) word.
  static BraidWord torus(int r, int s) {
    if (r < 2 || s < 1) throw DomainError("torus word needs r >= 2 and s >= 1");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>((r - 1) * s));
    for (int rep = 0; rep < s; ++rep)
      for (int i = r - 1; i >= 1; --i) letters.push_back(i);
    return BraidWord(r, std::move(letters));
  }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

namespace detail {

struct LetterEdges {
  int left = 0;  // 0-based position of the left strand
  bool positive = true;
  int in_left = 0, in_right = 0, out_left = 0, out_right = 0;
};

struct ClosureLayout {
  std::vector<Rotation> rotation;
  std::vector<LetterEdges> letters;
  std::vector<int> top;  // per position: edge entering the braid there, -1 if untouched
  int free_loops = 0;
};

// Lays the braid out top to bottom and closes it on the right. Edge labels are
// dense, in order of first appearance in the rotation system.
inline ClosureLayout closure_layout(const BraidWord& w) {
  const int r = w.strands();
  std::vector<int> raw_pos(static_cast<std::size_t>(r));
  std::iota(raw_pos.begin(), raw_pos.end(), 0);
  int next_raw = r;
  ClosureLayout out;
  std::vector<LetterEdges> raw_letters;
  std::vector<bool> touched(static_cast<std::size_t>(r), false);
  for (int g : w.letters()) {
    LetterEdges e;
    e.left = std::abs(g) - 1;
    e.positive = g > 0;
    auto L = static_cast<std::size_t>(e.left);
    e.in_left = raw_pos[L];
    e.in_right = raw_pos[L + 1];
    e.out_left = next_raw++;
    e.out_right = next_raw++;
    raw_pos[L] = e.out_left;
    raw_pos[L + 1] = e.out_right;
    touched[L] = touched[L + 1] = true;
    raw_letters.push_back(e);
  }
  // closure: the bottom edge at each position is the top edge there
  std::vector<int> merge(static_cast<std::size_t>(next_raw));
  std::iota(merge.begin(), merge.end(), 0);
  for (int p = 0; p < r; ++p) merge[static_cast<std::size_t>(raw_pos[static_cast<std::size_t>(p)])] = p;

  std::vector<int> dense(static_cast<std::size_t>(next_raw), -1);
  int next_dense = 0;
  auto label = [&](int raw) {
    int& slot = dense[static_cast<std::size_t>(merge[static_cast<std::size_t>(raw)])];
    if (slot < 0) slot = next_dense++;
    return slot;
  };
  for (auto e : raw_letters) {
    // counterclockwise around the crossing: NE = in_right, NW = in_left, SW = out_left, SE = out_right
    if (e.positive) {
      // right strand over (NE -> SW), left strand under (NW -> SE)
      Rotation rot{label(e.in_left), label(e.out_left), label(e.out_right), label(e.in_right)};
      out.rotation.push_back(rot);
      e = {e.left, true, rot[0], rot[3], rot[1], rot[2]};
    } else {
      // left strand over (NW -> SE), right strand under (NE -> SW)
      Rotation rot{label(e.in_right), label(e.in_left), label(e.out_left), label(e.out_right)};
      out.rotation.push_back(rot);
      e = {e.left, false, rot[1], rot[0], rot[2], rot[3]};
    }
    out.letters.push_back(e);
  }
  out.top.assign(static_cast<std::size_t>(r), -1);
  for (int p = 0; p < r; ++p) {
    if (!touched[static_cast<std::size_t>(p)])
      ++out.free_loops;
    else
      out.top[static_cast<std::size_t>(p)] = label(p);
  }
  return out;
}

}  // namespace detail

/// Diagram of the braid closure, with the rotation system of the standard
/// planar closure. Strands that never cross become crossingless circles.
inline Diagram braid_closure(const BraidWord& w) {
  auto layout = detail::closure_layout(w);
  return Diagram::from_rotation(std::move(layout.rotation), layout.free_loops);
}

/// Pushes colors `top` (one per strand position, read left to right at the
/// top of the braid) down through the braid. Returns the resulting coloring
/// of braid_closure(w) if the colors arriving at the bottom match `top`.
inline std::optional<Coloring> braid_coloring(const BraidWord& w, std::span<const std::int64_t> top, std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  if (top.size() != static_cast<std::size_t>(w.strands()))
    throw DomainError("need one top color per strand (" + std::to_string(w.strands()) + ")");
  const auto layout = detail::closure_layout(w);
  std::vector<std::int64_t> pos(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) pos[i] = mod(top[i], n);
  const auto edges = 2 * layout.letters.size();
  std::vector<std::int64_t> edge_color(edges, -1);
  auto assign = [&](int e, std::int64_t c) {
    auto& slot = edge_color[static_cast<std::size_t>(e)];
    if (slot >= 0 && slot != c) return false;
    slot = c;
    return true;
  };
  for (std::size_t p = 0; p < pos.size(); ++p)
    if (layout.top[p] >= 0 && !assign(layout.top[p], pos[p])) return std::nullopt;
  for (const auto& e : layout.letters) {
    const auto L = static_cast<std::size_t>(e.left);
    const std::int64_t left = pos[L], right = pos[L + 1];
    if (e.positive) {
      pos[L] = right;
      pos[L + 1] = mod(2 * right - left, n);
    } else {
      pos[L] = mod(2 * left - right, n);
      pos[L + 1] = left;
    }
    if (!assign(e.out_left, pos[L]) || !assign(e.out_right, pos[L + 1])) return std::nullopt;
  }
  for (std::size_t p = 0; p < pos.size(); ++p)
    if (pos[p] != mod(top[p], n)) return std::nullopt;

  const Diagram d = Diagram::from_rotation(layout.rotation, layout.free_loops);
  Coloring c{n, std::vector<std::int64_t>(static_cast<std::size_t>(d.arc_count()), -1)};
  const auto arcs = d.edge_arcs();
  for (std::size_t e = 0; e < edges; ++e) {
    auto& slot = c.colors[static_cast<std::size_t>(arcs[e])];
    if (slot >= 0 && slot != edge_color[e]) return std::nullopt;
    slot = edge_color[e];
  }
  // crossingless circles come last, in position order
  std::size_t free_arc = static_cast<std::size_t>(d.arc_count() - layout.free_loops);
  for (std::size_t p = 0; p < pos.size(); ++p)
    if (layout.top[p] < 0) c.colors[free_arc++] = pos[p];
  return c;
}

}  // namespace foxcolor

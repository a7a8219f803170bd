#pragma once

// Line-oriented text formats.
//
// Diagram:
//   arcs=A components=c          (optional header)
//   C <over> <under_in> <under_out>
//   R <crossing> <e0> <e1> <e2> <e3>   (optional; all or none)
// R lines give the edges at a crossing counterclockwise, starting from the
// under_in end. Edge labels are arbitrary nonnegative integers, each used by
// exactly two arc-ends; they are renumbered densely by first appearance.
// Blank lines and text after '#' are ignored.
//
// Braid: whitespace-separated nonzero integers, optionally preceded by
// "strands=r"; without it r = 1 + max |letter|.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "foxcolor/braid.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/error.hpp"

namespace foxcolor {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline long long expect_int(std::string_view s, int line, const char* what) {
  auto v = to_int(s);
  if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  return *v;
}

inline std::optional<long long> key_value(std::string_view token, std::string_view key, int line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') return std::nullopt;
  return expect_int(token.substr(key.size() + 1), line, key.data());
}

}  // namespace detail

inline Diagram parse_diagram(std::string_view text) {
  std::optional<long long> arcs, components;
  struct RawCrossing {
    long long over, in, out;
    int line;
  };
  std::vector<RawCrossing> raw;
  std::map<long long, std::pair<std::array<long long, 4>, int>> raw_rotation;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "C") {
      if (tok.size() != 4) throw ParseError(line_no, "crossing line needs 3 arc ids: C <over> <under_in> <under_out>");
      raw.push_back({detail::expect_int(tok[1], line_no, "arc id"), detail::expect_int(tok[2], line_no, "arc id"),
                     detail::expect_int(tok[3], line_no, "arc id"), line_no});
    } else if (tok[0] == "R") {
      if (tok.size() != 6) throw ParseError(line_no, "rotation line needs a crossing and 4 edges: R <c> <e0> <e1> <e2> <e3>");
      const long long c = detail::expect_int(tok[1], line_no, "crossing id");
      std::array<long long, 4> ends{};
      for (int i = 0; i < 4; ++i) ends[static_cast<std::size_t>(i)] = detail::expect_int(tok[static_cast<std::size_t>(i + 2)], line_no, "edge label");
      if (!raw_rotation.emplace(c, std::pair{ends, line_no}).second)
        throw ParseError(line_no, "duplicate rotation for crossing " + std::to_string(c));
    } else if (tok[0].find('=') != std::string_view::npos) {
      for (auto t : tok) {
        if (auto v = detail::key_value(t, "arcs", line_no))
          arcs = *v;
        else if (auto v2 = detail::key_value(t, "components", line_no))
          components = *v2;
        else
          throw ParseError(line_no, "unknown header field '" + std::string(t) + "'");
      }
    } else {
      throw ParseError(line_no, "unrecognized line starting with '" + std::string(tok[0]) + "'");
    }
  }

  // arc ids: bounded by the header, or renumbered densely when it is absent
  std::map<long long, int> arc_index;
  if (arcs) {
    if (*arcs < 1) throw ParseError(0, "arcs must be >= 1");
    for (const auto& c : raw)
      for (long long a : {c.over, c.in, c.out})
        if (a < 0 || a >= *arcs)
          throw ParseError(c.line, "arc " + std::to_string(a) + " is not declared (arcs=" + std::to_string(*arcs) + ")");
    for (long long a = 0; a < *arcs; ++a) arc_index[a] = static_cast<int>(a);
  } else {
    for (const auto& c : raw)
      for (long long a : {c.over, c.in, c.out}) {
        if (a < 0) throw ParseError(c.line, "negative arc id " + std::to_string(a));
        arc_index.emplace(a, 0);
      }
    int next = 0;
    for (auto& [_, idx] : arc_index) idx = next++;
    if (arc_index.empty()) arc_index[0] = 0;  // crossingless unknot
  }
  const int arc_count = static_cast<int>(arc_index.size());

  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (const auto& c : raw) crossings.push_back({arc_index.at(c.over), arc_index.at(c.in), arc_index.at(c.out)});

  std::vector<Rotation> rotation;
  if (!raw_rotation.empty()) {
    if (raw_rotation.size() != raw.size())
      throw ParseError(0, "rotation section covers " + std::to_string(raw_rotation.size()) + " of " +
                              std::to_string(raw.size()) + " crossings");
    std::map<long long, int> edge_index;
    std::map<long long, int> edge_uses;
    for (long long c = 0; c < static_cast<long long>(raw.size()); ++c) {
      auto it = raw_rotation.find(c);
      if (it == raw_rotation.end()) throw ParseError(0, "no rotation line for crossing " + std::to_string(c));
      Rotation rot{};
      for (int s = 0; s < 4; ++s) {
        const long long e = it->second.first[static_cast<std::size_t>(s)];
        if (e < 0) throw ParseError(it->second.second, "negative edge label " + std::to_string(e));
        auto [pos, inserted] = edge_index.emplace(e, static_cast<int>(edge_index.size()));
        ++edge_uses[e];
        rot[static_cast<std::size_t>(s)] = pos->second;
      }
      rotation.push_back(rot);
    }
    for (const auto& [e, uses] : edge_uses)
      if (uses != 2)
        throw ParseError(0, "edge " + std::to_string(e) + " is used by " + std::to_string(uses) +
                                " arc-ends in the rotation section, expected 2");
    if (edge_index.size() != 2 * raw.size())
      throw ParseError(0, "rotation section names " + std::to_string(edge_index.size()) + " edges, expected " +
                              std::to_string(2 * raw.size()));
  }

  if (components) {
    if (*components < 1) throw ParseError(0, "components must be >= 1");
    return Diagram(arc_count, static_cast<int>(*components), std::move(crossings), std::move(rotation));
  }
  detail::DisjointSets sets(static_cast<std::size_t>(arc_count));
  for (const auto& c : crossings)
    sets.unite(static_cast<std::size_t>(c.under_in), static_cast<std::size_t>(c.under_out));
  int count = 0;
  for (int a = 0; a < arc_count; ++a)
    if (sets.find(static_cast<std::size_t>(a)) == static_cast<std::size_t>(a)) ++count;
  return Diagram(arc_count, count, std::move(crossings), std::move(rotation));
}

inline std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "arcs=" << d.arc_count() << " components=" << d.component_count() << '\n';
  for (const auto& c : d.crossings()) out << "C " << c.over << ' ' << c.under_in << ' ' << c.under_out << '\n';
  if (d.crossing_count() > 0 && d.has_rotation()) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const auto& r = d.rotation()[static_cast<std::size_t>(i)];
      out << "R " << i << ' ' << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << r[3] << '\n';
    }
  }
  return out.str();
}

inline BraidWord parse_braid(std::string_view text) {
  std::optional<long long> strands;
  std::vector<int> letters;
  auto tok = detail::split_ws(text);
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (auto v = detail::key_value(tok[i], "strands", 0)) {
      if (i != 0) throw ParseError(0, "strands=r must come before the letters");
      strands = *v;
      continue;
    }
    const long long g = detail::expect_int(tok[i], 0, "braid letter");
    if (g == 0) throw ParseError(0, "braid letter 0 is not a generator");
    if (g > 1'000'000 || g < -1'000'000) throw ParseError(0, "braid letter out of range");
    letters.push_back(static_cast<int>(g));
  }
  if (!strands) {
    if (letters.empty()) throw ParseError(0, "empty braid word; use strands=r for an identity braid");
    int m = 0;
    for (int g : letters) m = std::max(m, std::abs(g));
    strands = m + 1;
  }
  if (*strands < 2 || *strands > 1'000'000) throw ParseError(0, "strands must be at least 2");
  for (int g : letters)
    if (std::abs(g) >= *strands)
      throw ParseError(0, "letter " + std::to_string(g) + " needs more than " + std::to_string(*strands) + " strands");
  return BraidWord(static_cast<int>(*strands), std::move(letters));
}

inline std::string format_braid(const BraidWord& w) {
  std::ostringstream out;
  out << "strands=" << w.strands();
  for (int g : w.letters()) out << ' ' << g;
  return out.str();
}

}  // namespace foxcolor

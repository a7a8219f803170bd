#pragma once

#include <string>

#include "json.hpp"

#include "foxcolor/coloring.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/moves.hpp"
#include "foxcolor/parse.hpp"

namespace foxcolor {

using Json = nlohmann::ordered_json;

/// {"modulus": n, "colors": {"<arc>": residue, ...}}
inline Json to_json(const Coloring& c) {
  Json colors = Json::object();
  for (std::size_t a = 0; a < c.colors.size(); ++a) colors[std::to_string(a)] = c.colors[a];
  return Json{{"modulus", c.modulus}, {"colors", std::move(colors)}};
}

inline Coloring coloring_from_json(const Json& j) {
  try {
    Coloring c;
    c.modulus = j.at("modulus").get<std::int64_t>();
    const auto& colors = j.at("colors");
    c.colors.assign(colors.size(), -1);
    for (const auto& [key, value] : colors.items()) {
      const auto arc = detail::to_int(key);
      if (!arc || *arc < 0 || *arc >= static_cast<long long>(colors.size()))
        throw ParseError(0, "coloring arc key '" + key + "' is not in 0.." + std::to_string(colors.size() - 1));
      c.colors[static_cast<std::size_t>(*arc)] = value.get<std::int64_t>();
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed coloring JSON: ") + e.what());
  }
}

inline Json to_json(const PaletteReport& r) {
  Json hist = Json::object();
  for (const auto& [color, count] : r.histogram) hist[std::to_string(color)] = count;
  return Json{{"palette", r.palette}, {"histogram", std::move(hist)}};
}

/// Array of {palette_size, crossings, coloring}.
inline Json to_json(const SpectrumTrace& t) {
  Json out = Json::array();
  for (const auto& r : t.records)
    out.push_back(Json{{"palette_size", r.palette_size},
                       {"crossings", r.diagram.crossing_count()},
                       {"coloring", to_json(r.coloring)}});
  return out;
}

}  // namespace foxcolor

// foxcolor: command-line front end.
//
// Exit status: 0 success, 1 usage error or malformed input, 2 a verified
// failure (suite case failed, obstruction, invalid coloring).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "foxcolor/experiments.hpp"
#include "foxcolor/foxcolor.hpp"
#include "foxcolor/json_io.hpp"

namespace fc = foxcolor;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct Source {
  std::string file;
  std::string braid;
  std::string snf;
  std::vector<int> torus;
};

struct Options {
  Source src;
  std::optional<std::int64_t> modulus;
  std::optional<std::uint64_t> cap;
  std::string json_path;
  std::string coloring_path;
  std::vector<std::int64_t> bridge_colors;
  bool all = false;
  std::optional<int> pmax, kmax, lmax;
  std::string suite;
  std::string positional;  // "p/q" for snf
  std::vector<int> torus_args;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fc::ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw fc::ParseError(0, "expected p/q, got '" + s + "'");
  const auto p = fc::detail::to_int(std::string_view(s).substr(0, slash));
  const auto q = fc::detail::to_int(std::string_view(s).substr(slash + 1));
  if (!p || !q) throw fc::ParseError(0, "expected integers in p/q, got '" + s + "'");
  return {static_cast<int>(*p), static_cast<int>(*q)};
}

fc::TorusParams torus_params(const std::vector<int>& v) {
  if (v.size() != 3) throw fc::ParseError(0, "torus needs: <family> <k> <l>");
  if (v[0] < 1 || v[0] > 3) throw fc::ParseError(0, "torus family must be 1, 2 or 3");
  return {fc::TorusFamily(v[0]), v[1], v[2]};
}

struct Loaded {
  fc::Diagram diagram;
  std::optional<fc::SnfDescriptor> snf;
  std::optional<fc::BraidWord> braid;
};

Loaded load(const Source& s) {
  const int given = !s.file.empty() + !s.braid.empty() + !s.snf.empty() + !s.torus.empty();
  if (given != 1) throw CLI::ValidationError("input", "give exactly one of --file, --braid, --snf, --torus");
  if (!s.file.empty()) return {fc::parse_diagram(read_file(s.file)), {}, {}};
  if (!s.braid.empty()) {
    auto w = fc::parse_braid(s.braid);
    return {fc::braid_closure(w), {}, w};
  }
  if (!s.snf.empty()) {
    auto [p, q] = parse_fraction(s.snf);
    auto [d, desc] = fc::rational_snf(p, q);
    return {std::move(d), desc, {}};
  }
  const auto t = torus_params(s.torus);
  return {fc::torus_diagram(t), {}, fc::torus_word(t)};
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.src.file, "diagram text file");
  cmd->add_option("--braid", o.src.braid, "braid word, e.g. \"1 -2 1 -2\"");
  cmd->add_option("--snf", o.src.snf, "Schubert normal form b(p,q), as p/q");
  cmd->add_option("--torus", o.src.torus, "torus family, k, l")->expected(3);
}

void emit_json(const Options& o, const fc::Json& j) {
  if (o.json_path.empty()) return;
  std::ofstream out(o.json_path);
  if (!out) throw fc::ParseError(0, "cannot write '" + o.json_path + "'");
  out << j.dump(2) << '\n';
}

std::int64_t require_mod(const Options& o) {
  if (!o.modulus) throw CLI::ValidationError("--mod", "this command needs --mod n");
  if (*o.modulus < 1) throw CLI::ValidationError("--mod", "modulus must be >= 1");
  return *o.modulus;
}

std::uint64_t cap_of(const Options& o) { return o.cap.value_or(fc::enumeration_cap()); }

std::string coloring_line(const fc::Coloring& c) {
  std::string s;
  for (auto x : c.colors) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

fc::Coloring load_coloring(const Options& o) {
  if (o.coloring_path.empty()) throw CLI::ValidationError("--coloring", "this command needs --coloring <json>");
  try {
    return fc::coloring_from_json(fc::Json::parse(read_file(o.coloring_path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw fc::ParseError(0, std::string("malformed JSON: ") + e.what());
  }
}

void print_summary(const fc::Diagram& d) {
  std::cout << "arcs " << d.arc_count() << ", crossings " << d.crossing_count() << ", components "
            << d.component_count() << '\n';
}

// ---------------------------------------------------------------------------

int cmd_parse(const Options& o) {
  const auto in = load(o.src);
  std::cout << fc::format_diagram(in.diagram);
  print_summary(in.diagram);
  fc::Json j{{"arcs", in.diagram.arc_count()},
             {"crossings", in.diagram.crossing_count()},
             {"components", in.diagram.component_count()}};
  if (in.diagram.crossing_count() > 0 && in.diagram.has_rotation() && in.diagram.is_connected()) {
    const int f = fc::validate_embedding(in.diagram);
    std::cout << "faces " << f << " (planar)\n";
    j["faces"] = f;
  }
  emit_json(o, j);
  return 0;
}

int cmd_det(const Options& o) {
  const auto in = load(o.src);
  const auto det = fc::determinant(in.diagram);
  std::cout << det << '\n';
  emit_json(o, fc::Json{{"determinant", det.str()}});
  return 0;
}

int cmd_color_count(const Options& o) {
  const auto in = load(o.src);
  const auto n = require_mod(o);
  const auto space = fc::solve_colorings(in.diagram, n);
  std::cout << space.total_count() << '\n';
  std::vector<std::string> factors;
  for (const auto& f : space.invariant_factors()) factors.push_back(f.str());
  emit_json(o, fc::Json{{"modulus", n},
                        {"count", space.total_count().str()},
                        {"rank", space.rank()},
                        {"invariant_factors", factors},
                        {"nontrivial", space.has_nontrivial()}});
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto in = load(o.src);
  const auto n = require_mod(o);
  fc::ColoringStream stream(fc::solve_colorings(in.diagram, n), cap_of(o), !o.all);
  fc::Json arr = fc::Json::array();
  while (auto c = stream.next()) {
    std::cout << coloring_line(*c) << '\n';
    if (!o.json_path.empty()) arr.push_back(fc::to_json(*c));
  }
  emit_json(o, arr);
  return 0;
}

int cmd_mincol(const Options& o) {
  const auto in = load(o.src);
  const auto n = require_mod(o);
  const auto m = fc::mincol_on_diagram(in.diagram, n, cap_of(o));
  if (m)
    std::cout << *m << '\n';
  else
    std::cout << "none (only trivial colorings)\n";
  emit_json(o, fc::Json{{"modulus", n}, {"mincol", m ? fc::Json(*m) : fc::Json(nullptr)}});
  return 0;
}

int cmd_palette(const Options& o) {
  const auto in = load(o.src);
  const auto c = load_coloring(o);
  if (!fc::is_valid(in.diagram, c)) {
    std::cout << "invalid coloring\n";
    return kExitFailure;
  }
  const auto r = fc::palette_report(c);
  std::cout << "palette size " << r.size << '\n';
  for (const auto& [color, count] : r.histogram) std::cout << "  " << color << ": " << count << '\n';
  emit_json(o, fc::to_json(r));
  return 0;
}

int cmd_kh(const Options& o) {
  const auto in = load(o.src);
  const auto c = load_coloring(o);
  if (!fc::is_valid(in.diagram, c)) {
    std::cout << "invalid coloring\n";
    return kExitFailure;
  }
  const bool kh = fc::kh_property(in.diagram, c);
  std::cout << (kh ? "yes" : "no") << '\n';
  emit_json(o, fc::Json{{"kh", kh}});
  return 0;
}

int cmd_snf(const Options& o) {
  auto [p, q] = parse_fraction(o.positional);
  auto [d, s] = fc::rational_snf(p, q);
  const std::int64_t n = o.modulus.value_or(p);
  std::int64_t bl = 0, br = 1;
  if (!o.bridge_colors.empty()) {
    bl = o.bridge_colors[0];
    br = o.bridge_colors[1];
  }
  std::cout << fc::format_diagram(d);
  print_summary(d);
  std::cout << "bridges: left arc " << s.bridge_left << ", right arc " << s.bridge_right << '\n';
  const auto c = fc::snf_bridge_coloring(s, d, bl, br, n);
  std::cout << "coloring mod " << n << ": " << coloring_line(c) << '\n';
  std::cout << "palette size " << fc::palette_size(c) << '\n';
  emit_json(o, fc::Json{{"p", p},
                        {"q", q},
                        {"bridge_left", s.bridge_left},
                        {"bridge_right", s.bridge_right},
                        {"diagram", fc::format_diagram(d)},
                        {"coloring", fc::to_json(c)}});
  return 0;
}

int cmd_torus(const Options& o) {
  const auto t = torus_params(o.torus_args);
  const auto d = fc::torus_diagram(t);
  std::cout << fc::format_braid(fc::torus_word(t)) << '\n';
  print_summary(d);
  fc::Json j{{"braid", fc::format_braid(fc::torus_word(t))}, {"crossings", d.crossing_count()}};
  if (t.family != fc::TorusFamily::even_even) {
    const auto c = fc::torus_theorem5_coloring(t);
    const auto r = fc::palette_report(c);
    std::cout << "coloring mod " << c.modulus << ": " << coloring_line(c) << '\n';
    std::cout << "histogram";
    for (const auto& [color, count] : r.histogram) std::cout << ' ' << color << ':' << count;
    std::cout << '\n';
    j["coloring"] = fc::to_json(c);
    j["palette"] = fc::to_json(r);
  }
  emit_json(o, j);
  return 0;
}

int cmd_spectrum(const Options& o) {
  const auto in = load(o.src);
  fc::Coloring start;
  std::int64_t p = 0;
  if (!o.coloring_path.empty()) {
    start = load_coloring(o);
    p = o.modulus.value_or(start.modulus);
  } else if (in.snf) {
    p = o.modulus.value_or(in.snf->p);
    start = fc::snf_bridge_coloring(*in.snf, in.diagram, 0, 1, p);
  } else {
    p = require_mod(o);
    auto c = fc::enumerate_nontrivial(in.diagram, p, cap_of(o)).next();
    if (!c) {
      std::cout << "no nontrivial " << p << "-coloring\n";
      return kExitFailure;
    }
    start = *c;
  }
  const auto trace = fc::realize_spectrum(in.diagram, start, p);
  std::cout << "sizes";
  for (auto s : trace.sizes()) std::cout << ' ' << s;
  std::cout << '\n';
  for (const auto& r : trace.records)
    std::cout << "  " << r.palette_size << " colors, " << r.diagram.crossing_count() << " crossings: "
              << coloring_line(r.coloring) << '\n';
  emit_json(o, fc::to_json(trace));
  return 0;
}

int cmd_search_full(const Options& o) {
  const auto in = load(o.src);
  const auto n = require_mod(o);
  const auto c = fc::search_full_palette(in.diagram, n, cap_of(o));
  if (c)
    std::cout << "found: " << coloring_line(*c) << '\n';
  else
    std::cout << "not found\n";
  emit_json(o, fc::Json{{"modulus", n}, {"found", c.has_value()}, {"coloring", c ? fc::to_json(*c) : fc::Json(nullptr)}});
  return 0;
}

int cmd_suite(const Options& o) {
  fc::SuiteBounds b{o.pmax, o.kmax, o.lmax, cap_of(o)};
  const auto report = fc::run_suite(o.suite, b);
  std::cout << fc::format_report(report);
  emit_json(o, fc::to_json(report));
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox colorings of link diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--json", o.json_path, "also write the result as JSON to this path");
  app.add_option("--cap", o.cap, "enumeration cap (default FOXCOLOR_CAP or 1000000)");

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&), bool source, bool mod) {
    auto* cmd = app.add_subcommand(name, help);
    if (source) add_source(cmd, o);
    if (mod) cmd->add_option("--mod", o.modulus, "modulus n");
    cmd->add_option("--json", o.json_path, "also write the result as JSON to this path");
    cmd->add_option("--cap", o.cap, "enumeration cap");
    commands.push_back({cmd, fn});
    return cmd;
  };

  sub("parse", "read a diagram, normalize it and check its embedding", cmd_parse, true, false);
  sub("det", "determinant", cmd_det, true, false);
  sub("color-count", "number of n-colorings", cmd_color_count, true, true);
  sub("enumerate", "list nontrivial n-colorings", cmd_enumerate, true, true)
      ->add_flag("--all", o.all, "include trivial colorings");
  sub("mincol", "fewest colors in a nontrivial n-coloring of this diagram", cmd_mincol, true, true);
  sub("palette", "palette and histogram of a coloring", cmd_palette, true, false)
      ->add_option("--coloring", o.coloring_path, "coloring JSON file")
      ->required();
  sub("kh", "whether distinct arcs carry distinct colors", cmd_kh, true, false)
      ->add_option("--coloring", o.coloring_path, "coloring JSON file")
      ->required();
  auto* snf = sub("snf", "Schubert normal form b(p,q) and its bridge coloring", cmd_snf, false, true);
  snf->add_option("pq", o.positional, "p/q")->required();
  snf->add_option("--color", o.bridge_colors, "bridge colors b_l b_r")->expected(2);
  sub("torus", "torus braid closure and its standard coloring", cmd_torus, false, false)
      ->add_option("params", o.torus_args, "family k l")
      ->expected(3)
      ->required();
  sub("spectrum", "add colors one at a time by type II moves", cmd_spectrum, true, true)
      ->add_option("--coloring", o.coloring_path, "starting coloring JSON file");
  sub("search-full", "search for a coloring using all n colors", cmd_search_full, true, true);
  auto* suite = sub("suite", "run an experiment suite", cmd_suite, false, false);
  suite->add_option("name", o.suite, "suite name")->required()->check(CLI::IsMember(fc::suite_names()));
  suite->add_option("--pmax", o.pmax, "largest p");
  suite->add_option("--kmax", o.kmax, "largest k");
  suite->add_option("--lmax", o.lmax, "largest l");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    for (const auto& [cmd, fn] : commands)
      if (cmd->parsed()) return fn(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fc::Obstruction& e) {
    std::cerr << "obstruction: " << e.what() << '\n';
    return kExitFailure;
  } catch (const fc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

// Command-line front end: diagrams in, reports out.
//
// Exit status: 0 success, 1 a check failed, 2 bad input, 3 crossing cap hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "foamlink/complex.hpp"
#include "foamlink/homology.hpp"
#include "foamlink/moves.hpp"
#include "foamlink/skein.hpp"

using nlohmann::ordered_json;
using namespace foamlink;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string theory = "simple";
  std::string k;
  std::vector<std::string> sectors;
  std::string variants = "all";
  int cap = kDefaultCrossingCap;
  std::string format = "table";
  // move / invariance
  std::string move;
  std::vector<std::string> edges;
  std::string crossings;
  bool under = false;
  std::string output;
};

struct CheckFailed : Error {
  using Error::Error;
};

BuildOptions build_options(const RunConfig& c) {
  BuildOptions o;
  o.cap = c.cap;
  if (c.theory == "k") {
    o.theory = Theory::K;
    if (!c.k.empty() && c.k != "inf") {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(c.k, &used);
      } catch (const std::exception&) {
      }
      if (v < 0 || used != c.k.size()) throw ParseError("--k expects a non-negative integer or 'inf'");
      o.k.k = v;
    }
  } else if (!c.k.empty()) {
    throw ParseError("--k is only meaningful with --theory k");
  }
  o.k.variants = c.variants == "reachable" ? OrientationVariants::Reachable : OrientationVariants::All;
  if (!c.sectors.empty()) o.sector_filter = std::set<std::string>(c.sectors.begin(), c.sectors.end());
  return o;
}

std::string theory_name(const RunConfig& c) {
  if (c.theory == "simple") return "simple";
  return "k=" + (c.k.empty() ? std::string("inf") : c.k);
}

std::string state_signs(const State& s) {
  std::string out;
  for (Smoothing x : s.assignment) out += x == Smoothing::Positive ? '+' : '-';
  return out;
}

ordered_json homology_json(const HomologyResult& h) {
  ordered_json groups = ordered_json::array();
  for (const auto& [key, g] : h.groups)
    groups.push_back({{"i", std::get<0>(key)},
                      {"j", std::get<1>(key)},
                      {"sector", std::get<2>(key)},
                      {"betti", g.betti},
                      {"torsion", g.torsion}});
  return groups;
}

void print_homology_table(std::ostream& os, const HomologyResult& h) {
  if (h.groups.empty()) os << "  (zero)\n";
  for (const auto& [key, g] : h.groups)
    os << "  i=" << std::get<0>(key) << " j=" << std::get<1>(key) << " s=" << std::get<2>(key) << "  "
       << g.str() << "\n";
}

/// Report accumulator; one entry per input file.
struct Report {
  std::string command;
  ordered_json results = ordered_json::array();
  std::ostringstream table;
  bool failed = false;
};

void cmd_validate(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream text;
    text << in.rdbuf();
    ordered_json issues = ordered_json::array();
    Diagram d;
    try {
      d = parse_diagram(text.str());
      for (const auto& i : validate(d).issues) issues.push_back({{"kind", i.kind}, {"message", i.message}});
    } catch (const ParseError& e) {
      issues.push_back({{"kind", "parse"}, {"message", e.what()}});
    }
    if (issues.empty()) {
      try {
        (void)ResolutionTable(d, c.cap);
      } catch (const UnrealizableEmbedding& e) {
        issues.push_back({{"kind", "unrealizable"}, {"message", e.what()}});
      }
    }
    const bool ok = issues.empty();
    r.failed |= !ok;
    r.results.push_back({{"input", path}, {"ok", ok}, {"issues", issues}});
    r.table << path << ": " << (ok ? "ok" : "INVALID") << "\n";
    for (const auto& i : issues)
      r.table << "  " << i["kind"].get<std::string>() << ": " << i["message"].get<std::string>() << "\n";
  }
}

void cmd_states(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const Diagram d = load_diagram(path);
    ordered_json states = ordered_json::array();
    r.table << path << "\n";
    for (const State& s : enumerate_states(d, c.cap)) {
      const Resolution res = resolve(d, s);
      ordered_json circles = ordered_json::array();
      r.table << "  " << state_signs(s) << "  i=" << s.i_grading() << " ";
      for (const auto& circ : res.circles) {
        ordered_json edges = ordered_json::array();
        for (const auto& de : circ.traversal) edges.push_back((de.dir < 0 ? "-" : "") + d.edges[de.edge].id);
        circles.push_back({{"id", circ.id}, {"class", circ.cls.rep().str()}, {"essential", circ.essential}, {"edges", edges}});
        r.table << " c" << circ.id << (circ.essential ? circ.cls.rep().str() : "(0)");
      }
      r.table << "\n";
      states.push_back({{"state", state_signs(s)}, {"i", s.i_grading()}, {"circles", circles}});
    }
    r.results.push_back({{"input", path}, {"states", states}});
  }
}

void cmd_complex(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const GradedComplex cx = build_complex(load_diagram(path), build_options(c));
    ordered_json blocks = ordered_json::array();
    r.table << path << " (" << theory_name(c) << ", " << cx.generator_count() << " generators)\n";
    for (const auto& [key, b] : cx.blocks) {
      ordered_json levels = ordered_json::object();
      r.table << "  s=" << b.sector << " j=" << b.j << ":";
      for (const auto& [i, gens] : b.levels) {
        levels[std::to_string(i)] = gens;
        r.table << " C" << i << "=" << gens.size();
      }
      ordered_json diffs = ordered_json::array();
      for (const auto& [i, m] : b.differential) {
        ordered_json entries = ordered_json::array();
        for (const auto& e : m.entries) entries.push_back({e.row, e.col, e.value});
        diffs.push_back({{"from", i}, {"rows", m.rows}, {"cols", m.cols}, {"entries", entries}});
      }
      r.table << "\n";
      blocks.push_back({{"sector", b.sector}, {"j", b.j}, {"levels", levels}, {"differential", diffs}});
    }
    r.results.push_back({{"input", path}, {"theory", theory_name(c)}, {"blocks", blocks}});
  }
}

void cmd_homology(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const HomologyResult h = homology(build_complex(load_diagram(path), build_options(c)));
    r.table << path << " (" << theory_name(c) << ")\n";
    print_homology_table(r.table, h);
    r.results.push_back({{"input", path}, {"theory", theory_name(c)}, {"groups", homology_json(h)}});
  }
}

void cmd_bracket(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const SkeinElement b = kauffman_bracket(load_diagram(path), c.cap);
    ordered_json terms = ordered_json::array();
    r.table << path << "\n";
    for (const auto& [key, p] : b.terms()) {
      terms.push_back({{"basis", multiset_str(key)}, {"poly", p.str()}});
      r.table << "  " << multiset_str(key) << ": " << p.str() << "\n";
    }
    r.results.push_back({{"input", path}, {"terms", terms}});
  }
}

void cmd_check_d2(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const D2Report d2 = check_d_squared(build_complex(load_diagram(path), build_options(c)));
    r.failed |= !d2.ok;
    r.table << (d2.ok ? "PASS " : "FAIL ") << path << " (" << theory_name(c) << ", " << d2.compositions
            << " compositions)\n";
    for (const auto& f : d2.failures) r.table << "  " << f << "\n";
    r.results.push_back({{"input", path},
                         {"theory", theory_name(c)},
                         {"ok", d2.ok},
                         {"compositions", d2.compositions},
                         {"failures", d2.failures}});
  }
}

/// Applies the configured move; also returns the expected (di, dj) shift.
std::pair<Diagram, std::pair<int, int>> apply_move(const RunConfig& c, const Diagram& d) {
  auto edge = [&](std::size_t k) {
    if (c.edges.size() <= k) throw ParseError("--move " + c.move + " needs " + std::to_string(k + 1) + " --edge");
    return d.edge_index(c.edges[k]);
  };
  if (c.move == "r1+") return {apply_r1(d, edge(0), KinkSign::Positive), {1, 3}};
  if (c.move == "r1-") return {apply_r1(d, edge(0), KinkSign::Negative), {-1, -3}};
  if (c.move == "r2") return {apply_r2(d, edge(0), edge(1), !c.under), {0, 0}};
  if (c.move == "r3") {
    std::vector<int> tri;
    std::stringstream ss(c.crossings);
    for (std::string id; std::getline(ss, id, ',');) tri.push_back(d.crossing_index(id));
    if (tri.size() != 3) throw ParseError("--move r3 needs --crossings with three ids");
    return {apply_r3(d, tri), {0, 0}};
  }
  throw ParseError("unknown move '" + c.move + "'");
}

void cmd_move(const RunConfig& c, Report& r) {
  if (c.inputs.size() != 1) throw ParseError("move takes exactly one input");
  const Diagram moved = apply_move(c, load_diagram(c.inputs[0])).first;
  const std::string text = serialize_diagram(moved);
  if (!c.output.empty()) {
    std::ofstream(c.output) << text;
    r.table << "wrote " << c.output << " (" << moved.crossing_count() << " crossings)\n";
    r.results.push_back({{"input", c.inputs[0]}, {"output", c.output}, {"crossings", moved.crossing_count()}});
  } else {
    r.table << text;
    r.results.push_back({{"input", c.inputs[0]}, {"diagram", ordered_json::parse(text)}});
  }
}

void cmd_invariance(const RunConfig& c, Report& r) {
  for (const auto& path : c.inputs) {
    const Diagram d = load_diagram(path);
    const auto [moved, shift] = apply_move(c, d);
    BuildOptions o = build_options(c);
    share_k_sectors(o, d, moved);
    const HomologyResult before = homology(build_complex(d, o));
    const HomologyResult after = homology(build_complex(moved, o));
    const auto diff = homology_diff(before.shifted(shift.first, shift.second), after);
    r.failed |= !diff.empty();
    r.table << (diff.empty() ? "PASS " : "FAIL ") << path << " " << c.move << " (" << theory_name(c)
            << ") shift (" << shift.first << ", " << shift.second << ")\n";
    for (const auto& line : diff) r.table << "  " << line << "\n";
    r.results.push_back({{"input", path},
                         {"move", c.move},
                         {"theory", theory_name(c)},
                         {"shift", {shift.first, shift.second}},
                         {"ok", diff.empty()},
                         {"diff", diff}});
  }
}

void add_common(CLI::App* sub, RunConfig& c, bool theory) {
  sub->add_option("inputs", c.inputs, "diagram files")->required()->check(CLI::ExistingFile);
  sub->add_option("--cap", c.cap, "crossing cap")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
  if (!theory) return;
  sub->add_option("--theory", c.theory, "simple or k")->check(CLI::IsMember({"simple", "k"}));
  sub->add_option("--k", c.k, "k for the k-theory: integer or inf");
  sub->add_option("--sector", c.sectors, "keep only these sector keys (repeatable)");
  sub->add_option("--orientation-variants", c.variants, "all or reachable")
      ->check(CLI::IsMember({"all", "reachable"}));
}

void add_move_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--move", c.move, "r1+, r1-, r2 or r3")->required()->check(CLI::IsMember({"r1+", "r1-", "r2", "r3"}));
  sub->add_option("--edge", c.edges, "edge id (twice for r2)");
  sub->add_option("--crossings", c.crossings, "comma-separated crossing ids for r3");
  sub->add_flag("--under", c.under, "r2: first edge passes under");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foam link homology of links in thickened surfaces"};
  app.require_subcommand(1);
  RunConfig c;
  using Handler = void (*)(const RunConfig&, Report&);
  const std::vector<std::tuple<std::string, std::string, Handler, bool>> commands = {
      {"validate", "check diagram files", cmd_validate, false},
      {"states", "list states and their circles", cmd_states, false},
      {"complex", "print the chain complex", cmd_complex, true},
      {"homology", "compute homology", cmd_homology, true},
      {"bracket", "Kauffman bracket in the skein module", cmd_bracket, false},
      {"check-d2", "verify that the differential squares to zero", cmd_check_d2, true},
      {"move", "apply a Reidemeister move and write the diagram", cmd_move, false},
      {"invariance", "compare homology before and after a move", cmd_invariance, true},
  };
  Handler chosen = nullptr;
  std::string chosen_name;
  for (const auto& [name, help, handler, theory] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, c, theory);
    if (name == "move" || name == "invariance") add_move_options(sub, c);
    if (name == "move") sub->add_option("-o,--output", c.output, "output path (stdout when absent)");
    sub->callback([&chosen, &chosen_name, h = handler, n = name] {
      chosen = h;
      chosen_name = n;
    });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report r;
  r.command = chosen_name;
  try {
    chosen(c, r);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (c.format == "json") {
    std::cout << ordered_json{{"schema", 1}, {"command", r.command}, {"ok", !r.failed}, {"results", r.results}}.dump(2)
              << "\n";
  } else {
    std::cout << r.table.str();
  }
  return r.failed ? 1 : 0;
}

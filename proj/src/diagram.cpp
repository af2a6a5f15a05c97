#include "foamlink/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace foamlink {

using nlohmann::json;

int Diagram::find_edge(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  return -1;
}

int Diagram::find_crossing(const std::string& id) const {
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].id == id) return static_cast<int>(i);
  return -1;
}

int Diagram::edge_index(const std::string& id) const {
  const int i = find_edge(id);
  if (i < 0) throw LookupError("unknown edge '" + id + "'");
  return i;
}

int Diagram::crossing_index(const std::string& id) const {
  const int i = find_crossing(id);
  if (i < 0) throw LookupError("unknown crossing '" + id + "'");
  return i;
}

std::vector<int> Diagram::order_positions() const {
  std::vector<int> pos(crossings.size(), 0);
  for (std::size_t k = 0; k < crossing_order.size(); ++k)
    pos[static_cast<std::size_t>(crossing_order[k])] = static_cast<int>(k);
  return pos;
}

namespace {

std::string fresh_id(const std::string& prefix, const std::set<std::string>& used) {
  for (int k = 0;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!used.count(id)) return id;
  }
}

}  // namespace

std::string Diagram::fresh_edge_id() const {
  std::set<std::string> used;
  for (const auto& e : edges) used.insert(e.id);
  return fresh_id("e", used);
}

std::string Diagram::fresh_crossing_id() const {
  std::set<std::string> used;
  for (const auto& c : crossings) used.insert(c.id);
  return fresh_id("x", used);
}

Incidence::Incidence(const Diagram& d) : table_(d.crossings.size()) {
  auto place = [&](const SlotRef& r, int edge, bool at_from) {
    if (r.crossing < 0 || r.crossing >= d.crossing_count() || r.slot < 0 || r.slot > 3)
      throw ParseError("edge '" + d.edges[static_cast<std::size_t>(edge)].id + "' names a missing slot");
    auto& occ = table_[static_cast<std::size_t>(r.crossing)][static_cast<std::size_t>(r.slot)];
    if (occ.edge >= 0)
      throw ParseError("slot " + std::to_string(r.slot) + " of crossing '" +
                       d.crossings[static_cast<std::size_t>(r.crossing)].id + "' is used twice");
    occ = {edge, at_from};
  };
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (d.edges[e].from) place(*d.edges[e].from, static_cast<int>(e), true);
    if (d.edges[e].to) place(*d.edges[e].to, static_cast<int>(e), false);
  }
  for (std::size_t c = 0; c < table_.size(); ++c)
    for (int s = 0; s < 4; ++s)
      if (table_[c][static_cast<std::size_t>(s)].edge < 0)
        throw ParseError("slot " + std::to_string(s) + " of crossing '" + d.crossings[c].id + "' is dangling");
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
}

ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  auto issue = [&](std::string kind, std::string msg) { rep.issues.push_back({std::move(kind), std::move(msg)}); };

  const int rank = d.surface.h1_rank();
  std::set<std::string> ids;
  for (const auto& e : d.edges) {
    if (!ids.insert(e.id).second) issue("duplicate-id", "edge id '" + e.id + "' repeated");
    if (static_cast<int>(e.label.size()) != rank)
      issue("label-length", "edge '" + e.id + "' label " + e.label.str() + " has length " +
                                std::to_string(e.label.size()) + ", surface " + d.surface.describe() +
                                " needs " + std::to_string(rank));
    if (e.from.has_value() != e.to.has_value())
      issue("dangling-slot", "edge '" + e.id + "' has only one endpoint");
  }
  ids.clear();
  for (const auto& c : d.crossings)
    if (!ids.insert(c.id).second) issue("duplicate-id", "crossing id '" + c.id + "' repeated");

  // Slot occupancy from edge endpoints.
  std::vector<std::array<int, 4>> count(d.crossings.size(), {0, 0, 0, 0});
  std::vector<std::array<int, 4>> who(d.crossings.size(), {-1, -1, -1, -1});
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (const auto& end : {d.edges[e].from, d.edges[e].to}) {
      if (!end) continue;
      if (end->crossing < 0 || end->crossing >= d.crossing_count() || end->slot < 0 || end->slot > 3) {
        issue("dangling-slot", "edge '" + d.edges[e].id + "' names a missing slot");
        continue;
      }
      auto c = static_cast<std::size_t>(end->crossing);
      auto s = static_cast<std::size_t>(end->slot);
      ++count[c][s];
      who[c][s] = static_cast<int>(e);
    }
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    int used = 0;
    for (std::size_t s = 0; s < 4; ++s) {
      if (count[c][s] > 1)
        issue("slot-reuse", "slot " + std::to_string(s) + " of crossing '" + d.crossings[c].id + "' is used " +
                                std::to_string(count[c][s]) + " times");
      if (count[c][s] == 0)
        issue("dangling-slot", "slot " + std::to_string(s) + " of crossing '" + d.crossings[c].id + "' is empty");
      used += count[c][s] > 0 ? 1 : 0;
      const int declared = d.crossings[c].declared[s];
      if (declared >= 0 && count[c][s] == 1 && declared != who[c][s])
        issue("slot-mismatch", "crossing '" + d.crossings[c].id + "' declares edge '" +
                                   d.edges[static_cast<std::size_t>(declared)].id + "' at slot " +
                                   std::to_string(s) + " but another edge ends there");
    }
    if (used != 4)
      issue("four-valence", "crossing '" + d.crossings[c].id + "' has " + std::to_string(used) + " occupied slots");
  }

  // Strands run straight through crossings: an edge arriving at slot s is
  // continued by the edge leaving slot s+2.
  if (rep.ok()) {
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      if (!d.edges[e].to) continue;
      const SlotRef r = *d.edges[e].to;
      const int opposite = (r.slot + 2) % 4;
      const int next = who[static_cast<std::size_t>(r.crossing)][static_cast<std::size_t>(opposite)];
      const auto& ne = d.edges[static_cast<std::size_t>(next)];
      if (!(ne.from && ne.from->crossing == r.crossing && ne.from->slot == opposite))
        issue("strand-direction", "edge '" + d.edges[e].id + "' enters crossing '" +
                                      d.crossings[static_cast<std::size_t>(r.crossing)].id +
                                      "' but the opposite slot does not start an edge");
    }
  }

  // crossing_order must be a permutation.
  std::vector<int> seen(d.crossings.size(), 0);
  bool perm = d.crossing_order.size() == d.crossings.size();
  for (int c : d.crossing_order) {
    if (c < 0 || c >= d.crossing_count() || seen[static_cast<std::size_t>(c)]++) perm = false;
  }
  if (!perm) issue("crossing-order", "crossing_order is not a permutation of the crossings");
  return rep;
}

void require_valid(const Diagram& d) {
  const auto rep = validate(d);
  if (rep.ok()) return;
  std::string msg = "invalid diagram:";
  for (const auto& i : rep.issues) msg += "\n  [" + i.kind + "] " + i.message;
  throw ParseError(msg);
}

std::vector<std::vector<int>> strands(const Diagram& d) {
  const Incidence inc(d);
  std::vector<bool> done(d.edges.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < d.edges.size(); ++start) {
    if (done[start]) continue;
    std::vector<int> strand;
    int e = static_cast<int>(start);
    while (!done[static_cast<std::size_t>(e)]) {
      done[static_cast<std::size_t>(e)] = true;
      strand.push_back(e);
      const auto& edge = d.edges[static_cast<std::size_t>(e)];
      if (edge.is_loop()) break;
      const SlotRef r = *edge.to;
      e = inc.at(r.crossing, (r.slot + 2) % 4).edge;
    }
    out.push_back(std::move(strand));
  }
  return out;
}

std::vector<ClassVector> strand_classes(const Diagram& d) {
  std::vector<ClassVector> out;
  for (const auto& s : strands(d)) {
    ClassVector sum = 0 * d.edges[static_cast<std::size_t>(s.front())].label;
    for (int e : s) sum += d.edges[static_cast<std::size_t>(e)].label;
    out.push_back(std::move(sum));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

SurfaceSpec parse_surface(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("surface: expected an object with a string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "planar") {
    if (!j.contains("punctures") || !j["punctures"].is_number_integer())
      throw ParseError("surface: planar needs integer 'punctures'");
    const int n = j["punctures"].get<int>();
    if (n < 0) throw ParseError("surface: punctures must be >= 0");
    return SurfaceSpec::planar(n);
  }
  if (kind == "annulus") return SurfaceSpec::annulus();
  if (kind == "torus") return SurfaceSpec::torus();
  throw ParseError("surface: unknown kind '" + kind + "'");
}

std::optional<SlotRef> parse_end(const json& j, const std::map<std::string, int>& crossing_ids,
                                 const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw ParseError(where + ": endpoint must be null or [crossing_id, slot]");
  const auto it = crossing_ids.find(j[0].get<std::string>());
  if (it == crossing_ids.end()) throw ParseError(where + ": unknown crossing '" + j[0].get<std::string>() + "'");
  const int slot = j[1].get<int>();
  if (slot < 0 || slot > 3) throw ParseError(where + ": slot out of range");
  return SlotRef{it->second, slot};
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("diagram text: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("diagram: top level must be an object");
  for (const char* key : {"surface", "crossings", "edges"})
    if (!j.contains(key)) throw ParseError(std::string("diagram: missing field '") + key + "'");

  Diagram d;
  d.surface = parse_surface(j["surface"]);

  if (!j["crossings"].is_array()) throw ParseError("crossings: expected a list");
  std::map<std::string, int> crossing_ids;
  for (std::size_t k = 0; k < j["crossings"].size(); ++k) {
    const auto& cj = j["crossings"][k];
    const std::string where = "crossings[" + std::to_string(k) + "]";
    if (!cj.is_object() || !cj.contains("id") || !cj["id"].is_string())
      throw ParseError(where + ": expected an object with a string 'id'");
    Crossing c;
    c.id = cj["id"].get<std::string>();
    crossing_ids.emplace(c.id, static_cast<int>(k));
    d.crossings.push_back(std::move(c));
  }

  if (!j["edges"].is_array()) throw ParseError("edges: expected a list");
  std::map<std::string, int> edge_ids;
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    const auto& ej = j["edges"][k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!ej.is_object() || !ej.contains("id") || !ej["id"].is_string())
      throw ParseError(where + ": expected an object with a string 'id'");
    Edge e;
    e.id = ej["id"].get<std::string>();
    e.from = parse_end(ej.value("from", json()), crossing_ids, where + ".from");
    e.to = parse_end(ej.value("to", json()), crossing_ids, where + ".to");
    if (!ej.contains("label") || !ej["label"].is_array()) throw ParseError(where + ": missing 'label' list");
    std::vector<int> label;
    for (const auto& x : ej["label"]) {
      if (!x.is_number_integer()) throw ParseError(where + ": label entries must be integers");
      label.push_back(x.get<int>());
    }
    e.label = ClassVector(std::move(label));
    edge_ids.emplace(e.id, static_cast<int>(k));
    d.edges.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < j["crossings"].size(); ++k) {
    const auto& cj = j["crossings"][k];
    if (!cj.contains("slots")) continue;
    const std::string where = "crossings[" + std::to_string(k) + "].slots";
    if (!cj["slots"].is_array() || cj["slots"].size() != 4) throw ParseError(where + ": expected 4 edge ids");
    for (std::size_t s = 0; s < 4; ++s) {
      const auto& sj = cj["slots"][s];
      if (sj.is_null()) continue;
      if (!sj.is_string()) throw ParseError(where + ": expected edge id strings");
      const auto it = edge_ids.find(sj.get<std::string>());
      if (it == edge_ids.end()) throw ParseError(where + ": unknown edge '" + sj.get<std::string>() + "'");
      d.crossings[k].declared[s] = it->second;
    }
  }

  if (j.contains("crossing_order")) {
    if (!j["crossing_order"].is_array()) throw ParseError("crossing_order: expected a list");
    d.explicit_order = true;
    for (const auto& x : j["crossing_order"]) {
      if (!x.is_string()) throw ParseError("crossing_order: expected crossing id strings");
      const auto it = crossing_ids.find(x.get<std::string>());
      if (it == crossing_ids.end()) throw ParseError("crossing_order: unknown crossing '" + x.get<std::string>() + "'");
      d.crossing_order.push_back(it->second);
    }
  } else {
    for (int c = 0; c < d.crossing_count(); ++c) d.crossing_order.push_back(c);
  }
  return d;
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_diagram(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

std::string quote(const std::string& s) { return json(s).dump(); }

std::string end_text(const Diagram& d, const std::optional<SlotRef>& r) {
  if (!r) return "null";
  return "[" + quote(d.crossings[static_cast<std::size_t>(r->crossing)].id) + ", " + std::to_string(r->slot) + "]";
}

}  // namespace

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "{\n  \"surface\": ";
  switch (d.surface.kind) {
    case SurfaceKind::Planar: os << "{\"kind\": \"planar\", \"punctures\": " << d.surface.punctures << "}"; break;
    case SurfaceKind::Annulus: os << "{\"kind\": \"annulus\"}"; break;
    case SurfaceKind::Torus: os << "{\"kind\": \"torus\"}"; break;
  }

  // Slot table from edge endpoints (falls back to declarations for broken input).
  std::vector<std::array<int, 4>> slots(d.crossings.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) slots[c] = d.crossings[c].declared;
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    for (const auto& end : {d.edges[e].from, d.edges[e].to})
      if (end && end->crossing >= 0 && end->crossing < d.crossing_count() && end->slot >= 0 && end->slot < 4)
        slots[static_cast<std::size_t>(end->crossing)][static_cast<std::size_t>(end->slot)] = static_cast<int>(e);

  os << ",\n  \"crossings\": [";
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    os << (c ? ",\n" : "\n") << "    {\"id\": " << quote(d.crossings[c].id) << ", \"slots\": [";
    for (std::size_t s = 0; s < 4; ++s) {
      const int e = slots[c][s];
      os << (s ? ", " : "") << (e >= 0 ? quote(d.edges[static_cast<std::size_t>(e)].id) : "null");
    }
    os << "]}";
  }
  os << (d.crossings.empty() ? "]" : "\n  ]");

  os << ",\n  \"edges\": [";
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    os << (e ? ",\n" : "\n") << "    {\"id\": " << quote(edge.id) << ", \"from\": " << end_text(d, edge.from)
       << ", \"to\": " << end_text(d, edge.to) << ", \"label\": [";
    for (std::size_t k = 0; k < edge.label.size(); ++k) os << (k ? ", " : "") << edge.label[k];
    os << "]}";
  }
  os << (d.edges.empty() ? "]" : "\n  ]");

  if (d.explicit_order) {
    os << ",\n  \"crossing_order\": [";
    for (std::size_t k = 0; k < d.crossing_order.size(); ++k)
      os << (k ? ", " : "") << quote(d.crossings[static_cast<std::size_t>(d.crossing_order[k])].id);
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace foamlink

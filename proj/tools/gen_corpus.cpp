// Regenerates the bundled corpus: foamlink_gen_corpus <output-dir>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "foamlink/diagram.hpp"
#include "foamlink/moves.hpp"

using namespace foamlink;

namespace {

ClassVector zeros(const SurfaceSpec& f) { return ClassVector(std::vector<int>(static_cast<std::size_t>(f.h1_rank()), 0)); }

Diagram loops(const SurfaceSpec& f, const std::vector<ClassVector>& labels) {
  Diagram d;
  d.surface = f;
  for (const auto& l : labels) d.edges.push_back({d.fresh_edge_id(), std::nullopt, std::nullopt, l});
  return d;
}

// dir_a/dir_b: directions in which a and b run with the finger's face on
// their right.
Diagram clasp(const Diagram& d, int a, int dir_a, int b, int dir_b, const ClassVector& w) {
  Diagram r = apply_r2_explicit(d, a, dir_a, b, dir_b, w, true);
  return change_crossing(r, r.crossing_count() - 1);
}

// Closure of a braid word (+i / -i, strands numbered from 1). Each closing arc
// carries `closing` as its label.
Diagram braid_closure(const SurfaceSpec& f, int strands, const std::vector<int>& word, const ClassVector& closing) {
  Diagram d;
  d.surface = f;
  const ClassVector zero = zeros(f);
  std::vector<int> first(static_cast<std::size_t>(strands)), open(static_cast<std::size_t>(strands));
  for (int s = 0; s < strands; ++s) {
    d.edges.push_back({d.fresh_edge_id(), std::nullopt, std::nullopt, closing});
    first[static_cast<std::size_t>(s)] = open[static_cast<std::size_t>(s)] = s;
  }
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    const int x = d.crossing_count();
    d.crossings.push_back({d.fresh_crossing_id(), {-1, -1, -1, -1}});
    d.crossing_order.push_back(x);
    // Counterclockwise corners: bottom-left, bottom-right, top-right, top-left.
    const int bl = letter > 0 ? 0 : 3, br = letter > 0 ? 1 : 0, tr = letter > 0 ? 2 : 1, tl = letter > 0 ? 3 : 2;
    auto& left = d.edges[static_cast<std::size_t>(open[static_cast<std::size_t>(i)])];
    left.to = SlotRef{x, bl};
    auto& right = d.edges[static_cast<std::size_t>(open[static_cast<std::size_t>(i + 1)])];
    right.to = SlotRef{x, br};
    // bottom-left continues to top-right, bottom-right to top-left.
    d.edges.push_back({d.fresh_edge_id(), SlotRef{x, tr}, std::nullopt, zero});
    open[static_cast<std::size_t>(i + 1)] = static_cast<int>(d.edges.size()) - 1;
    d.edges.push_back({d.fresh_edge_id(), SlotRef{x, tl}, std::nullopt, zero});
    open[static_cast<std::size_t>(i)] = static_cast<int>(d.edges.size()) - 1;
  }
  // Close: the last edge at each position takes over the first edge's end.
  std::vector<bool> drop(d.edges.size(), false);
  for (int s = 0; s < strands; ++s) {
    const int f0 = first[static_cast<std::size_t>(s)], last = open[static_cast<std::size_t>(s)];
    if (f0 == last) continue;
    auto& head = d.edges[static_cast<std::size_t>(f0)];
    head.from = d.edges[static_cast<std::size_t>(last)].from;
    drop[static_cast<std::size_t>(last)] = true;
  }
  Diagram out = d;
  out.edges.clear();
  for (std::size_t k = 0; k < d.edges.size(); ++k)
    if (!drop[k]) out.edges.push_back(d.edges[k]);
  for (std::size_t k = 0; k < out.edges.size(); ++k) out.edges[k].id = "e" + std::to_string(k);
  return out;
}

// Planar diagram code: X[a,b,c,d] with a the incoming under-edge, slots
// counterclockwise. Over-strand directions are inferred from edge continuity.
Diagram from_pd(const std::vector<std::array<int, 4>>& pd) {
  Diagram d;
  d.surface = SurfaceSpec::planar(0);
  std::map<int, int> edge_of;
  for (const auto& x : pd)
    for (int e : x)
      if (!edge_of.count(e)) {
        edge_of[e] = static_cast<int>(d.edges.size());
        d.edges.push_back({"e" + std::to_string(e), std::nullopt, std::nullopt, ClassVector{}});
      }
  for (std::size_t c = 0; c < pd.size(); ++c) {
    d.crossings.push_back({"x" + std::to_string(c), {-1, -1, -1, -1}});
    d.crossing_order.push_back(static_cast<int>(c));
  }
  std::vector<int> over_in(pd.size(), -1);  // slot where the over-strand enters
  for (std::size_t c = 0; c < pd.size(); ++c) {
    d.edges[static_cast<std::size_t>(edge_of[pd[c][0]])].to = SlotRef{static_cast<int>(c), 0};
    d.edges[static_cast<std::size_t>(edge_of[pd[c][2]])].from = SlotRef{static_cast<int>(c), 2};
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < pd.size(); ++c) {
      if (over_in[c] >= 0) continue;
      for (int s : {1, 3}) {
        const auto& e = d.edges[static_cast<std::size_t>(edge_of[pd[c][static_cast<std::size_t>(s)]])];
        const int other = s == 1 ? 3 : 1;
        if (e.from && !e.to) over_in[c] = s;
        else if (e.to && !e.from) over_in[c] = other;
        else continue;
        break;
      }
      if (over_in[c] < 0) continue;
      const int in = over_in[c], out = (in + 2) % 4;
      d.edges[static_cast<std::size_t>(edge_of[pd[c][static_cast<std::size_t>(in)]])].to = SlotRef{static_cast<int>(c), in};
      d.edges[static_cast<std::size_t>(edge_of[pd[c][static_cast<std::size_t>(out)]])].from = SlotRef{static_cast<int>(c), out};
      progress = true;
    }
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: foamlink_gen_corpus <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::map<std::string, Diagram> corpus;
  const auto A = SurfaceSpec::annulus();
  const auto P2 = SurfaceSpec::planar(2);
  const auto T = SurfaceSpec::torus();

  corpus["unknot_planar0"] = loops(SurfaceSpec::planar(0), {ClassVector{}});
  corpus["trivial_unknot"] = loops(P2, {ClassVector{0, 0}});
  corpus["annulus_core"] = loops(A, {ClassVector{1}});
  corpus["annulus_core_kink_pos"] = apply_r1(corpus["annulus_core"], 0, KinkSign::Positive);
  corpus["annulus_core_kink_neg"] = apply_r1(corpus["annulus_core"], 0, KinkSign::Negative);
  corpus["annulus_core_two_kinks"] = apply_r1(corpus["annulus_core_kink_pos"], 1, KinkSign::Positive);
  const Diagram two_cores = loops(A, {ClassVector{1}, ClassVector{1}});
  corpus["annulus_two_cores_r2"] = apply_r2_explicit(two_cores, 0, +1, 1, -1, ClassVector{0}, true);
  corpus["annulus_two_cores_clasp"] = clasp(two_cores, 0, +1, 1, -1, ClassVector{0});
  corpus["annulus_core_trivial_clasp"] = clasp(loops(A, {ClassVector{1}, ClassVector{0}}), 1, +1, 0, +1, ClassVector{0});
  corpus["annulus_braid_s1s1"] = braid_closure(A, 2, {1, 1}, ClassVector{1});
  corpus["annulus_braid_trefoil"] = braid_closure(A, 2, {1, 1, 1}, ClassVector{1});
  corpus["annulus_braid_s1s2s1"] = braid_closure(A, 3, {1, 2, 1}, ClassVector{1});
  corpus["annulus_braid_figure8"] = braid_closure(A, 3, {1, -2, 1, -2}, ClassVector{1});
  corpus["planar2_pair_clasp"] = clasp(loops(P2, {ClassVector{1, 0}, ClassVector{0, 1}}), 0, +1, 1, +1, ClassVector{0, 0});
  corpus["planar2_nested_clasp"] = clasp(loops(P2, {ClassVector{1, 1}, ClassVector{1, 0}}), 0, -1, 1, +1, ClassVector{0, 0});
  corpus["planar2_pair_clasp_kink"] = apply_r1(corpus["planar2_pair_clasp"], 0, KinkSign::Positive);
  corpus["planar2_three_curves"] =
      clasp(clasp(loops(P2, {ClassVector{1, 1}, ClassVector{1, 0}, ClassVector{0, 1}}), 0, -1, 1, +1, ClassVector{0, 0}), 0, -1, 2, +1,
            ClassVector{0, 0});
  corpus["torus_10"] = loops(T, {ClassVector{1, 0}});
  corpus["torus_10_kink"] = apply_r1(corpus["torus_10"], 0, KinkSign::Positive);
  corpus["torus_11_two_kinks"] =
      apply_r1(apply_r1(loops(T, {ClassVector{1, 1}}), 0, KinkSign::Positive), 0, KinkSign::Negative);
  corpus["torus_two_10_clasp"] = clasp(loops(T, {ClassVector{1, 0}, ClassVector{1, 0}}), 0, +1, 1, -1, ClassVector{0, 0});
  corpus["torus_10_01_crossing"] = [&] {
    Diagram d;
    d.surface = T;
    d.crossings.push_back({"x0", {-1, -1, -1, -1}});
    d.crossing_order = {0};
    d.edges.push_back({"e0", SlotRef{0, 2}, SlotRef{0, 0}, ClassVector{1, 0}});
    d.edges.push_back({"e1", SlotRef{0, 3}, SlotRef{0, 1}, ClassVector{0, 1}});
    return d;
  }();
  corpus["trefoil"] = from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
  corpus["hopf"] = from_pd({{4, 1, 3, 2}, {2, 3, 1, 4}});
  corpus["figure8"] = from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
  corpus["planar0_braid_s1s2s1"] = braid_closure(SurfaceSpec::planar(0), 3, {1, 2, 1}, ClassVector{});

  int bad = 0;
  for (const auto& [name, d] : corpus) {
    const auto rep = validate(d);
    if (!rep.ok()) {
      ++bad;
      std::cerr << name << ": " << rep.issues.front().kind << ": " << rep.issues.front().message << "\n";
      continue;
    }
    std::ofstream(dir + "/" + name + ".json") << serialize_diagram(d);
  }
  std::cout << corpus.size() - static_cast<std::size_t>(bad) << " diagrams written\n";
  return bad ? 1 : 0;
}

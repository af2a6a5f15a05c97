#include "foamlink/moves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace foamlink {

namespace {

void clear_declared(Diagram& d) {
  for (auto& c : d.crossings) c.declared = {-1, -1, -1, -1};
}

ClassVector zero_class(const Diagram& d) { return ClassVector(std::vector<int>(static_cast<std::size_t>(d.surface.h1_rank()), 0)); }

int add_crossing(Diagram& d) {
  Crossing c;
  c.id = d.fresh_crossing_id();
  d.crossings.push_back(c);
  const int index = d.crossing_count() - 1;
  d.crossing_order.push_back(index);
  return index;
}

int add_edge(Diagram& d, std::optional<SlotRef> from, std::optional<SlotRef> to, ClassVector label) {
  Edge e;
  e.id = d.fresh_edge_id();
  e.from = from;
  e.to = to;
  e.label = std::move(label);
  d.edges.push_back(std::move(e));
  return static_cast<int>(d.edges.size()) - 1;
}

void check_edge(const Diagram& d, int e) {
  if (e < 0 || e >= static_cast<int>(d.edges.size())) throw LookupError("edge index out of range");
}

void flip_edge(Edge& e) {
  std::swap(e.from, e.to);
  e.label = -e.label;
}

// Re-orients edges so every strand runs straight through crossings.
void orient_strands(Diagram& d) {
  const Incidence inc(d);
  std::vector<bool> seen(d.edges.size(), false);
  for (std::size_t start = 0; start < d.edges.size(); ++start) {
    if (seen[start]) continue;
    std::size_t e = start;
    while (!seen[e]) {
      seen[e] = true;
      if (d.edges[e].is_loop()) break;
      const SlotRef r = *d.edges[e].to;
      const int opposite = (r.slot + 2) % 4;
      const SlotOccupant occ = inc.at(r.crossing, opposite);
      const auto next = static_cast<std::size_t>(occ.edge);
      if (!seen[next] && !occ.at_from) flip_edge(d.edges[next]);
      e = next;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// R1

Diagram apply_r1(const Diagram& d, int edge, KinkSign sign) {
  check_edge(d, edge);
  Diagram out = d;
  clear_declared(out);
  const int x = add_crossing(out);
  const auto e = static_cast<std::size_t>(edge);
  const Edge original = out.edges[e];

  // The strand enters slot 0 and leaves slot 2, runs around the loop, then
  // passes through the other strand of the crossing.
  const int loop_end = sign == KinkSign::Positive ? 3 : 1;
  const int exit_slot = (loop_end + 2) % 4;
  add_edge(out, SlotRef{x, 2}, SlotRef{x, loop_end}, zero_class(d));
  if (original.is_loop()) {
    out.edges[e].from = SlotRef{x, exit_slot};
    out.edges[e].to = SlotRef{x, 0};
  } else {
    out.edges[e].to = SlotRef{x, 0};
    add_edge(out, SlotRef{x, exit_slot}, original.to, zero_class(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Face walks and R2

std::vector<FaceWalk> face_walks(const Diagram& d) {
  require_valid(d);
  const Incidence inc(d);
  auto next = [&](DirectedEdge de) -> DirectedEdge {
    const auto& edge = d.edges[static_cast<std::size_t>(de.edge)];
    if (edge.is_loop()) return de;
    const SlotRef arrive = de.dir > 0 ? *edge.to : *edge.from;
    const SlotOccupant& occ = inc.at(arrive.crossing, (arrive.slot + 1) % 4);
    return {occ.edge, occ.at_from ? +1 : -1};
  };
  std::set<std::pair<int, int>> used;
  std::vector<FaceWalk> walks;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    for (int dir : {+1, -1}) {
      if (used.count({e, dir})) continue;
      FaceWalk walk;
      DirectedEdge cur{e, dir};
      while (!used.count({cur.edge, cur.dir})) {
        used.insert({cur.edge, cur.dir});
        walk.push_back(cur);
        cur = next(cur);
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

Diagram apply_r2_explicit(const Diagram& d, int a, int dir_a, int b, int dir_b, const ClassVector& finger_label,
                          bool a_over) {
  check_edge(d, a);
  check_edge(d, b);
  if (a == b) throw MoveNotApplicable("R2 needs two distinct edges");
  if (std::abs(dir_a) != 1 || std::abs(dir_b) != 1) throw DomainError("R2 directions must be +1 or -1");
  check_class_length(finger_label, d.surface);

  Diagram out = d;
  clear_declared(out);
  const Edge ea = d.edges[static_cast<std::size_t>(a)];
  const Edge eb = d.edges[static_cast<std::size_t>(b)];

  // Local picture at b: the face walk runs east along b with the face to the
  // south; the finger comes up from the south and crosses b at a western
  // crossing (outer finger strand) and an eastern one (inner finger strand).
  const int xw = add_crossing(out);
  const int xe = add_crossing(out);
  enum Dir { East = 0, North = 1, West = 2, South = 3 };
  auto slot = [&](Dir dir) { return a_over ? static_cast<int>(dir) : (static_cast<int>(dir) + 3) % 4; };
  auto at = [&](int x, Dir dir) { return SlotRef{x, slot(dir)}; };

  const ClassVector zero = zero_class(d);

  // Finger: e1 keeps a's id, runs out to b; e2 is the tip; e3 returns.
  SlotRef e1_to{}, e2_from{}, e2_to{}, e3_from{};
  if (dir_a > 0) {
    e1_to = at(xe, South), e2_from = at(xe, North), e2_to = at(xw, North), e3_from = at(xw, South);
  } else {
    e1_to = at(xw, South), e2_from = at(xw, North), e2_to = at(xe, North), e3_from = at(xe, South);
  }
  auto& a_edge = out.edges[static_cast<std::size_t>(a)];
  if (ea.is_loop()) {
    a_edge.from = e3_from;
    a_edge.to = e1_to;
    a_edge.label = ea.label;
  } else {
    a_edge.to = e1_to;
    a_edge.label = ea.label + finger_label;
  }
  add_edge(out, e2_from, e2_to, zero);
  if (!ea.is_loop()) add_edge(out, e3_from, ea.to, -finger_label);

  // b is cut twice.
  SlotRef f1_to{}, f2_from{}, f2_to{}, f3_from{};
  if (dir_b > 0) {
    f1_to = at(xw, West), f2_from = at(xw, East), f2_to = at(xe, West), f3_from = at(xe, East);
  } else {
    f1_to = at(xe, East), f2_from = at(xe, West), f2_to = at(xw, East), f3_from = at(xw, West);
  }
  auto& b_edge = out.edges[static_cast<std::size_t>(b)];
  if (eb.is_loop()) {
    b_edge.from = f3_from;
    b_edge.to = f1_to;
  } else {
    b_edge.to = f1_to;
  }
  add_edge(out, f2_from, f2_to, zero);
  if (!eb.is_loop()) add_edge(out, f3_from, eb.to, zero);
  return out;
}

namespace {

struct FaceHit {
  int walk = -1;
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
};

std::optional<FaceHit> find_common_face(const std::vector<FaceWalk>& walks, int a, int b) {
  for (std::size_t w = 0; w < walks.size(); ++w) {
    const auto& walk = walks[w];
    std::optional<std::size_t> pa;
    for (std::size_t k = 0; k < walk.size(); ++k)
      if (walk[k].edge == a) {
        pa = k;
        break;
      }
    if (!pa) continue;
    for (std::size_t step = 1; step < walk.size(); ++step) {
      const std::size_t k = (*pa + step) % walk.size();
      if (walk[k].edge == b) return FaceHit{static_cast<int>(w), *pa, k};
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram apply_r2(const Diagram& d, int a, int b, bool a_over) {
  check_edge(d, a);
  check_edge(d, b);
  if (a == b) throw MoveNotApplicable("R2 needs two distinct edges");
  const auto walks = face_walks(d);
  const auto hit = find_common_face(walks, a, b);
  if (!hit)
    throw MoveNotApplicable("edges '" + d.edges[static_cast<std::size_t>(a)].id + "' and '" +
                            d.edges[static_cast<std::size_t>(b)].id + "' do not share a face");
  const auto& walk = walks[static_cast<std::size_t>(hit->walk)];
  const DirectedEdge da = walk[hit->pos_a];
  const DirectedEdge db = walk[hit->pos_b];

  // Labels sit at the start of each edge, so the finger's path from the middle
  // of a to the middle of b picks up a's label only when a runs backward along
  // the walk and b's label only when b runs forward.
  ClassVector w = zero_class(d);
  if (da.dir < 0) w += -d.edges[static_cast<std::size_t>(a)].label;
  for (std::size_t k = (hit->pos_a + 1) % walk.size(); k != hit->pos_b; k = (k + 1) % walk.size())
    w += walk[k].dir * d.edges[static_cast<std::size_t>(walk[k].edge)].label;
  if (db.dir > 0) w += d.edges[static_cast<std::size_t>(b)].label;
  return apply_r2_explicit(d, a, da.dir, b, db.dir, w, a_over);
}

std::vector<std::pair<int, int>> r2_candidates(const Diagram& d) {
  const auto walks = face_walks(d);
  std::set<std::pair<int, int>> pairs;
  for (const auto& walk : walks)
    for (const auto& x : walk)
      for (const auto& y : walk)
        if (x.edge < y.edge) pairs.insert({x.edge, y.edge});
  return {pairs.begin(), pairs.end()};
}

// ---------------------------------------------------------------------------
// R3 via a local geometric model: six boundary points on a circle, strand i
// joining points i and i+3, with strand 2 pushed to one side or the other of
// the crossing of strands 0 and 1.

namespace {

struct ModelCrossing {
  int over = -1;
  int under = -1;
};

struct ModelStrandPass {
  int crossing = -1;
  int in_slot = -1;  // slot on the side of the strand's start point
};

struct Model {
  std::array<ModelCrossing, 3> crossings;           // indexed by the pair's missing strand
  std::array<std::array<ModelStrandPass, 2>, 3> passes;  // per strand, in order from its start
  std::array<SlotRef, 6> boundary;                  // boundary point -> (model crossing, slot)
  std::array<std::array<int, 4>, 3> boundary_at;    // model crossing, slot -> boundary point or -1
};

Model build_model(const std::array<int, 3>& level, double offset) {
  using Vec = std::array<double, 2>;
  std::array<Vec, 6> pt;
  for (int k = 0; k < 6; ++k) {
    const double th = std::numbers::pi / 3.0 * k + 0.3;
    pt[static_cast<std::size_t>(k)] = {std::cos(th), std::sin(th)};
  }
  std::array<Vec, 3> start, end;
  for (int i = 0; i < 3; ++i) {
    start[static_cast<std::size_t>(i)] = pt[static_cast<std::size_t>(i)];
    end[static_cast<std::size_t>(i)] = pt[static_cast<std::size_t>(i + 3)];
  }
  {
    const Vec dir{end[2][0] - start[2][0], end[2][1] - start[2][1]};
    const Vec normal{-dir[1], dir[0]};
    for (auto* p : {&start[2], &end[2]}) {
      (*p)[0] += offset * normal[0];
      (*p)[1] += offset * normal[1];
    }
  }
  auto direction = [&](int i) {
    return Vec{end[static_cast<std::size_t>(i)][0] - start[static_cast<std::size_t>(i)][0],
               end[static_cast<std::size_t>(i)][1] - start[static_cast<std::size_t>(i)][1]};
  };
  // Parameter along strand i of its intersection with strand j.
  auto param = [&](int i, int j) {
    const Vec di = direction(i), dj = direction(j);
    const Vec si = start[static_cast<std::size_t>(i)], sj = start[static_cast<std::size_t>(j)];
    const double den = di[0] * dj[1] - di[1] * dj[0];
    return ((sj[0] - si[0]) * dj[1] - (sj[1] - si[1]) * dj[0]) / den;
  };

  Model m;
  for (auto& row : m.boundary_at) row = {-1, -1, -1, -1};
  // Crossing of strands (i, j) is indexed by the third strand.
  std::array<std::array<int, 4>, 3> arm_of_slot{};  // model crossing, slot -> +-(strand+1) (sign: toward end)
  for (int c = 0; c < 3; ++c) {
    const int i = (c + 1) % 3, j = (c + 2) % 3;
    const bool i_over = level[static_cast<std::size_t>(i)] > level[static_cast<std::size_t>(j)];
    const int over = i_over ? i : j, under = i_over ? j : i;
    m.crossings[static_cast<std::size_t>(c)] = {over, under};
    // Arms: direction vectors toward end (+) and toward start (-).
    struct Arm {
      double angle;
      int code;
    };
    std::array<Arm, 4> arms{};
    int k = 0;
    for (int s : {under, over}) {
      const Vec dv = direction(s);
      arms[static_cast<std::size_t>(k++)] = {std::atan2(dv[1], dv[0]), +(s + 1)};
      arms[static_cast<std::size_t>(k++)] = {std::atan2(-dv[1], -dv[0]), -(s + 1)};
    }
    // Slot 0 is the under-strand's arm toward its end; the rest follow ccw.
    const double base = arms[0].angle;
    auto rel = [&](double a) {
      double r = a - base;
      while (r < 0) r += 2 * std::numbers::pi;
      return r;
    };
    std::sort(arms.begin(), arms.end(), [&](const Arm& x, const Arm& y) { return rel(x.angle) < rel(y.angle); });
    for (int s = 0; s < 4; ++s) arm_of_slot[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = arms[static_cast<std::size_t>(s)].code;
  }
  for (int i = 0; i < 3; ++i) {
    std::array<std::pair<double, int>, 2> hits{};
    int k = 0;
    for (int c = 0; c < 3; ++c) {
      if (c == i) continue;
      const int other = 3 - i - c;
      hits[static_cast<std::size_t>(k++)] = {param(i, other), c};
    }
    std::sort(hits.begin(), hits.end());
    for (int h = 0; h < 2; ++h) {
      const int c = hits[static_cast<std::size_t>(h)].second;
      int in_slot = -1;
      for (int s = 0; s < 4; ++s)
        if (arm_of_slot[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] == -(i + 1)) in_slot = s;
      m.passes[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] = {c, in_slot};
    }
    const auto& first = m.passes[static_cast<std::size_t>(i)][0];
    const auto& last = m.passes[static_cast<std::size_t>(i)][1];
    m.boundary[static_cast<std::size_t>(i)] = {first.crossing, first.in_slot};
    m.boundary[static_cast<std::size_t>(i + 3)] = {last.crossing, (last.in_slot + 2) % 4};
  }
  for (int p = 0; p < 6; ++p) {
    const SlotRef r = m.boundary[static_cast<std::size_t>(p)];
    m.boundary_at[static_cast<std::size_t>(r.crossing)][static_cast<std::size_t>(r.slot)] = p;
  }
  return m;
}

struct ModelMatch {
  std::array<int, 3> level{};
  double offset = 0;
  std::array<int, 3> crossing_map{};  // model crossing -> diagram crossing index
  std::array<int, 3> rotation{};      // diagram slot = (model slot + rotation) % 4
};

std::vector<std::pair<std::array<int, 3>, double>> model_configs() {
  std::vector<std::pair<std::array<int, 3>, double>> out;
  std::array<int, 3> level{0, 1, 2};
  do {
    for (double off : {0.15, -0.15}) out.push_back({level, off});
  } while (std::next_permutation(level.begin(), level.end()));
  return out;
}

std::optional<ModelMatch> match_triangle(const Diagram& d, const Incidence& inc, const std::vector<int>& tri) {
  for (const auto& [level, offset] : model_configs()) {
    const Model m = build_model(level, offset);
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int rot_mask = 0; rot_mask < 8; ++rot_mask) {
        ModelMatch mm{level, offset, {}, {}};
        for (int c = 0; c < 3; ++c) {
          mm.crossing_map[static_cast<std::size_t>(c)] = tri[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])];
          mm.rotation[static_cast<std::size_t>(c)] = (rot_mask >> c) & 1 ? 2 : 0;
        }
        auto map_slot = [&](int mc, int ms) {
          return SlotRef{mm.crossing_map[static_cast<std::size_t>(mc)],
                         (ms + mm.rotation[static_cast<std::size_t>(mc)]) % 4};
        };
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const auto& p0 = m.passes[static_cast<std::size_t>(i)][0];
          const auto& p1 = m.passes[static_cast<std::size_t>(i)][1];
          const SlotRef from = map_slot(p0.crossing, (p0.in_slot + 2) % 4);
          const SlotRef to = map_slot(p1.crossing, p1.in_slot);
          const SlotOccupant& occ = inc.at(from);
          const Edge& e = d.edges[static_cast<std::size_t>(occ.edge)];
          const SlotRef other = occ.at_from ? *e.to : *e.from;
          ok = other == to && e.label.is_zero();
        }
        if (ok) return mm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace

Diagram apply_r3(const Diagram& d, const std::vector<int>& triangle) {
  if (triangle.size() != 3) throw MoveNotApplicable("R3 needs three crossings");
  for (int c : triangle)
    if (c < 0 || c >= d.crossing_count()) throw LookupError("crossing index out of range");
  if (triangle[0] == triangle[1] || triangle[1] == triangle[2] || triangle[0] == triangle[2])
    throw MoveNotApplicable("R3 needs three distinct crossings");
  require_valid(d);
  const Incidence inc(d);
  const auto match = match_triangle(d, inc, triangle);
  if (!match) throw MoveNotApplicable("crossings do not bound an R3 triangle with unlabelled edges");

  const Model old_model = build_model(match->level, match->offset);
  const Model new_model = build_model(match->level, -match->offset);
  auto old_slot = [&](const SlotRef& r) {
    return SlotRef{match->crossing_map[static_cast<std::size_t>(r.crossing)],
                   (r.slot + match->rotation[static_cast<std::size_t>(r.crossing)]) % 4};
  };
  // The crossing of a given strand pair keeps its diagram crossing.
  auto new_slot = [&](const SlotRef& r) {
    return SlotRef{match->crossing_map[static_cast<std::size_t>(r.crossing)], r.slot};
  };

  Diagram out = d;
  clear_declared(out);

  // Internal edges, one per strand, and strand directions.
  std::array<int, 3> internal{};
  std::array<bool, 3> forward{};  // strand runs from boundary i to i+3
  for (int i = 0; i < 3; ++i) {
    const auto& p0 = old_model.passes[static_cast<std::size_t>(i)][0];
    const SlotRef from = old_slot({p0.crossing, (p0.in_slot + 2) % 4});
    const SlotOccupant& occ = inc.at(from);
    internal[static_cast<std::size_t>(i)] = occ.edge;
    forward[static_cast<std::size_t>(i)] = occ.at_from;
  }

  // Rewire external edges from old boundary slots to new ones.
  std::vector<std::pair<SlotRef, SlotRef>> rewire;
  for (int p = 0; p < 6; ++p)
    rewire.push_back({old_slot(old_model.boundary[static_cast<std::size_t>(p)]),
                      new_slot(new_model.boundary[static_cast<std::size_t>(p)])});
  const std::set<int> internal_set(internal.begin(), internal.end());
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    if (internal_set.count(static_cast<int>(e))) continue;
    auto& edge = out.edges[e];
    const Edge before = d.edges[e];
    for (const auto& [from, to] : rewire) {
      if (before.from && *before.from == from) edge.from = to;
      if (before.to && *before.to == from) edge.to = to;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const auto& p0 = new_model.passes[static_cast<std::size_t>(i)][0];
    const auto& p1 = new_model.passes[static_cast<std::size_t>(i)][1];
    SlotRef a = new_slot({p0.crossing, (p0.in_slot + 2) % 4});
    SlotRef b = new_slot({p1.crossing, p1.in_slot});
    if (!forward[static_cast<std::size_t>(i)]) std::swap(a, b);
    auto& edge = out.edges[static_cast<std::size_t>(internal[static_cast<std::size_t>(i)])];
    edge.from = a;
    edge.to = b;
  }
  return out;
}

std::vector<std::vector<int>> r3_candidates(const Diagram& d) {
  std::vector<std::vector<int>> out;
  const int m = d.crossing_count();
  if (m < 3) return out;
  const Incidence inc(d);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (match_triangle(d, inc, {a, b, c})) out.push_back({a, b, c});
  return out;
}

// ---------------------------------------------------------------------------

Diagram with_crossing_order(const Diagram& d, std::vector<int> order) {
  Diagram out = d;
  out.crossing_order = std::move(order);
  out.explicit_order = true;
  const auto rep = validate(out);
  if (rep.has("crossing-order")) throw DomainError("crossing order is not a permutation");
  return out;
}

Diagram change_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) throw LookupError("crossing index out of range");
  Diagram out = d;
  clear_declared(out);
  for (auto& e : out.edges)
    for (auto* end : {&e.from, &e.to})
      if (*end && (*end)->crossing == crossing) (*end)->slot = ((*end)->slot + 1) % 4;
  return out;
}

Diagram with_trivial_circle(const Diagram& d) {
  Diagram out = d;
  add_edge(out, std::nullopt, std::nullopt, zero_class(d));
  return out;
}

Diagram smooth_crossing(const Diagram& d, int crossing, Smoothing s) {
  if (crossing < 0 || crossing >= d.crossing_count()) throw LookupError("crossing index out of range");
  require_valid(d);
  Diagram out = d;
  clear_declared(out);
  std::vector<bool> removed(out.edges.size(), false);

  auto find_end = [&](int slot) -> std::pair<int, bool> {
    const SlotRef r{crossing, slot};
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      if (removed[e]) continue;
      if (out.edges[e].to && *out.edges[e].to == r) return {static_cast<int>(e), false};
      if (out.edges[e].from && *out.edges[e].from == r) return {static_cast<int>(e), true};
    }
    throw InvariantViolation("slot without edge while smoothing");
  };

  for (int s1 : {0, 2}) {
    const int s2 = smoothing_partner(s, s1);
    auto [e1, e1_from] = find_end(s1);
    auto [e2, e2_from] = find_end(s2);
    auto& E1 = out.edges[static_cast<std::size_t>(e1)];
    if (e1 == e2) {
      E1.from.reset();
      E1.to.reset();
      continue;
    }
    auto& E2 = out.edges[static_cast<std::size_t>(e2)];
    if (e1_from) flip_edge(E1);  // now E1 arrives at s1
    if (!e2_from) flip_edge(E2);  // now E2 leaves s2
    E1.to = E2.to;
    E1.label += E2.label;
    if (!E1.to) E1.from.reset();
    removed[static_cast<std::size_t>(e2)] = true;
  }
  // A chain that closed on itself through both smoothing arcs ends at its own start.
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    if (removed[e]) continue;
    auto& E = out.edges[e];
    const bool from_here = E.from && E.from->crossing == crossing;
    const bool to_here = E.to && E.to->crossing == crossing;
    if (from_here || to_here) {
      // Both ends were merged into the same edge: it is a closed component.
      E.from.reset();
      E.to.reset();
    }
  }

  Diagram result;
  result.surface = out.surface;
  result.explicit_order = d.explicit_order;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (c != crossing) result.crossings.push_back(out.crossings[static_cast<std::size_t>(c)]);
  auto reindex = [&](std::optional<SlotRef>& r) {
    if (r && r->crossing > crossing) --r->crossing;
  };
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    if (removed[e]) continue;
    Edge edge = out.edges[e];
    reindex(edge.from);
    reindex(edge.to);
    result.edges.push_back(std::move(edge));
  }
  for (int c : d.crossing_order)
    if (c != crossing) result.crossing_order.push_back(c > crossing ? c - 1 : c);
  orient_strands(result);
  return result;
}

}  // namespace foamlink

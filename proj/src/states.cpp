#include "foamlink/states.hpp"

#include <algorithm>

namespace foamlink {

int State::positive_count() const {
  return static_cast<int>(std::count(assignment.begin(), assignment.end(), Smoothing::Positive));
}

int State::negative_count() const { return static_cast<int>(assignment.size()) - positive_count(); }

State State::with(int crossing, Smoothing s) const {
  State out = *this;
  out.assignment[static_cast<std::size_t>(crossing)] = s;
  return out;
}

std::uint64_t State::mask() const {
  std::uint64_t m = 0;
  for (std::size_t c = 0; c < assignment.size(); ++c)
    if (assignment[c] == Smoothing::Negative) m |= std::uint64_t{1} << c;
  return m;
}

State State::from_mask(int crossings, std::uint64_t negative_mask) {
  State s;
  s.assignment.resize(static_cast<std::size_t>(crossings));
  for (int c = 0; c < crossings; ++c)
    s.assignment[static_cast<std::size_t>(c)] =
        (negative_mask >> c) & 1U ? Smoothing::Negative : Smoothing::Positive;
  return s;
}

int Resolution::circle_index_by_id(int id) const {
  for (std::size_t k = 0; k < circles.size(); ++k)
    if (circles[k].id == id) return static_cast<int>(k);
  return -1;
}

const StateCircle& Resolution::circle_by_id(int id) const {
  const int k = circle_index_by_id(id);
  if (k < 0) throw InvariantViolation("no circle with id " + std::to_string(id));
  return circles[static_cast<std::size_t>(k)];
}

int Resolution::essential_count() const {
  return static_cast<int>(std::count_if(circles.begin(), circles.end(), [](const auto& c) { return c.essential; }));
}

int Resolution::inessential_count() const { return static_cast<int>(circles.size()) - essential_count(); }

Resolution resolve(const Diagram& d, const State& s) {
  if (static_cast<int>(s.assignment.size()) != d.crossing_count())
    throw DomainError("state size does not match the crossing count");
  const Incidence inc(d);
  const SurfaceSpec f = d.surface.canonical();

  Resolution r;
  r.state = s;
  r.circle_of_edge.assign(d.edges.size(), -1);
  r.dir_of_edge.assign(d.edges.size(), 0);
  r.circle_of_slot.assign(d.crossings.size(), {-1, -1, -1, -1});

  for (std::size_t start = 0; start < d.edges.size(); ++start) {
    if (r.circle_of_edge[start] >= 0) continue;
    const int index = static_cast<int>(r.circles.size());
    StateCircle circle;
    circle.id = static_cast<int>(start);
    circle.traced = 0 * d.edges[start].label;

    int e = static_cast<int>(start);
    int dir = +1;
    while (true) {
      const auto& edge = d.edges[static_cast<std::size_t>(e)];
      if (r.circle_of_edge[static_cast<std::size_t>(e)] >= 0) {
        if (e != static_cast<int>(start) || dir != +1)
          throw InvariantViolation("edge '" + edge.id + "' traced twice");
        break;
      }
      r.circle_of_edge[static_cast<std::size_t>(e)] = index;
      r.dir_of_edge[static_cast<std::size_t>(e)] = dir;
      circle.traversal.push_back({e, dir});
      circle.traced += dir * edge.label;
      if (edge.is_loop()) break;

      const SlotRef arrive = dir > 0 ? *edge.to : *edge.from;
      const int out_slot = smoothing_partner(s.at(arrive.crossing), arrive.slot);
      circle.arcs.push_back({arrive.crossing, arrive.slot, out_slot});
      r.circle_of_slot[static_cast<std::size_t>(arrive.crossing)][static_cast<std::size_t>(arrive.slot)] = index;
      r.circle_of_slot[static_cast<std::size_t>(arrive.crossing)][static_cast<std::size_t>(out_slot)] = index;
      const SlotOccupant& occ = inc.at(arrive.crossing, out_slot);
      e = occ.edge;
      dir = occ.at_from ? +1 : -1;
    }
    circle.cls = UnorientedClass(circle.traced);
    circle.essential = !circle.cls.is_zero();
    if (!is_simple_class(circle.traced, f))
      throw UnrealizableEmbedding("state circle through edge '" + d.edges[start].id + "' has class " +
                                  circle.traced.str() + ", which no simple closed curve on " +
                                  d.surface.describe() + " carries");
    r.circles.push_back(std::move(circle));
  }
  return r;
}

void check_crossing_cap(const Diagram& d, int cap) {
  if (d.crossing_count() > cap)
    throw ResourceLimit("diagram has " + std::to_string(d.crossing_count()) + " crossings; cap is " +
                        std::to_string(cap));
}

std::vector<State> enumerate_states(const Diagram& d, int cap) {
  check_crossing_cap(d, cap);
  const int m = d.crossing_count();
  std::vector<State> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
    std::uint64_t mask = 0;
    for (int c = 0; c < m; ++c)
      if ((idx >> (m - 1 - c)) & 1U) mask |= std::uint64_t{1} << c;
    out.push_back(State::from_mask(m, mask));
  }
  return out;
}

ResolutionTable::ResolutionTable(const Diagram& d, int cap) {
  const auto states = enumerate_states(d, cap);
  table_.resize(states.size());
  for (const State& s : states) table_[s.mask()] = resolve(d, s);
}

Saddle saddle_at(const Resolution& from, const Resolution& to, int crossing) {
  auto ids = [crossing](const Resolution& r) {
    std::vector<int> out;
    for (int idx : r.circle_of_slot[static_cast<std::size_t>(crossing)]) {
      const int id = r.circles[static_cast<std::size_t>(idx)].id;
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  Saddle sd;
  sd.before = ids(from);
  sd.after = ids(to);
  sd.one_sided = sd.before.size() == sd.after.size();
  sd.merge = sd.before.size() == 2;
  return sd;
}

int sign_exponent(const Diagram& d, const std::vector<int>& positions, const State& s, int crossing) {
  const int p = positions[static_cast<std::size_t>(crossing)];
  int t = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (positions[static_cast<std::size_t>(c)] > p && s.at(c) == Smoothing::Negative) ++t;
  return t;
}

}  // namespace foamlink

#pragma once

// Smoothing states of a diagram and the closed curves they trace.

#include <cstdint>
#include <vector>

#include "foamlink/diagram.hpp"

namespace foamlink {

inline constexpr int kDefaultCrossingCap = 16;

struct State {
  std::vector<Smoothing> assignment;  // indexed by crossing index

  [[nodiscard]] int positive_count() const;
  [[nodiscard]] int negative_count() const;
  /// I = p - n.
  [[nodiscard]] int i_grading() const { return positive_count() - negative_count(); }
  [[nodiscard]] Smoothing at(int crossing) const { return assignment[static_cast<std::size_t>(crossing)]; }
  /// Copy with one crossing changed.
  [[nodiscard]] State with(int crossing, Smoothing s) const;
  /// Bitmask with bit c set when crossing c is negative.
  [[nodiscard]] std::uint64_t mask() const;
  static State from_mask(int crossings, std::uint64_t negative_mask);

  friend auto operator<=>(const State& a, const State& b) { return a.mask() <=> b.mask(); }
  friend bool operator==(const State& a, const State& b) { return a.assignment == b.assignment; }
};

struct DirectedEdge {
  int edge = -1;
  int dir = +1;  // +1 forward, -1 backward
};

/// A smoothing arc at a crossing, traversed from `from_slot` to `to_slot`.
struct SmoothingArc {
  int crossing = -1;
  int from_slot = -1;
  int to_slot = -1;
};

struct StateCircle {
  int id = -1;  // lowest incident edge index
  std::vector<DirectedEdge> traversal;  // starts at edge `id` going forward
  std::vector<SmoothingArc> arcs;       // arcs[k] follows traversal[k]
  ClassVector traced;                   // class along the traversal direction
  UnorientedClass cls;
  bool essential = false;

  /// +1 when the traversal direction is the positive orientation of the class.
  [[nodiscard]] int traversal_sign() const { return essential ? orientation_sign(traced) : 0; }
};

/// All circles of one state plus lookup tables.
struct Resolution {
  State state;
  std::vector<StateCircle> circles;      // sorted by id
  std::vector<int> circle_of_edge;       // edge index -> index into circles
  std::vector<int> dir_of_edge;          // edge index -> traversal direction
  std::vector<std::array<int, 4>> circle_of_slot;  // crossing, slot -> circle index

  [[nodiscard]] int circle_index_by_id(int id) const;  // -1 if absent
  [[nodiscard]] const StateCircle& circle_by_id(int id) const;
  [[nodiscard]] int essential_count() const;
  [[nodiscard]] int inessential_count() const;
};

/// Traces the circles of state s. Throws UnrealizableEmbedding when a traced
/// class cannot belong to a simple closed curve.
[[nodiscard]] Resolution resolve(const Diagram& d, const State& s);

/// All 2^m states, lexicographic in the assignment (crossing 0 most
/// significant, positive before negative). Throws ResourceLimit above cap.
[[nodiscard]] std::vector<State> enumerate_states(const Diagram& d, int cap = kDefaultCrossingCap);

void check_crossing_cap(const Diagram& d, int cap);

/// Resolutions of every state, indexed by State::mask().
class ResolutionTable {
 public:
  ResolutionTable(const Diagram& d, int cap = kDefaultCrossingCap);
  [[nodiscard]] const Resolution& at(const State& s) const { return table_[s.mask()]; }
  [[nodiscard]] const std::vector<Resolution>& all() const { return table_; }

 private:
  std::vector<Resolution> table_;
};

/// How the circles change when crossing p goes from its positive to its
/// negative smoothing. Circles away from p keep their ids.
struct Saddle {
  bool merge = false;
  /// One circle in, one circle out: the band is attached with a half twist.
  bool one_sided = false;
  std::vector<int> before;  // ids in the positive-side resolution (2 for a merge, 1 for a split)
  std::vector<int> after;   // ids in the negative-side resolution (1 for a merge, 2 for a split)
};

/// On the torus a band can join a circle to itself from opposite sides, so the
/// circle count may stay the same; that case is flagged as one-sided.
[[nodiscard]] Saddle saddle_at(const Resolution& from, const Resolution& to, int crossing);

/// Traversal direction of edge `edge` along the circle containing it, per
/// resolution; used to slide an orientation across a bridge.
[[nodiscard]] inline int transfer_sign(const Resolution& from, const Resolution& to, int edge) {
  return from.dir_of_edge[static_cast<std::size_t>(edge)] * to.dir_of_edge[static_cast<std::size_t>(edge)];
}

/// Number of crossings after `crossing` in the diagram ordering that are
/// smoothed negatively in s; the exponent of the differential's sign.
[[nodiscard]] int sign_exponent(const Diagram& d, const std::vector<int>& positions, const State& s, int crossing);

}  // namespace foamlink

#pragma once

// Combinatorial link diagrams on a base surface.
//
// A crossing has four slots in counterclockwise order; slots 0 and 2 carry the
// under-strand. Edges are directed and join two slots (or close up on
// themselves when a link component has no crossings). Each edge carries the
// homology class it contributes when traversed forward; reversing the edge
// negates it. The labels stand in for the embedding: they count signed
// intersections with a fixed system of cut arcs dual to an H1 basis.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "foamlink/surface.hpp"

namespace foamlink {

struct SlotRef {
  int crossing = -1;  // index into Diagram::crossings
  int slot = -1;      // 0..3
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Edge {
  std::string id;
  std::optional<SlotRef> from;  // both empty for a closed crossingless component
  std::optional<SlotRef> to;
  ClassVector label;

  [[nodiscard]] bool is_loop() const { return !from && !to; }
};

struct Crossing {
  std::string id;
  /// Edge index declared at each slot by the input (-1 when absent). Kept for
  /// validation; the edges' endpoints are authoritative.
  std::array<int, 4> declared{-1, -1, -1, -1};
};

/// Slot pairs joined by the two smoothings of a crossing.
enum class Smoothing { Positive, Negative };

/// Partner of `slot` under the smoothing: positive joins (0,1),(2,3); negative
/// joins (1,2),(3,0).
[[nodiscard]] constexpr int smoothing_partner(Smoothing s, int slot) {
  if (s == Smoothing::Positive) return slot ^ 1;
  return slot == 0 ? 3 : slot == 3 ? 0 : (slot == 1 ? 2 : 1);
}

struct Diagram {
  SurfaceSpec surface;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  /// crossing_order[k] is the crossing index in position k of the ordering
  /// used for differential signs.
  std::vector<int> crossing_order;
  bool explicit_order = false;  // whether the text carried crossing_order

  [[nodiscard]] int crossing_count() const { return static_cast<int>(crossings.size()); }
  [[nodiscard]] int find_edge(const std::string& id) const;       // -1 if absent
  [[nodiscard]] int find_crossing(const std::string& id) const;   // -1 if absent
  [[nodiscard]] int edge_index(const std::string& id) const;      // throws LookupError
  [[nodiscard]] int crossing_index(const std::string& id) const;  // throws LookupError
  /// Inverse of crossing_order: position of each crossing.
  [[nodiscard]] std::vector<int> order_positions() const;
  /// Fresh ids not already used.
  [[nodiscard]] std::string fresh_edge_id() const;
  [[nodiscard]] std::string fresh_crossing_id() const;
};

/// Which edge end sits in a slot.
struct SlotOccupant {
  int edge = -1;
  bool at_from = false;  // true: the edge leaves this slot; false: it arrives
};

/// Slot occupancy table; requires a structurally valid diagram.
class Incidence {
 public:
  explicit Incidence(const Diagram& d);
  [[nodiscard]] const SlotOccupant& at(int crossing, int slot) const {
    return table_[static_cast<std::size_t>(crossing)][static_cast<std::size_t>(slot)];
  }
  [[nodiscard]] const SlotOccupant& at(const SlotRef& r) const { return at(r.crossing, r.slot); }

 private:
  std::vector<std::array<SlotOccupant, 4>> table_;
};

struct ValidationIssue {
  std::string kind;  // four-valence, dangling-slot, slot-reuse, label-length, ...
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  [[nodiscard]] bool ok() const { return issues.empty(); }
  [[nodiscard]] bool has(const std::string& kind) const;
};

[[nodiscard]] ValidationReport validate(const Diagram& d);
/// Throws ParseError listing the issues when validation fails.
void require_valid(const Diagram& d);

/// Link components as cyclic sequences of (edge, +1) following strand
/// direction through crossings (slot s continues to slot s+2).
[[nodiscard]] std::vector<std::vector<int>> strands(const Diagram& d);
/// Total class of each strand, in the order returned by strands().
[[nodiscard]] std::vector<ClassVector> strand_classes(const Diagram& d);

// Text format.
[[nodiscard]] Diagram parse_diagram(const std::string& text);
[[nodiscard]] Diagram load_diagram(const std::string& path);
[[nodiscard]] std::string serialize_diagram(const Diagram& d);

}  // namespace foamlink

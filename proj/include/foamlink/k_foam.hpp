#pragma once

// The k-theories. A generator is a state plus a partition of its circles and of
// the bottom curves into genus-0 components: dotted or undotted disks on
// trivial circles, and components whose boundary curves are all essential
// (vertical annuli, turnbacks, bottom annuli and larger planar pieces).
//
// Orientation convention: every oriented boundary curve carries its boundary
// orientation, so the oriented classes of a component's boundary sum to zero
// in H1(F). In particular a vertical annulus has top and bottom oriented
// oppositely as curves of F.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "foamlink/simple_foam.hpp"
#include "foamlink/states.hpp"

namespace foamlink {

enum class OrientationVariants { All, Reachable };

struct KOptions {
  std::optional<int> k;  // nullopt for k = infinity
  OrientationVariants variants = OrientationVariants::All;
};

struct KComponent {
  /// Top circles as (circle id, sign); sign is +1/-1 relative to the positive
  /// orientation of the circle's class, 0 when the component is unoriented.
  std::vector<std::pair<int, int>> tops;
  OrientedMultiset bottoms;
  bool disk = false;
  int dots = 0;

  [[nodiscard]] int chi() const { return disk ? 1 : 2 - static_cast<int>(tops.size() + bottoms.size()); }
  [[nodiscard]] bool oriented() const { return !bottoms.empty() || (!tops.empty() && tops.front().second != 0); }
  [[nodiscard]] std::string kind() const;
  [[nodiscard]] std::string label() const;
  friend auto operator<=>(const KComponent&, const KComponent&) = default;
  friend bool operator==(const KComponent&, const KComponent&) = default;
};

struct KGenerator {
  State state;
  std::vector<KComponent> components;  // sorted
  OrientedMultiset sector;
  int i = 0;
  int j = 0;

  [[nodiscard]] int dots() const;
  [[nodiscard]] int chi() const;
  [[nodiscard]] std::string label() const;
  /// Index of the component holding top circle `id`, -1 if none.
  [[nodiscard]] int component_of(int id) const;
  friend auto operator<=>(const KGenerator& a, const KGenerator& b) {
    if (auto c = a.state <=> b.state; c != 0) return c;
    if (auto c = a.sector <=> b.sector; c != 0) return c;
    return a.components <=> b.components;
  }
  friend bool operator==(const KGenerator& a, const KGenerator& b) {
    return a.state == b.state && a.sector == b.sector && a.components == b.components;
  }
};

/// Sorts components and fills i and j.
void normalize(KGenerator& g);

/// Sector key text and its K value (parallel curves collapsed to coefficients).
[[nodiscard]] std::string k_value_str(const OrientedMultiset& sector);

/// Oriented bottom multisets worth building: every orientation of the
/// essential classes of every state.
[[nodiscard]] std::set<OrientedMultiset> k_sector_candidates(const ResolutionTable& table);

/// Boundary signs of a component, or nullopt when some curve conflicts with
/// the forced orientation. `known` holds +1/-1 for fixed curves and 0 for free
/// ones; the result is all zero when nothing is fixed.
[[nodiscard]] std::optional<std::vector<int>> close_orientation(const std::vector<UnorientedClass>& curves,
                                                                const std::vector<int>& known);

/// All generators of state r.state in the given sector.
[[nodiscard]] std::vector<KGenerator> enumerate_k(const Resolution& r, const SurfaceSpec& f,
                                                  const OrientedMultiset& sector, const KOptions& opt);

/// The bridge at crossing p applied to g (unsigned).
[[nodiscard]] Combination<KGenerator> bridge_k(const ResolutionTable& table, const SurfaceSpec& f,
                                               const KGenerator& g, int p, const KOptions& opt);

}  // namespace foamlink

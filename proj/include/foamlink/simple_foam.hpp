#pragma once

// The simple theory: generators are decorated states. Each trivial circle caps
// off with a disk, undotted (ONE) or dotted (X); each essential circle is the
// top of a vertical annulus. The differential is a fixed bridge table.

#include <map>
#include <utility>
#include <vector>

#include "foamlink/states.hpp"

namespace foamlink {

enum class Decoration { One = 0, X = 1 };

struct SimpleGenerator {
  State state;
  std::map<int, Decoration> decorations;  // trivial circle id -> decoration
  CurveMultiset bottom;                   // classes of the essential circles
  int i = 0;
  int j = 0;

  [[nodiscard]] int dots() const;
  [[nodiscard]] std::string label() const;
  friend auto operator<=>(const SimpleGenerator& a, const SimpleGenerator& b) {
    if (auto c = a.state <=> b.state; c != 0) return c;
    return a.decorations <=> b.decorations;
  }
  friend bool operator==(const SimpleGenerator& a, const SimpleGenerator& b) {
    return a.state == b.state && a.decorations == b.decorations;
  }
};

template <class G>
using Combination = std::vector<std::pair<G, long long>>;

/// All 2^(#trivial circles) decorations of a resolved state.
[[nodiscard]] std::vector<SimpleGenerator> enumerate_simple(const Resolution& r);

/// Gradings of a decorated state: j = i + 2(2 * #X - #disks).
void assign_simple_gradings(SimpleGenerator& g);

/// The bridge at crossing p applied to g (unsigned).
[[nodiscard]] Combination<SimpleGenerator> bridge_simple(const ResolutionTable& table,
                                                         const SimpleGenerator& g, int p);

}  // namespace foamlink

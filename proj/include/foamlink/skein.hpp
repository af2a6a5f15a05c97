#pragma once

// Kauffman bracket of a link in a thickened surface as a state sum, valued in
// the skein module with basis the multisets of essential curve classes.

#include <map>
#include <string>
#include <vector>

#include "foamlink/diagram.hpp"
#include "foamlink/laurent.hpp"
#include "foamlink/states.hpp"

namespace foamlink {

/// Map from basis element (sorted multiset of essential classes) to its
/// coefficient. Zero coefficients are never stored.
class SkeinElement {
 public:
  void add(const CurveMultiset& key, const LaurentPoly& p);
  [[nodiscard]] LaurentPoly coeff(const CurveMultiset& key) const;
  [[nodiscard]] const std::map<CurveMultiset, LaurentPoly>& terms() const { return terms_; }

  SkeinElement& operator+=(const SkeinElement& o);
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  /// Multiplies every coefficient by p.
  friend SkeinElement operator*(const LaurentPoly& p, const SkeinElement& s);
  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::map<CurveMultiset, LaurentPoly> terms_;
};

/// Sorted multiset of the essential circle classes of a resolution.
[[nodiscard]] CurveMultiset essential_multiset(const Resolution& r);

/// Sum over states of A^(p-n) * delta^(#inessential circles) * <essential classes>.
[[nodiscard]] SkeinElement kauffman_bracket(const Diagram& d, int cap = kDefaultCrossingCap);

struct EulerComparison {
  bool ok = true;
  std::vector<std::string> mismatches;  // "sector: euler vs bracket"
};

/// Compares, sector by sector, the graded Euler characteristic of the simple
/// complex with the bracket. A sector missing on one side counts as zero.
[[nodiscard]] EulerComparison compare_euler(const Diagram& d, int cap = kDefaultCrossingCap);

}  // namespace foamlink

#include "foamlink/skein.hpp"

#include <algorithm>
#include <set>

#include "foamlink/complex.hpp"

namespace foamlink {

void SkeinElement::add(const CurveMultiset& key, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto& slot = terms_[key];
  slot += p;
  if (slot.is_zero()) terms_.erase(key);
}

LaurentPoly SkeinElement::coeff(const CurveMultiset& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
  for (const auto& [k, p] : o.terms_) add(k, p);
  return *this;
}

SkeinElement operator*(const LaurentPoly& p, const SkeinElement& s) {
  SkeinElement out;
  for (const auto& [k, q] : s.terms_) out.add(k, p * q);
  return out;
}

std::string SkeinElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, p] : terms_) {
    if (!s.empty()) s += "; ";
    s += multiset_str(k) + ": " + p.str();
  }
  return s;
}

CurveMultiset essential_multiset(const Resolution& r) {
  CurveMultiset m;
  for (const auto& c : r.circles)
    if (c.essential) m.push_back(c.cls);
  std::sort(m.begin(), m.end());
  return m;
}

SkeinElement kauffman_bracket(const Diagram& d, int cap) {
  require_valid(d);
  SkeinElement out;
  const LaurentPoly delta = LaurentPoly::delta();
  for (const State& s : enumerate_states(d, cap)) {
    const Resolution r = resolve(d, s);
    out.add(essential_multiset(r), LaurentPoly::monomial(s.i_grading()) * delta.pow(r.inessential_count()));
  }
  return out;
}

EulerComparison compare_euler(const Diagram& d, int cap) {
  BuildOptions opt;
  opt.cap = cap;
  const auto euler = graded_euler_characteristic(build_complex(d, opt));
  std::map<std::string, LaurentPoly> bracket;
  const SkeinElement b = kauffman_bracket(d, cap);
  for (const auto& [key, p] : b.terms()) bracket[sector_key(key)] = p;

  std::set<std::string> keys;
  for (const auto& [k, p] : euler) keys.insert(k);
  for (const auto& [k, p] : bracket) keys.insert(k);
  EulerComparison out;
  for (const auto& k : keys) {
    const auto e = euler.count(k) ? euler.at(k) : LaurentPoly{};
    const auto b = bracket.count(k) ? bracket.at(k) : LaurentPoly{};
    if (e == b) continue;
    out.ok = false;
    out.mismatches.push_back(k + ": " + e.str() + " vs " + b.str());
  }
  return out;
}

}  // namespace foamlink

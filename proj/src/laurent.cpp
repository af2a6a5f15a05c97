#include "foamlink/laurent.hpp"

namespace foamlink {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::delta() { return monomial(2, -1) + monomial(-2, -1); }

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  const Coeff v = (terms_[exponent] += c);
  if (v == 0) terms_.erase(exponent);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  LaurentPoly out = monomial(0);
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    const long long mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    const std::string mono = e == 0 ? "" : (e == 1 ? "A" : "A^" + std::to_string(e));
    if (mono.empty())
      s += std::to_string(mag);
    else
      s += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
  }
  return s;
}

}  // namespace foamlink

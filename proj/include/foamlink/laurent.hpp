#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace foamlink {

/// Laurent polynomial in A with integer coefficients. No zero coefficients
/// are ever stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Coeff c = 1);
  /// delta = -A^2 - A^-2, the value of a trivial circle.
  static LaurentPoly delta();

  [[nodiscard]] Coeff coeff(int exponent) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<int, Coeff>& terms() const { return terms_; }
  void add_term(int exponent, Coeff c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  [[nodiscard]] LaurentPoly pow(int n) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Sorted `A^e*c` terms joined by " + ", "0" for the zero polynomial.
  [[nodiscard]] std::string str() const;

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace foamlink

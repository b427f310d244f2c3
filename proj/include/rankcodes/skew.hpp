#pragma once

#include <utility>
#include <vector>

#include "rankcodes/gf.hpp"

namespace rankcodes {

// Element of the skew polynomial ring F_{q^m}[x;sigma], where x*c = sigma(c)*x.
// Coefficients are stored ascending with trailing zeros trimmed; the zero
// polynomial has degree -1 (standing in for -infinity).
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(const ExtensionField* field) : field_(field) {}
  SkewPoly(const ExtensionField* field, std::vector<felem> coeffs);

  static SkewPoly one(const ExtensionField* field);
  static SkewPoly monomial(const ExtensionField* field, felem c, unsigned exponent);

  const ExtensionField* field() const { return field_; }
  int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  felem coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  felem lead() const { return coeffs_.back(); }
  const std::vector<felem>& coeffs() const { return coeffs_; }

  bool operator==(const SkewPoly& rhs) const;

  SkewPoly operator+(const SkewPoly& rhs) const;
  SkewPoly operator-(const SkewPoly& rhs) const;
  SkewPoly operator*(const SkewPoly& rhs) const;  // twisted multiplication

 private:
  const ExtensionField* field_ = nullptr;
  std::vector<felem> coeffs_;
};

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

// Operator evaluation: alpha -> sum_i a_i sigma^i(alpha), an F_q-linear map.
felem op_eval(const SkewPoly& a, felem alpha);

// a = quot * b + rem with deg rem < deg b; throws on b = 0.
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& a, const SkewPoly& b);
SkewPoly mod_r(const SkewPoly& a, const SkewPoly& b);

SkewPoly monic(const SkewPoly& a);
SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b);

// Monic polynomial of minimal degree whose kernel contains the span of the
// given F_q-independent elements; degree = number of elements.  Throws on a
// dependent input list.
SkewPoly annihilator(const ExtensionField* field, const std::vector<felem>& basis);

// F_q-basis of ker(a) inside F_{q^m}; dimension <= deg a.
std::vector<felem> kernel_basis(const SkewPoly& a);

// `poly <c0> <c1> ... <cd>` with canonical integer coefficients.
std::string poly_line(const SkewPoly& a);

}  // namespace rankcodes

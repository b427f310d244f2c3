#include "rankcodes/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace rankcodes {

namespace {

void check_same_field(const SkewPoly& a, const SkewPoly& b) {
  if (!a.field() || !b.field() || !a.field()->same(*b.field()))
    throw std::invalid_argument("skew polynomials over different fields");
}

}  // namespace

SkewPoly::SkewPoly(const ExtensionField* field, std::vector<felem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SkewPoly SkewPoly::one(const ExtensionField* field) { return {field, {1}}; }

SkewPoly SkewPoly::monomial(const ExtensionField* field, felem c, unsigned exponent) {
  std::vector<felem> v(exponent + 1, 0);
  v[exponent] = c;
  return {field, std::move(v)};
}

bool SkewPoly::operator==(const SkewPoly& rhs) const {
  return coeffs_ == rhs.coeffs_;
}

SkewPoly SkewPoly::operator+(const SkewPoly& rhs) const {
  check_same_field(*this, rhs);
  std::vector<felem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(coeff(static_cast<unsigned>(i)), rhs.coeff(static_cast<unsigned>(i)));
  return {field_, std::move(out)};
}

SkewPoly SkewPoly::operator-(const SkewPoly& rhs) const {
  check_same_field(*this, rhs);
  std::vector<felem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(coeff(static_cast<unsigned>(i)), rhs.coeff(static_cast<unsigned>(i)));
  return {field_, std::move(out)};
}

SkewPoly SkewPoly::operator*(const SkewPoly& rhs) const { return skew_mul(*this, rhs); }

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  const auto* F = a.field();
  if (a.is_zero() || b.is_zero()) return SkewPoly(F);
  const unsigned da = static_cast<unsigned>(a.deg());
  const unsigned db = static_cast<unsigned>(b.deg());
  std::vector<felem> out(da + db + 1, 0);
  for (unsigned j = 0; j <= da; ++j) {
    const felem aj = a.coeff(j);
    if (!aj) continue;
    for (unsigned i = 0; i <= db; ++i) {
      const felem t = F->mul(aj, F->frobenius(b.coeff(i), j));
      out[j + i] = F->add(out[j + i], t);
    }
  }
  return {F, std::move(out)};
}

felem op_eval(const SkewPoly& a, felem alpha) {
  const auto* F = a.field();
  felem acc = 0, t = alpha;
  for (int i = 0; i <= a.deg(); ++i) {
    const felem c = a.coeff(static_cast<unsigned>(i));
    if (c) acc = F->add(acc, F->mul(c, t));
    t = F->frobenius(t, 1);
  }
  return acc;
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("right division by zero polynomial");
  const auto* F = a.field();
  SkewPoly rem = a;
  std::vector<felem> quot(a.deg() >= b.deg() ? static_cast<std::size_t>(a.deg() - b.deg() + 1) : 0, 0);
  while (!rem.is_zero() && rem.deg() >= b.deg()) {
    const unsigned shift = static_cast<unsigned>(rem.deg() - b.deg());
    // leading term of (c x^shift) * b is c * sigma^shift(lead b) * x^{deg rem}
    const felem c = F->div(rem.lead(), F->frobenius(b.lead(), shift));
    quot[shift] = F->add(quot[shift], c);
    rem = rem - skew_mul(SkewPoly::monomial(F, c, shift), b);
  }
  return {SkewPoly(F, std::move(quot)), rem};
}

SkewPoly mod_r(const SkewPoly& a, const SkewPoly& b) { return right_divmod(a, b).second; }

SkewPoly monic(const SkewPoly& a) {
  if (a.is_zero()) throw std::domain_error("monic normalization of zero");
  const auto* F = a.field();
  const felem iv = F->inv(a.lead());
  std::vector<felem> out(a.coeffs());
  for (auto& c : out) c = F->mul(iv, c);
  return {F, std::move(out)};
}

SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcrd(0, 0)");
  SkewPoly x = a, y = b;
  while (!y.is_zero()) {
    SkewPoly r = mod_r(x, y);
    x = y;
    y = r;
  }
  return monic(x);
}

SkewPoly annihilator(const ExtensionField* field, const std::vector<felem>& basis) {
  SkewPoly ann = SkewPoly::one(field);
  for (felem v : basis) {
    const felem e = op_eval(ann, v);
    if (e == 0) throw std::invalid_argument("annihilator: dependent input basis");
    // (x - sigma(e) e^{-1}) kills e, hence the enlarged span.
    const SkewPoly factor(field, {field->neg(field->mul(field->frobenius(e, 1), field->inv(e))), 1});
    ann = skew_mul(factor, ann);
  }
  return ann;
}

std::vector<felem> kernel_basis(const SkewPoly& a) {
  if (a.is_zero()) throw std::domain_error("kernel of zero polynomial");
  const auto* F = a.field();
  const auto& basis = F->fq_basis();
  Matrix M(F, F->m(), F->m());
  for (unsigned j = 0; j < F->m(); ++j) {
    const auto col = F->fq_coords(op_eval(a, basis[j]));
    for (unsigned i = 0; i < F->m(); ++i) M.at(i, j) = col[i];
  }
  std::vector<felem> out;
  for (const auto& v : M.kernel()) out.push_back(F->from_fq_coords(v));
  return out;
}

std::string poly_line(const SkewPoly& a) {
  std::ostringstream os;
  os << "poly";
  for (int i = 0; i <= a.deg(); ++i) os << ' ' << a.coeff(static_cast<unsigned>(i));
  return os.str();
}

}  // namespace rankcodes

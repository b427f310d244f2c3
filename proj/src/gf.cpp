#include "rankcodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rankcodes {

namespace {

std::vector<unsigned> to_digits(felem v, std::uint64_t p, unsigned d) {
  std::vector<unsigned> out(d, 0);
  for (unsigned i = 0; i < d && v; ++i) {
    out[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return out;
}

felem from_digits(const std::vector<unsigned>& c, std::uint64_t p) {
  felem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// --- polynomials over F_p (ascending coefficients) ---

int pdeg(const std::vector<unsigned>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i]) return static_cast<int>(i);
  return -1;
}

std::vector<unsigned> ptrim(std::vector<unsigned> f) {
  f.resize(static_cast<std::size_t>(pdeg(f) + 1));
  return f;
}

// a mod b, b non-zero
std::vector<unsigned> pmod(std::vector<unsigned> a, const std::vector<unsigned>& b,
                           std::uint64_t p) {
  const int db = pdeg(b);
  const std::uint64_t lead_inv = [&] {
    // Fermat inverse of b's leading coefficient
    std::uint64_t r = 1, base = b[static_cast<std::size_t>(db)], e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }();
  for (int i = pdeg(a); i >= db; i = pdeg(a)) {
    const std::uint64_t c = a[static_cast<std::size_t>(i)] * lead_inv % p;
    if (c)
      for (int j = 0; j <= db; ++j) {
        auto& t = a[static_cast<std::size_t>(i - db + j)];
        t = static_cast<unsigned>((t + p * p - c * b[static_cast<std::size_t>(j)] % p * 1) % p);
      }
    a[static_cast<std::size_t>(i)] = 0;
  }
  return ptrim(a);
}

std::vector<unsigned> pmulmod(const std::vector<unsigned>& a,
                              const std::vector<unsigned>& b,
                              const std::vector<unsigned>& f, std::uint64_t p) {
  if (pdeg(a) < 0 || pdeg(b) < 0) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  std::vector<unsigned> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<unsigned>(acc[i]);
  return pmod(std::move(c), f, p);
}

std::vector<unsigned> ppowmod(std::vector<unsigned> base, std::uint64_t e,
                              const std::vector<unsigned>& f, std::uint64_t p) {
  std::vector<unsigned> r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned> pgcd(std::vector<unsigned> a, std::vector<unsigned> b,
                           std::uint64_t p) {
  while (pdeg(b) >= 0) {
    auto r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility of monic f of degree d over F_p: x^{p^d} = x (mod f) and
// gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
bool is_irreducible(const std::vector<unsigned>& f, std::uint64_t p) {
  const int d = pdeg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  auto pow_p = [&](unsigned k) {
    // x^{p^k} mod f
    std::vector<unsigned> r{0, 1};
    for (unsigned i = 0; i < k; ++i) r = ppowmod(std::move(r), p, f, p);
    return r;
  };
  auto sub_x = [&](std::vector<unsigned> g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = static_cast<unsigned>((g[1] + p - 1) % p);
    return ptrim(std::move(g));
  };
  {
    auto top = sub_x(pow_p(static_cast<unsigned>(d)));
    if (pdeg(top) >= 0) return false;
  }
  unsigned n = static_cast<unsigned>(d);
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    auto g = pgcd(f, sub_x(pow_p(static_cast<unsigned>(d) / r)), p);
    if (pdeg(g) != 0) return false;
    while (n % r == 0) n /= r;
  }
  if (n > 1) {
    auto g = pgcd(f, sub_x(pow_p(static_cast<unsigned>(d) / n)), p);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

// --- small linear algebra over F_p ---

struct FpMat {
  std::uint64_t p;
  std::size_t rows = 0, cols = 0;
  std::vector<unsigned> e;

  FpMat(std::uint64_t p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), e(r * c, 0) {}
  unsigned& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  unsigned at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  std::uint64_t inv_scalar(unsigned x) const {
    std::uint64_t r = 1, b = x, ex = p - 2;
    while (ex) {
      if (ex & 1) r = r * b % p;
      b = b * b % p;
      ex >>= 1;
    }
    return r;
  }

  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
      std::size_t sel = pr;
      while (sel < rows && at(sel, c) == 0) ++sel;
      if (sel == rows) continue;
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(sel, j));
      const std::uint64_t iv = inv_scalar(at(pr, c));
      for (std::size_t j = 0; j < cols; ++j)
        at(pr, j) = static_cast<unsigned>(at(pr, j) * iv % p);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == pr || at(i, c) == 0) continue;
        const std::uint64_t f = at(i, c);
        for (std::size_t j = 0; j < cols; ++j)
          at(i, j) = static_cast<unsigned>((at(i, j) + p * p - f * at(pr, j) % p) % p);
      }
      pivots.push_back(c);
      ++pr;
    }
    return pivots;
  }
};

// Incremental F_p row space used for independence tests.
struct FpSpan {
  std::uint64_t p;
  std::size_t dim;
  std::vector<std::vector<unsigned>> basis;  // reduced rows

  FpSpan(std::uint64_t p_, std::size_t d) : p(p_), dim(d) {}

  std::vector<unsigned> reduce(std::vector<unsigned> v) const {
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (lead < dim && b[lead] == 0) ++lead;
      if (lead < dim && v[lead]) {
        const std::uint64_t f = v[lead];  // b is normalized to lead 1
        for (std::size_t j = lead; j < dim; ++j)
          v[j] = static_cast<unsigned>((v[j] + p * p - f * b[j] % p) % p);
      }
    }
    return v;
  }

  // Returns false when v was already in the span.
  bool insert(std::vector<unsigned> v) {
    v = reduce(std::move(v));
    std::size_t lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    if (lead == dim) return false;
    std::uint64_t ivt = 1, b = v[lead], ex = p - 2;
    while (ex) {
      if (ex & 1) ivt = ivt * b % p;
      b = b * b % p;
      ex >>= 1;
    }
    for (std::size_t j = lead; j < dim; ++j)
      v[j] = static_cast<unsigned>(v[j] * ivt % p);
    basis.push_back(std::move(v));
    std::sort(basis.begin(), basis.end(),
              [this](const auto& x, const auto& y) {
                std::size_t lx = 0, ly = 0;
                while (lx < dim && x[lx] == 0) ++lx;
                while (ly < dim && y[ly] == 0) ++ly;
                return lx < ly;
              });
    return true;
  }
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ExtensionField::ExtensionField(std::uint64_t p, unsigned a, unsigned m,
                               std::vector<unsigned> modulus, unsigned sigma_exp)
    : ExtensionField(p, a, m, std::move(modulus), sigma_exp, Limits{}) {}

ExtensionField::ExtensionField(std::uint64_t p, unsigned a, unsigned m,
                               std::vector<unsigned> modulus, unsigned sigma_exp,
                               Limits limits)
    : p_(p), a_(a), m_(m), sigma_exp_(sigma_exp), limits_(limits) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (a == 0 || m == 0) throw std::invalid_argument("a and m must be positive");
  deg_ = a_ * m_;

  q_ = 1;
  order_ = 1;
  for (unsigned i = 0; i < deg_; ++i) {
    if (order_ > limits_.max_order / p_)
      throw std::invalid_argument("field order exceeds configured limit");
    order_ *= p_;
    if (i < a_) q_ *= p_;
  }

  sigma_exp_ %= m_;
  if (m_ == 1) {
    sigma_exp_ = 0;  // trivial Galois group
  } else if (sigma_exp_ == 0 || std::gcd<unsigned>(sigma_exp_, m_) != 1) {
    throw std::invalid_argument("gcd(sigma_exp, m) must be 1");
  }

  if (modulus.empty()) {
    // Smallest monic irreducible of degree deg_, non-leading coefficients
    // compared through their canonical integer encoding.
    for (felem v = 0; v < order_; ++v) {
      auto c = to_digits(v, p_, deg_);
      c.push_back(1);
      if (is_irreducible(c, p_)) {
        modulus_ = std::move(c);
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
  } else {
    modulus = ptrim(std::move(modulus));
    if (pdeg(modulus) != static_cast<int>(deg_) || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree a*m");
    for (unsigned c : modulus)
      if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p_))
      throw std::invalid_argument("modulus is reducible");
    modulus_ = std::move(modulus);
  }

  if (order_ <= limits_.table_limit) build_tables();
  build_fq_structure();
}

bool ExtensionField::same(const ExtensionField& other) const {
  return p_ == other.p_ && a_ == other.a_ && m_ == other.m_ &&
         modulus_ == other.modulus_ && sigma_exp_ == other.sigma_exp_;
}

felem ExtensionField::add(felem x, felem y) const {
  if (p_ == 2) return x ^ y;
  auto dx = to_digits(x, p_, deg_), dy = to_digits(y, p_, deg_);
  for (unsigned i = 0; i < deg_; ++i) dx[i] = static_cast<unsigned>((dx[i] + dy[i]) % p_);
  return from_digits(dx, p_);
}

felem ExtensionField::neg(felem x) const {
  if (p_ == 2) return x;
  auto d = to_digits(x, p_, deg_);
  for (unsigned i = 0; i < deg_; ++i) d[i] = static_cast<unsigned>((p_ - d[i]) % p_);
  return from_digits(d, p_);
}

felem ExtensionField::sub(felem x, felem y) const { return add(x, neg(y)); }

felem ExtensionField::mul_raw(felem x, felem y) const {
  if (!x || !y) return 0;
  auto dx = to_digits(x, p_, deg_), dy = to_digits(y, p_, deg_);
  std::vector<std::uint64_t> acc(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i) {
    if (!dx[i]) continue;
    for (unsigned j = 0; j < deg_; ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t(dx[i]) * dy[j]) % p_;
  }
  for (std::size_t i = acc.size(); i-- > deg_;) {
    const std::uint64_t c = acc[i];
    if (!c) continue;
    for (unsigned j = 0; j < deg_; ++j)
      acc[i - deg_ + j] = (acc[i - deg_ + j] + p_ * p_ - c * modulus_[j] % p_) % p_;
    acc[i] = 0;
  }
  std::vector<unsigned> out(deg_);
  for (unsigned i = 0; i < deg_; ++i) out[i] = static_cast<unsigned>(acc[i]);
  return from_digits(out, p_);
}

void ExtensionField::build_tables() {
  const std::uint64_t g_order = order_ - 1;
  for (felem cand = 1; cand < order_; ++cand) {
    if (cand < 2 && order_ > 2) continue;
    exp_.assign(g_order, 0);
    felem e = 1;
    std::uint64_t i = 0;
    for (; i < g_order; ++i) {
      exp_[i] = static_cast<std::uint32_t>(e);
      e = mul_raw(e, cand);
      if (e == 1) {
        ++i;
        break;
      }
    }
    if (i == g_order) {
      log_.assign(order_, 0);
      for (std::uint64_t k = 0; k < g_order; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
      has_tables_ = true;
      return;
    }
  }
  throw std::logic_error("no multiplicative generator found");
}

felem ExtensionField::mul(felem x, felem y) const {
  if (!x || !y) return 0;
  if (has_tables_) {
    std::uint64_t s = std::uint64_t(log_[x]) + log_[y];
    const std::uint64_t g = order_ - 1;
    if (s >= g) s -= g;
    return exp_[s];
  }
  return mul_raw(x, y);
}

felem ExtensionField::inv(felem x) const {
  if (!x) throw std::domain_error("inverse of zero");
  if (has_tables_) {
    const std::uint64_t g = order_ - 1;
    return exp_[(g - log_[x]) % g];
  }
  return pow(x, order_ - 2);
}

felem ExtensionField::div(felem x, felem y) const { return mul(x, inv(y)); }

felem ExtensionField::pow(felem x, std::uint64_t e) const {
  if (!x) return e == 0 ? 1 : 0;
  const std::uint64_t g = order_ - 1;
  e %= g;
  if (has_tables_) return exp_[log_[x] * e % g];
  felem r = 1;
  while (e) {
    if (e & 1) r = mul_raw(r, x);
    x = mul_raw(x, x);
    e >>= 1;
  }
  return r;
}

felem ExtensionField::frob_q(felem x, unsigned j) const {
  j %= m_;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j; ++i) e *= q_;
  return pow(x, e);
}

felem ExtensionField::frobenius(felem x, unsigned j) const {
  return frob_q(x, static_cast<unsigned>((std::uint64_t(sigma_exp_) * j) % m_));
}

bool ExtensionField::in_subfield(felem x, unsigned s) const {
  if (s == 0 || m_ % s != 0) throw std::invalid_argument("s must divide m");
  return frob_q(x, s) == x;
}

void ExtensionField::build_fq_structure() {
  // F_p-basis of F_q: kernel of the F_p-linear map e -> e^q - e.
  {
    FpMat L(p_, deg_, deg_);
    for (unsigned j = 0; j < deg_; ++j) {
      felem basis_elem = 1;
      for (unsigned t = 0; t < j; ++t) basis_elem *= p_;  // z^j
      const felem img = sub(pow(basis_elem, q_), basis_elem);
      auto d = to_digits(img, p_, deg_);
      for (unsigned i = 0; i < deg_; ++i) L.at(i, j) = d[i];
    }
    // kernel basis
    auto pivots = L.rref();
    std::vector<bool> is_piv(deg_, false);
    for (auto c : pivots) is_piv[c] = true;
    for (unsigned f = 0; f < deg_ && fp_basis_of_fq_.size() < a_; ++f) {
      if (is_piv[f]) continue;
      std::vector<unsigned> v(deg_, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = static_cast<unsigned>((p_ - L.at(r, f)) % p_);
      fp_basis_of_fq_.push_back(from_digits(v, p_));
    }
    if (fp_basis_of_fq_.size() != a_)
      throw std::logic_error("subfield F_q has wrong dimension");
  }

  // All elements of F_q, sorted by encoding.
  {
    fq_elements_.reserve(static_cast<std::size_t>(q_));
    std::vector<unsigned> c(a_, 0);
    for (std::uint64_t it = 0; it < q_; ++it) {
      felem e = 0;
      for (unsigned i = 0; i < a_; ++i)
        if (c[i]) e = add(e, mul(fp_basis_of_fq_[i], c[i]));
      fq_elements_.push_back(e);
      for (unsigned i = 0; i < a_; ++i) {
        if (++c[i] < p_) break;
        c[i] = 0;
      }
    }
    std::sort(fq_elements_.begin(), fq_elements_.end());
  }

  // Greedy F_q-basis of the field out of the power basis.
  {
    FpSpan span(p_, deg_);
    for (unsigned j = 0; j < deg_ && fq_basis_.size() < m_; ++j) {
      felem b = 1;
      for (unsigned t = 0; t < j; ++t) b *= p_;  // z^j
      if (span.reduce(to_digits(b, p_, deg_)) == std::vector<unsigned>(deg_, 0))
        continue;
      fq_basis_.push_back(b);
      for (felem u : fp_basis_of_fq_) span.insert(to_digits(mul(u, b), p_, deg_));
    }
    if (fq_basis_.size() != m_)
      throw std::logic_error("failed to build F_q-basis of the field");
  }

  // Transition matrix T with columns u_i * b_j, and its inverse.
  {
    FpMat T(p_, deg_, 2 * deg_);
    for (unsigned j = 0; j < m_; ++j)
      for (unsigned i = 0; i < a_; ++i) {
        auto d = to_digits(mul(fp_basis_of_fq_[i], fq_basis_[j]), p_, deg_);
        for (unsigned r = 0; r < deg_; ++r) T.at(r, j * a_ + i) = d[r];
      }
    for (unsigned r = 0; r < deg_; ++r) T.at(r, deg_ + r) = 1;  // augment identity
    auto pivots = T.rref();
    if (pivots.size() != deg_ || pivots.back() >= deg_)
      throw std::logic_error("coordinate transition matrix is singular");
    coord_inv_.assign(deg_ * deg_, 0);
    for (unsigned r = 0; r < deg_; ++r)
      for (unsigned c = 0; c < deg_; ++c) coord_inv_[r * deg_ + c] = T.at(r, deg_ + c);
  }
}

std::vector<felem> ExtensionField::fq_coords(felem x) const {
  const auto d = to_digits(x, p_, deg_);
  std::vector<felem> out(m_, 0);
  for (unsigned j = 0; j < m_; ++j) {
    felem c = 0;
    for (unsigned i = 0; i < a_; ++i) {
      std::uint64_t y = 0;
      const unsigned row = j * a_ + i;
      for (unsigned t = 0; t < deg_; ++t)
        y = (y + std::uint64_t(coord_inv_[row * deg_ + t]) * d[t]) % p_;
      if (y) c = add(c, mul(fp_basis_of_fq_[i], y));
    }
    out[j] = c;
  }
  return out;
}

felem ExtensionField::from_fq_coords(const std::vector<felem>& coords) const {
  if (coords.size() != m_) throw std::invalid_argument("coordinate vector has wrong length");
  felem e = 0;
  for (unsigned j = 0; j < m_; ++j)
    if (coords[j]) e = add(e, mul(coords[j], fq_basis_[j]));
  return e;
}

std::vector<felem> ExtensionField::subfield_fq_basis(unsigned s) const {
  if (s == 0 || m_ % s != 0) throw std::invalid_argument("s must divide m");
  if (order_ > limits_.enum_limit)
    throw std::runtime_error("field too large for full-field scan");
  std::vector<felem> out;
  FpSpan span(p_, deg_);
  for (felem e = 0; e < order_ && out.size() < s; ++e) {
    if (!in_subfield(e, s)) continue;
    if (span.reduce(to_digits(e, p_, deg_)) == std::vector<unsigned>(deg_, 0))
      continue;
    out.push_back(e);
    for (felem u : fp_basis_of_fq_) span.insert(to_digits(mul(u, e), p_, deg_));
  }
  if (out.size() != s) throw std::logic_error("subfield basis not found");
  return out;
}

felem ExtensionField::first_element_in(unsigned s_hi, unsigned s_lo) const {
  if (order_ > limits_.enum_limit)
    throw std::runtime_error("field too large for full-field scan");
  for (felem e = 0; e < order_; ++e)
    if (in_subfield(e, s_hi) && !in_subfield(e, s_lo)) return e;
  throw std::invalid_argument("no element separates the two subfields");
}

std::string ExtensionField::describe() const {
  std::ostringstream os;
  os << "field p=" << p_ << " a=" << a_ << " m=" << m_ << " modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ',';
    os << modulus_[i];
  }
  os << " sigma=" << sigma_exp_;
  return os.str();
}

// --- Matrix ---

Matrix::Matrix(const ExtensionField* field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(const ExtensionField* field, std::size_t n) {
  Matrix I(field, n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Matrix Matrix::transpose() const {
  Matrix T(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix R(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const felem x = at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        R.at(i, j) = field_->add(R.at(i, j), field_->mul(x, rhs.at(k, j)));
    }
  return R;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

std::vector<std::size_t> Matrix::rref() {
  const auto* F = field_;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
    std::size_t sel = pr;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(sel, j));
    const felem iv = F->inv(at(pr, c));
    for (std::size_t j = 0; j < cols_; ++j) at(pr, j) = F->mul(at(pr, j), iv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      const felem f = at(i, c);
      if (!f) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = F->sub(at(i, j), F->mul(f, at(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

unsigned Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<unsigned>(copy.rref().size());
}

felem Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const auto* F = field_;
  Matrix A = *this;
  felem d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && A.at(sel, c) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(A.at(c, j), A.at(sel, j));
      d = F->neg(d);
    }
    d = F->mul(d, A.at(c, c));
    const felem iv = F->inv(A.at(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const felem f = F->mul(A.at(i, c), iv);
      if (!f) continue;
      for (std::size_t j = c; j < cols_; ++j)
        A.at(i, j) = F->sub(A.at(i, j), F->mul(f, A.at(c, j)));
    }
  }
  return d;
}

std::vector<std::vector<felem>> Matrix::kernel() const {
  const auto* F = field_;
  Matrix R = *this;
  const auto pivots = R.rref();
  std::vector<bool> is_piv(cols_, false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<std::vector<felem>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    std::vector<felem> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F->neg(R.at(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

void Matrix::append_row(const std::vector<felem>& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  e_.insert(e_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<felem> Matrix::row(std::size_t i) const {
  return std::vector<felem>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-style recurrence keeps everything in exact integers.
  std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (unsigned i = 0; i <= n; ++i) g[i][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= std::min(i, k); ++j) {
      std::uint64_t qp = 1;
      for (unsigned t = 0; t < j; ++t) qp *= q;
      g[i][j] = g[i - 1][j - 1] + qp * g[i - 1][j];
    }
  return g[n][k];
}

}  // namespace rankcodes

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankcodes {

// Canonical integer encoding of a field element: sum_i c_i p^i over the
// coefficients of the power basis of the modulus root.
using felem = std::uint64_t;

bool is_prime(std::uint64_t n);

// The extension field F_{q^m}, q = p^a, realized as F_p[z]/(modulus) with
// deg(modulus) = a*m.  F_q is the fixed field of (.)^{p^a}.  The defining
// automorphism is sigma = (.)^{q^sigma_exp} with gcd(sigma_exp, m) = 1, so
// sigma generates Gal(F_{q^m}/F_q).
//
// All state is immutable after construction; every operation is a pure
// function, so a field may be shared freely between threads.
class ExtensionField {
 public:
  struct Limits {
    std::uint64_t max_order = std::uint64_t(1) << 32;   // arithmetic cap
    std::uint64_t table_limit = std::uint64_t(1) << 20; // exp/log tables
    std::uint64_t enum_limit = std::uint64_t(1) << 20;  // full-field scans
  };

  // modulus: ascending coefficients over F_p, monic of degree a*m.  When
  // empty, the canonically smallest monic irreducible is chosen: the one
  // whose non-leading coefficients encode the smallest integer sum c_i p^i.
  // Throws std::invalid_argument on a non-prime p, reducible modulus, or
  // sigma_exp with gcd(sigma_exp, m) != 1.
  ExtensionField(std::uint64_t p, unsigned a, unsigned m,
                 std::vector<unsigned> modulus = {}, unsigned sigma_exp = 1);
  ExtensionField(std::uint64_t p, unsigned a, unsigned m,
                 std::vector<unsigned> modulus, unsigned sigma_exp, Limits limits);

  std::uint64_t p() const { return p_; }
  unsigned a() const { return a_; }
  unsigned m() const { return m_; }
  unsigned degree() const { return deg_; }   // a*m
  std::uint64_t q() const { return q_; }     // p^a
  std::uint64_t order() const { return order_; } // q^m
  unsigned sigma_exp() const { return sigma_exp_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  const Limits& limits() const { return limits_; }

  bool same(const ExtensionField& other) const;

  felem add(felem x, felem y) const;
  felem sub(felem x, felem y) const;
  felem neg(felem x) const;
  felem mul(felem x, felem y) const;
  felem inv(felem x) const;           // throws on 0
  felem div(felem x, felem y) const;
  felem pow(felem x, std::uint64_t e) const;

  // x^{q^j}: an arbitrary element of Gal(F_{q^m}/F_q).
  felem frob_q(felem x, unsigned j) const;
  // sigma^j(x) = x^{q^{sigma_exp*j}}.
  felem frobenius(felem x, unsigned j) const;

  // Membership in F_{q^s}; requires s | m.
  bool in_subfield(felem x, unsigned s) const;

  // Fixed F_q-basis of F_{q^m} (m elements), extracted greedily from the
  // power basis.  fq_coords expresses an element in this basis; all
  // coordinates lie in F_q.
  const std::vector<felem>& fq_basis() const { return fq_basis_; }
  std::vector<felem> fq_coords(felem x) const;
  felem from_fq_coords(const std::vector<felem>& coords) const;

  // All q elements of the subfield F_q, sorted by canonical encoding.
  const std::vector<felem>& fq_elements() const { return fq_elements_; }

  // F_q-basis of F_{q^s} (s elements), chosen greedily by scanning the
  // whole field in canonical integer order.  Requires s | m and
  // order() <= enum_limit.
  std::vector<felem> subfield_fq_basis(unsigned s) const;

  // First element (canonical integer order) of F_{q^{s_hi}} \ F_{q^{s_lo}}.
  felem first_element_in(unsigned s_hi, unsigned s_lo) const;

  // `field p=<p> a=<a> m=<m> modulus=<c0,c1,...,1> sigma=<i>`
  std::string describe() const;

 private:
  felem mul_raw(felem x, felem y) const;
  void build_tables();
  void build_fq_structure();

  std::uint64_t p_;
  unsigned a_, m_, deg_;
  std::uint64_t q_, order_;
  std::vector<unsigned> modulus_;
  unsigned sigma_exp_;
  Limits limits_;

  bool has_tables_ = false;
  std::vector<std::uint32_t> exp_;  // size order-1
  std::vector<std::uint32_t> log_;  // size order, log_[0] unused

  std::vector<felem> fp_basis_of_fq_;   // a elements, F_p-basis of F_q
  std::vector<felem> fq_basis_;         // m elements, F_q-basis of field
  std::vector<felem> fq_elements_;      // all q elements of F_q
  std::vector<unsigned> coord_inv_;     // deg x deg over F_p, row-major
};

// Dense matrix over an ExtensionField.  Also used for matrices whose
// entries lie in the F_q subfield (F_q is closed under all row operations).
class Matrix {
 public:
  Matrix() = default;
  Matrix(const ExtensionField* field, std::size_t rows, std::size_t cols);

  static Matrix identity(const ExtensionField* field, std::size_t n);

  const ExtensionField* field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  felem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  felem at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  // In-place reduced row echelon form; deterministic pivots (leftmost
  // column, then topmost row).  Returns the pivot column list.
  std::vector<std::size_t> rref();
  unsigned rank() const;
  felem det() const;  // square only

  // F_q-basis of the right kernel, one column vector per free column of
  // the rref, free columns in ascending order.
  std::vector<std::vector<felem>> kernel() const;

  void append_row(const std::vector<felem>& row);
  std::vector<felem> row(std::size_t i) const;

 private:
  const ExtensionField* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<felem> e_;
};

// [n choose k]_q, the number of k-dim subspaces of F_q^n.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

}  // namespace rankcodes

#pragma once

#include <optional>

#include "rankcodes/codes.hpp"
#include "rankcodes/gf.hpp"

namespace rankcodes {

// C' = sigma'(lambda * C) * A with lambda in F_{q^m}^*, A in GL_n(q) and
// sigma' = (.)^{q^galois_exp} applied entrywise.  The Galois component
// ranges over the full group, not only generators.
struct SemilinearTransform {
  felem lambda = 1;
  unsigned galois_exp = 0;
  Matrix A;  // n x n over F_q, invertible
};

// Applies the transform to each generator row; throws on singular A.
Matrix apply_transform(const Matrix& G, const SemilinearTransform& T);

// Row spans over F_{q^m} coincide (compared via canonical rref).
bool codes_equal(const Matrix& G1, const Matrix& G2);

std::uint64_t gl_order(unsigned n, std::uint64_t q);

// Exhaustive scan with lambda fixed to 1 (scalars are absorbed by the
// F_{q^m}-linearity of the codes), A over all of GL_n(q) in deterministic
// order, and galois_exp over 0..m-1.  Returns the first transform carrying
// G1 onto G2, if any.  Throws when |GL_n(q)| * m exceeds the budget.
std::optional<SemilinearTransform> brute_force_equivalent(
    const Matrix& G1, const Matrix& G2, std::uint64_t budget = std::uint64_t(1) << 28);

// The single-twist family: basis {1 + eta x^{k-1+t}, x, ..., x^{k-1}},
// i.e. ell = 1 with lambda = (1, 0, ..., 0).  eta must be nonzero.
RankCode single_twist_code(const ExtensionField* field, std::vector<felem> alpha,
                           unsigned k, unsigned t, felem eta, bool relaxed_t = false);

// Every generator row lies in the Gabidulin code of dimension k-1+t_l+1 on
// the same evaluation points (degree bound check; structurally always true).
bool gabidulin_supercode_check(const RankCode& code);

}  // namespace rankcodes

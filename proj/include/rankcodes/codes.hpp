#pragma once

#include <string>
#include <vector>

#include "rankcodes/gf.hpp"
#include "rankcodes/skew.hpp"

namespace rankcodes {

// Twist parameters of an l-twisted Gabidulin code.  Row i of lambda holds
// the coefficients (lambda_{i,0}, ..., lambda_{i,k-1}) of the linear map
// lambda_i; eta_i scales the twist at exponent k-1+t_i.  l = 0 means plain
// Gabidulin.
struct TwistSpec {
  std::vector<unsigned> t;                 // strictly increasing hooks
  std::vector<felem> eta;                  // l nonzero elements
  std::vector<std::vector<felem>> lambda;  // l rows of k coefficients

  unsigned ell() const { return static_cast<unsigned>(t.size()); }
};

struct RankCode {
  const ExtensionField* field = nullptr;
  unsigned n = 0, k = 0;
  std::vector<felem> alpha;  // n F_q-independent evaluation points
  TwistSpec twist;
  // Relaxed mode admits t_l = n-k (needed for length n = k+1 single twists);
  // the default is the strict bound t_l < n-k.
  bool relaxed_t = false;
};

// Every violated parameter constraint, empty when valid.  Independence of
// alpha is checked separately in make_code.
std::vector<std::string> validate_params(const ExtensionField* field, unsigned n,
                                         unsigned k, const TwistSpec& twist,
                                         bool relaxed_t = false);

// Throws std::invalid_argument listing all violations.
RankCode make_code(const ExtensionField* field, unsigned n, unsigned k,
                   std::vector<felem> alpha, TwistSpec twist, bool relaxed_t = false);

RankCode gabidulin(const ExtensionField* field, unsigned n, unsigned k,
                   std::vector<felem> alpha);

// The k skew polynomials g_j = x^j + sum_i eta_i lambda_{i,j} x^{k-1+t_i}
// spanning the twisted polynomial space.
std::vector<SkewPoly> basis_polynomials(const RankCode& code);

// k x n matrix with row j = [g_j(alpha_1), ..., g_j(alpha_n)].
Matrix generator_matrix(const RankCode& code);

std::vector<felem> encode(const RankCode& code, const std::vector<felem>& msg);

bool contains(const RankCode& code, const std::vector<felem>& v);

}  // namespace rankcodes

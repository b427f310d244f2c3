#include "rankcodes/codes.hpp"

#include <sstream>
#include <stdexcept>

#include "rankcodes/rank_metric.hpp"

namespace rankcodes {

std::vector<std::string> validate_params(const ExtensionField* field, unsigned n,
                                         unsigned k, const TwistSpec& twist,
                                         bool relaxed_t) {
  std::vector<std::string> out;
  if (!field) {
    out.push_back("field missing");
    return out;
  }
  if (k == 0) out.push_back("k must be positive");
  if (!(k < n)) out.push_back("k < n violated");
  if (!(n <= field->m())) out.push_back("n <= m violated");
  const unsigned ell = twist.ell();
  if (twist.eta.size() != ell || twist.lambda.size() != ell)
    out.push_back("twist vectors t, eta, lambda must have equal length");
  if (n > k && ell > n - k) out.push_back("ell <= n-k violated");
  for (unsigned i = 0; i < ell; ++i) {
    if (twist.t[i] == 0) out.push_back("t_i must be positive");
    if (i > 0 && twist.t[i] <= twist.t[i - 1])
      out.push_back("t must be strictly increasing");
  }
  if (ell > 0 && n > k) {
    const unsigned bound = n - k;
    const unsigned tl = twist.t.back();
    if (relaxed_t ? tl > bound : tl >= bound)
      out.push_back(relaxed_t ? "t_l <= n-k violated" : "t_l < n-k violated");
  }
  for (unsigned i = 0; i < twist.eta.size() && i < ell; ++i)
    if (twist.eta[i] == 0) out.push_back("eta_i must be nonzero");
  for (unsigned i = 0; i < twist.lambda.size() && i < ell; ++i) {
    if (twist.lambda[i].size() != k) {
      out.push_back("lambda row has wrong length");
      continue;
    }
    bool nonzero = false;
    for (felem c : twist.lambda[i]) nonzero = nonzero || c != 0;
    if (!nonzero) out.push_back("lambda row must be nonzero");
  }
  return out;
}

RankCode make_code(const ExtensionField* field, unsigned n, unsigned k,
                   std::vector<felem> alpha, TwistSpec twist, bool relaxed_t) {
  auto violations = validate_params(field, n, k, twist, relaxed_t);
  if (alpha.size() != n) violations.push_back("alpha must have n entries");
  if (violations.empty() && rank_weight(field, alpha) != n)
    violations.push_back("alpha not linearly independent over F_q");
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid code parameters:";
    for (const auto& v : violations) os << ' ' << v << ';';
    throw std::invalid_argument(os.str());
  }
  return RankCode{field, n, k, std::move(alpha), std::move(twist), relaxed_t};
}

RankCode gabidulin(const ExtensionField* field, unsigned n, unsigned k,
                   std::vector<felem> alpha) {
  return make_code(field, n, k, std::move(alpha), TwistSpec{});
}

std::vector<SkewPoly> basis_polynomials(const RankCode& code) {
  const auto* F = code.field;
  std::vector<SkewPoly> out;
  out.reserve(code.k);
  for (unsigned j = 0; j < code.k; ++j) {
    const unsigned top =
        code.twist.ell() ? code.k - 1 + code.twist.t.back() : code.k - 1;
    std::vector<felem> c(std::max(top, j) + 1, 0);
    c[j] = 1;
    for (unsigned i = 0; i < code.twist.ell(); ++i) {
      const unsigned e = code.k - 1 + code.twist.t[i];
      c[e] = F->add(c[e], F->mul(code.twist.eta[i], code.twist.lambda[i][j]));
    }
    out.emplace_back(F, std::move(c));
  }
  return out;
}

Matrix generator_matrix(const RankCode& code) {
  const auto* F = code.field;
  Matrix G(F, code.k, code.n);
  const auto polys = basis_polynomials(code);
  for (unsigned j = 0; j < code.k; ++j)
    for (unsigned i = 0; i < code.n; ++i) G.at(j, i) = op_eval(polys[j], code.alpha[i]);
  return G;
}

std::vector<felem> encode(const RankCode& code, const std::vector<felem>& msg) {
  if (msg.size() != code.k) throw std::invalid_argument("message length must be k");
  const auto* F = code.field;
  const Matrix G = generator_matrix(code);
  std::vector<felem> out(code.n, 0);
  for (unsigned j = 0; j < code.k; ++j) {
    if (!msg[j]) continue;
    for (unsigned i = 0; i < code.n; ++i)
      out[i] = F->add(out[i], F->mul(msg[j], G.at(j, i)));
  }
  return out;
}

bool contains(const RankCode& code, const std::vector<felem>& v) {
  if (v.size() != code.n) throw std::invalid_argument("vector length must be n");
  Matrix M = generator_matrix(code);
  const unsigned base = M.rank();
  M.append_row(v);
  return M.rank() == base;
}

}  // namespace rankcodes

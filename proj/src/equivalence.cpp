#include "rankcodes/equivalence.hpp"

#include <functional>
#include <stdexcept>

namespace rankcodes {

Matrix apply_transform(const Matrix& G, const SemilinearTransform& T) {
  const auto* F = G.field();
  if (T.A.rows() != G.cols() || T.A.cols() != G.cols())
    throw std::invalid_argument("transform matrix shape mismatch");
  if (T.lambda == 0) throw std::invalid_argument("lambda must be nonzero");
  if (T.A.rank() != T.A.rows()) throw std::invalid_argument("singular transform matrix");
  Matrix H(F, G.rows(), G.cols());
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < G.cols(); ++j)
      H.at(i, j) = F->frob_q(F->mul(T.lambda, G.at(i, j)), T.galois_exp);
  return H * T.A;
}

bool codes_equal(const Matrix& G1, const Matrix& G2) {
  if (!G1.field()->same(*G2.field()) || G1.cols() != G2.cols())
    throw std::invalid_argument("codes over different ambient spaces");
  Matrix R1 = G1, R2 = G2;
  const auto p1 = R1.rref(), p2 = R2.rref();
  if (p1.size() != p2.size() || p1 != p2) return false;
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (R1.row(i) != R2.row(i)) return false;
  return true;
}

std::uint64_t gl_order(unsigned n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  std::uint64_t out = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

namespace {

// Enumerates GL_n(q) depth-first by extending independent row lists; row
// candidates run through all q^n vectors in ascending odometer order, so the
// first matrix found by any scan is well-defined.
void for_each_gl(const ExtensionField* F, unsigned n,
                 const std::function<bool(const Matrix&)>& fn) {
  const auto& fq = F->fq_elements();
  const std::uint64_t q = fq.size();
  Matrix A(F, n, n);

  std::function<bool(unsigned, Matrix&)> walk = [&](unsigned depth, Matrix& span) -> bool {
    if (depth == n) return fn(A);
    std::vector<std::size_t> odo(n, 0);
    std::vector<felem> row(n);
    while (true) {
      // skip the all-zero candidate, then test independence
      bool zero = true;
      for (unsigned j = 0; j < n; ++j) {
        row[j] = fq[odo[j]];
        zero = zero && row[j] == 0;
      }
      if (!zero) {
        Matrix test = span;
        test.append_row(row);
        if (test.rank() == depth + 1) {
          for (unsigned j = 0; j < n; ++j) A.at(depth, j) = row[j];
          if (!walk(depth + 1, test)) return false;
        }
      }
      std::size_t pos = 0;
      while (pos < odo.size() && ++odo[pos] == q) odo[pos++] = 0;
      if (pos == odo.size()) return true;
    }
  };
  Matrix empty(F, 0, n);
  walk(0, empty);
}

}  // namespace

std::optional<SemilinearTransform> brute_force_equivalent(const Matrix& G1,
                                                          const Matrix& G2,
                                                          std::uint64_t budget) {
  const auto* F = G1.field();
  const unsigned n = static_cast<unsigned>(G1.cols());
  const std::uint64_t cost = gl_order(n, F->q()) * F->m();
  if (cost > budget) throw std::runtime_error("equivalence search budget exceeded");

  // target canonical form
  Matrix R2 = G2;
  const auto target_piv = R2.rref();

  // sigma'(G1) for every Galois exponent, lambda fixed to 1
  std::vector<Matrix> frobbed;
  for (unsigned j = 0; j < F->m(); ++j) {
    Matrix H(F, G1.rows(), G1.cols());
    for (std::size_t r = 0; r < G1.rows(); ++r)
      for (std::size_t c = 0; c < G1.cols(); ++c)
        H.at(r, c) = F->frob_q(G1.at(r, c), j);
    frobbed.push_back(std::move(H));
  }

  std::optional<SemilinearTransform> found;
  for_each_gl(F, n, [&](const Matrix& A) {
    for (unsigned j = 0; j < F->m(); ++j) {
      Matrix R = frobbed[j] * A;
      const auto piv = R.rref();
      bool eq = piv == target_piv;
      for (std::size_t r = 0; eq && r < piv.size(); ++r)
        eq = R.row(r) == R2.row(r);
      if (eq) {
        found = SemilinearTransform{1, j, A};
        return false;
      }
    }
    return true;
  });
  return found;
}

RankCode single_twist_code(const ExtensionField* field, std::vector<felem> alpha,
                           unsigned k, unsigned t, felem eta, bool relaxed_t) {
  if (eta == 0)
    throw std::invalid_argument("eta must be nonzero; use the Gabidulin constructor");
  TwistSpec twist;
  twist.t = {t};
  twist.eta = {eta};
  twist.lambda = {std::vector<felem>(k, 0)};
  twist.lambda[0][0] = 1;
  const unsigned n = static_cast<unsigned>(alpha.size());
  return make_code(field, n, k, std::move(alpha), std::move(twist), relaxed_t);
}

bool gabidulin_supercode_check(const RankCode& code) {
  const unsigned super_k =
      code.twist.ell() ? code.k + code.twist.t.back() : code.k;
  if (super_k >= code.n) return true;  // supercode is the whole degree range
  const RankCode super = gabidulin(code.field, code.n, super_k, code.alpha);
  const Matrix G = generator_matrix(code);
  for (std::size_t r = 0; r < G.rows(); ++r)
    if (!contains(super, G.row(r))) return false;
  return true;
}

}  // namespace rankcodes

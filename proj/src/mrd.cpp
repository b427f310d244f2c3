#include "rankcodes/mrd.hpp"

#include <sstream>
#include <stdexcept>

namespace rankcodes {

namespace {

// a_{i} of A_S with the out-of-range convention a_i = 0 for i < 0 or i > k.
felem ann_coeff(const SkewPoly& ann, int i) {
  if (i < 0 || i > ann.deg()) return 0;
  return ann.coeff(static_cast<unsigned>(i));
}

// index kappa (1-based) with i = k-1+t_kappa, or 0 if i is not a twist row
unsigned twist_row(const RankCode& code, unsigned i) {
  for (unsigned kappa = 0; kappa < code.twist.ell(); ++kappa)
    if (i == code.k - 1 + code.twist.t[kappa]) return kappa + 1;
  return 0;
}

}  // namespace

LemmaSystem build_system(const RankCode& code, const SubspaceBasis& S) {
  const auto* F = code.field;
  if (code.twist.ell() == 0)
    throw std::invalid_argument("build_system needs at least one twist");
  if (S.dim() != code.k) throw std::invalid_argument("subspace dimension must be k");
  {
    Matrix T = expand(F, code.alpha).transpose();  // n x m over F_q
    const unsigned base = T.rank();
    for (felem s : S.elems) T.append_row(F->fq_coords(s));
    if (T.rank() != base)
      throw std::invalid_argument("subspace not contained in the span of alpha");
  }

  LemmaSystem sys{canonicalize(S), annihilator(F, S.elems), Matrix{}};
  const unsigned tl = code.twist.t.back();
  sys.B = Matrix(F, tl, tl);
  for (unsigned r = 0; r < tl; ++r) {
    const unsigned i = code.k + r;
    const unsigned kappa = twist_row(code, i);
    for (unsigned j = 0; j < tl; ++j) {
      const felem base = F->frobenius(ann_coeff(sys.annihilator, static_cast<int>(i) - static_cast<int>(j)), j);
      if (kappa == 0) {
        sys.B.at(r, j) = base;
      } else {
        felem e = F->mul(F->inv(code.twist.eta[kappa - 1]), base);
        for (unsigned mu = 0; mu < code.k; ++mu) {
          const felem am = ann_coeff(sys.annihilator, static_cast<int>(mu) - static_cast<int>(j));
          if (am)
            e = F->sub(e, F->mul(code.twist.lambda[kappa - 1][mu], F->frobenius(am, j)));
        }
        sys.B.at(r, j) = e;
      }
    }
  }
  return sys;
}

MrdVerdict is_mrd(const RankCode& code, std::uint64_t max_subspaces) {
  if (code.twist.ell() == 0) return {true, std::nullopt};  // Gabidulin
  const auto* F = code.field;
  if (gaussian_binomial(code.n, code.k, F->q()) > max_subspaces)
    throw std::runtime_error("enumeration budget exceeded: too many subspaces");

  MrdVerdict verdict;
  for_each_subspace(F, code.alpha, code.k, [&](const SubspaceBasis& S) {
    LemmaSystem sys = build_system(code, S);
    if (sys.B.det() != 0) return true;

    const auto kernel = sys.B.kernel();
    if (kernel.empty()) throw std::logic_error("singular system with trivial kernel");
    MrdWitness w;
    w.S = sys.S;
    w.g = kernel.front();
    w.f = skew_mul(SkewPoly(F, w.g), sys.annihilator);
    // consistency: f must lie in the twisted polynomial space
    for (unsigned i = code.k; static_cast<int>(i) <= w.f.deg(); ++i) {
      const unsigned kappa = twist_row(code, i);
      felem expected = 0;
      if (kappa) {
        for (unsigned mu = 0; mu < code.k; ++mu)
          expected = F->add(expected, F->mul(code.twist.lambda[kappa - 1][mu], w.f.coeff(mu)));
        expected = F->mul(code.twist.eta[kappa - 1], expected);
      }
      if (w.f.coeff(i) != expected)
        throw std::logic_error("witness polynomial violates the twist constraints");
    }
    w.codeword.resize(code.n);
    for (unsigned i = 0; i < code.n; ++i) w.codeword[i] = op_eval(w.f, code.alpha[i]);
    w.rank = rank_weight(F, w.codeword);
    if (w.rank > code.n - code.k)
      throw std::logic_error("witness codeword rank exceeds n-k");
    verdict.is_mrd = false;
    verdict.witness = std::move(w);
    return false;
  });
  return verdict;
}

void validate_chain(const ExtensionField* field, const SubfieldChain& chain, unsigned n) {
  const auto& s = chain.s;
  if (s.empty()) throw std::invalid_argument("empty subfield chain");
  if (s.back() != field->m()) throw std::invalid_argument("chain must end at m");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] <= s[i - 1] || s[i] % s[i - 1] != 0)
      throw std::invalid_argument("chain entries must strictly increase and divide");
  }
  if (field->m() % s[0] != 0)
    throw std::invalid_argument("s_0 must divide m");
  if (n > s[0]) throw std::invalid_argument("n <= s_0 violated");
}

RankCode construct_theorem2(const ExtensionField* field, const SubfieldChain& chain,
                            unsigned n, unsigned k, const std::vector<unsigned>& t,
                            std::vector<std::vector<felem>> lambda,
                            std::vector<felem> eta) {
  validate_chain(field, chain, n);
  const unsigned ell = chain.ell();
  if (t.size() != ell)
    throw std::invalid_argument("number of twists must match the chain length");
  if (ell == 0) {
    auto alpha0 = field->subfield_fq_basis(chain.s[0]);
    alpha0.resize(n);
    return gabidulin(field, n, k, std::move(alpha0));
  }

  auto basis = field->subfield_fq_basis(chain.s[0]);
  std::vector<felem> alpha(basis.begin(), basis.begin() + n);

  if (lambda.empty()) {
    lambda.assign(ell, std::vector<felem>(k, 0));
    for (auto& row : lambda) row[0] = 1;  // twist on f_0
  }
  for (const auto& row : lambda)
    for (felem c : row)
      if (!field->in_subfield(c, chain.s[0]))
        throw std::invalid_argument("lambda entry outside F_{q^{s_0}}");

  if (eta.empty()) {
    for (unsigned i = 1; i <= ell; ++i)
      eta.push_back(field->first_element_in(chain.s[i], chain.s[i - 1]));
  } else {
    if (eta.size() != ell) throw std::invalid_argument("eta has wrong length");
    for (unsigned i = 1; i <= ell; ++i)
      if (!field->in_subfield(eta[i - 1], chain.s[i]) ||
          field->in_subfield(eta[i - 1], chain.s[i - 1]))
        throw std::invalid_argument("eta_i must lie in F_{q^{s_i}} \\ F_{q^{s_{i-1}}}");
  }

  TwistSpec twist{t, std::move(eta), std::move(lambda)};
  return make_code(field, n, k, std::move(alpha), std::move(twist), /*relaxed_t=*/false);
}

CorollaryParams corollary_max_length(unsigned m, unsigned ell) {
  CorollaryParams out;
  if (ell == 0) {
    out.n = m;
    out.chain.s = {m};
    return out;
  }
  const unsigned div = 1u << ell;
  if (m % div != 0) throw std::invalid_argument("2^ell must divide m");
  out.n = m / div;
  for (unsigned i = 0; i <= ell; ++i) out.chain.s.push_back(out.n << i);
  return out;
}

SearchResult theorem2_search(unsigned m, unsigned ell) {
  SearchResult res;
  res.corollary = corollary_max_length(m, ell);
  const unsigned n = res.corollary.n;
  for (unsigned k = 1; k < n; ++k) {
    if (ell > n - k) continue;
    // strictly increasing ell-tuples inside [1, n-k-1]
    if (ell == 0) {
      res.entries.push_back({n, k, {}});
      continue;
    }
    if (n - k < 2) continue;
    const unsigned hi = n - k - 1;
    if (hi < ell) continue;
    std::vector<unsigned> t(ell);
    for (unsigned i = 0; i < ell; ++i) t[i] = i + 1;
    while (true) {
      res.entries.push_back({n, k, t});
      int i = static_cast<int>(ell) - 1;
      while (i >= 0 && t[static_cast<unsigned>(i)] == hi - (ell - 1 - static_cast<unsigned>(i)))
        --i;
      if (i < 0) break;
      ++t[static_cast<unsigned>(i)];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < ell; ++j) t[j] = t[j - 1] + 1;
    }
  }
  return res;
}

}  // namespace rankcodes

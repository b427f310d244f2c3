#pragma once

#include <optional>
#include <vector>

#include "rankcodes/codes.hpp"
#include "rankcodes/rank_metric.hpp"
#include "rankcodes/skew.hpp"

namespace rankcodes {

// The t_l x t_l homogeneous system attached to a k-dimensional subspace S
// of the span of the evaluation points.  Row r corresponds to coefficient
// index i = k + r of f = g * A_S, column j to the unknown g_j.
struct LemmaSystem {
  SubspaceBasis S;
  SkewPoly annihilator;  // A_S, monic of degree k
  Matrix B;
};

struct MrdWitness {
  SubspaceBasis S;
  std::vector<felem> g;       // nonzero kernel vector of B_S
  SkewPoly f;                 // g * A_S, member of the twisted space
  std::vector<felem> codeword;
  unsigned rank = 0;          // <= n-k
};

struct MrdVerdict {
  bool is_mrd = true;
  std::optional<MrdWitness> witness;
};

LemmaSystem build_system(const RankCode& code, const SubspaceBasis& S);

// Determinant scan over all k-dim subspaces of <alpha>.  Codes with no
// twists are MRD unconditionally and return immediately.  Throws when the
// subspace count exceeds max_subspaces.
MrdVerdict is_mrd(const RankCode& code,
                  std::uint64_t max_subspaces = std::uint64_t(1) << 20);

// Tower F_{q^{s_0}} c ... c F_{q^{s_l}} = F_{q^m} with strict divisibility
// steps after s_0.
struct SubfieldChain {
  std::vector<unsigned> s;

  unsigned ell() const { return static_cast<unsigned>(s.size()) - 1; }
};

// Throws unless s_0 | s_1 | ... | s_l = m with strict increases and n <= s_0.
void validate_chain(const ExtensionField* field, const SubfieldChain& chain, unsigned n);

// Guaranteed-MRD construction: alpha = first n elements of the canonical
// F_q-basis of F_{q^{s_0}}, lambda entries in F_{q^{s_0}} (default: unit
// rows picking f_0), eta_i the first element of F_{q^{s_i}} \ F_{q^{s_{i-1}}}
// in canonical integer order unless provided.  Strict t bound only.
RankCode construct_theorem2(const ExtensionField* field, const SubfieldChain& chain,
                            unsigned n, unsigned k, const std::vector<unsigned>& t,
                            std::vector<std::vector<felem>> lambda = {},
                            std::vector<felem> eta = {});

struct CorollaryParams {
  unsigned n = 0;
  SubfieldChain chain;
};

// n = m / 2^l with the doubling chain s_i = n * 2^i; requires 2^l | m.
CorollaryParams corollary_max_length(unsigned m, unsigned ell);

struct SearchEntry {
  unsigned n = 0, k = 0;
  std::vector<unsigned> t;
};

struct SearchResult {
  CorollaryParams corollary;
  std::vector<SearchEntry> entries;  // all (k, t) valid at length n
};

// All complete parameter sets at the corollary length for the given number
// of twists.
SearchResult theorem2_search(unsigned m, unsigned ell);

}  // namespace rankcodes

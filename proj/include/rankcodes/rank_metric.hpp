#pragma once

#include <functional>
#include <vector>

#include "rankcodes/codes.hpp"
#include "rankcodes/gf.hpp"

namespace rankcodes {

// F_q-independent elements of F_{q^m}.  canonicalize() puts the coefficient
// matrix (w.r.t. the field's fixed F_q-basis) in reduced row echelon form.
struct SubspaceBasis {
  const ExtensionField* field = nullptr;
  std::vector<felem> elems;

  unsigned dim() const { return static_cast<unsigned>(elems.size()); }
};

SubspaceBasis canonicalize(const SubspaceBasis& s);

// m x n matrix over F_q; column i holds the coordinates of v[i] w.r.t. the
// field's F_q-basis.
Matrix expand(const ExtensionField* field, const std::vector<felem>& v);
std::vector<felem> contract(const Matrix& M);

unsigned rank_weight(const ExtensionField* field, const std::vector<felem>& v);

// Calls fn once per k-dimensional F_q-subspace of the span of `ambient`
// (which must be independent), each in canonical rref form, in a fixed
// deterministic order.  fn returning false stops the enumeration; the
// return value tells whether the scan ran to completion.
bool for_each_subspace(const ExtensionField* field, const std::vector<felem>& ambient,
                       unsigned k, const std::function<bool(const SubspaceBasis&)>& fn);

// Exact minimum rank distance by enumerating all q^{mk}-1 nonzero messages.
// Throws when q^{mk} exceeds the cap.
unsigned min_rank_distance_bruteforce(const RankCode& code,
                                      std::uint64_t cap = std::uint64_t(1) << 24);

// counts[r] = number of codewords of rank weight r (the zero word counts at
// rank 0).  Same enumeration cap as the distance oracle.
std::vector<std::uint64_t> rank_weight_distribution(const RankCode& code,
                                                    std::uint64_t cap = std::uint64_t(1) << 24);

}  // namespace rankcodes

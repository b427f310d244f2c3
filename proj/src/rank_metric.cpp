#include "rankcodes/rank_metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankcodes {

namespace {

// Rank over F_2 of bit-packed elements (one m-bit row per entry).
unsigned bit_rank(const std::vector<felem>& v) {
  std::vector<felem> pivots;
  unsigned r = 0;
  for (felem w : v) {
    for (felem p : pivots) {
      const felem top = felem(1) << (63 - __builtin_clzll(p));
      if (w & top) w ^= p;
    }
    if (w) {
      pivots.push_back(w);
      std::sort(pivots.rbegin(), pivots.rend());
      ++r;
    }
  }
  return r;
}

std::uint64_t checked_message_count(const RankCode& code, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < code.k; ++i) {
    if (total > cap / code.field->order())
      throw std::runtime_error("enumeration budget exceeded: q^{mk} > cap");
    total *= code.field->order();
  }
  if (total > cap) throw std::runtime_error("enumeration budget exceeded: q^{mk} > cap");
  return total;
}

// Visits every codeword (including zero) once; fn returning false stops.
void for_each_codeword(const RankCode& code,
                       const std::function<bool(const std::vector<felem>&)>& fn) {
  const auto* F = code.field;
  const Matrix G = generator_matrix(code);
  const std::uint64_t Q = F->order();
  std::vector<std::vector<felem>> rows;
  for (unsigned j = 0; j < code.k; ++j) rows.push_back(G.row(j));

  std::vector<felem> word(code.n, 0);
  bool stop = false;
  // depth-first over message digits, keeping partial sums per level
  std::function<void(unsigned, const std::vector<felem>&)> walk =
      [&](unsigned depth, const std::vector<felem>& partial) {
        if (stop) return;
        if (depth == code.k) {
          if (!fn(partial)) stop = true;
          return;
        }
        std::vector<felem> next(code.n);
        for (felem d = 0; d < Q && !stop; ++d) {
          if (d == 0) {
            walk(depth + 1, partial);
            continue;
          }
          for (unsigned i = 0; i < code.n; ++i)
            next[i] = F->add(partial[i], F->mul(d, rows[depth][i]));
          walk(depth + 1, next);
        }
      };
  walk(0, word);
}

}  // namespace

SubspaceBasis canonicalize(const SubspaceBasis& s) {
  const auto* F = s.field;
  Matrix M(F, s.elems.size(), F->m());
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    const auto c = F->fq_coords(s.elems[i]);
    for (unsigned j = 0; j < F->m(); ++j) M.at(i, j) = c[j];
  }
  const auto pivots = M.rref();
  if (pivots.size() != s.elems.size())
    throw std::invalid_argument("subspace basis is dependent");
  SubspaceBasis out{F, {}};
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.elems.push_back(F->from_fq_coords(M.row(i)));
  return out;
}

Matrix expand(const ExtensionField* field, const std::vector<felem>& v) {
  Matrix M(field, field->m(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = field->fq_coords(v[i]);
    for (unsigned j = 0; j < field->m(); ++j) M.at(j, i) = c[j];
  }
  return M;
}

std::vector<felem> contract(const Matrix& M) {
  const auto* F = M.field();
  if (M.rows() != F->m()) throw std::invalid_argument("expanded matrix must have m rows");
  std::vector<felem> out(M.cols());
  std::vector<felem> col(F->m());
  for (std::size_t i = 0; i < M.cols(); ++i) {
    for (unsigned j = 0; j < F->m(); ++j) col[j] = M.at(j, i);
    out[i] = F->from_fq_coords(col);
  }
  return out;
}

unsigned rank_weight(const ExtensionField* field, const std::vector<felem>& v) {
  if (field->p() == 2 && field->a() == 1) return bit_rank(v);
  return expand(field, v).rank();
}

bool for_each_subspace(const ExtensionField* field, const std::vector<felem>& ambient,
                       unsigned k, const std::function<bool(const SubspaceBasis&)>& fn) {
  const unsigned n = static_cast<unsigned>(ambient.size());
  if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  if (k == 0) {
    return fn(SubspaceBasis{field, {}});
  }
  const auto& fq = field->fq_elements();

  // pivot columns in lexicographic order
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  bool more = true;
  while (more) {
    std::vector<bool> is_piv(n, false);
    for (unsigned c : piv) is_piv[c] = true;
    // free rref positions: (row i, col j) with j > piv[i] and j not a pivot
    std::vector<std::pair<unsigned, unsigned>> free_pos;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);

    std::vector<std::size_t> odo(free_pos.size(), 0);
    while (true) {
      SubspaceBasis s{field, {}};
      for (unsigned i = 0; i < k; ++i) {
        std::vector<felem> coeff(n, 0);
        coeff[piv[i]] = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f)
          if (free_pos[f].first == i) coeff[free_pos[f].second] = fq[odo[f]];
        felem e = 0;
        for (unsigned j = 0; j < n; ++j)
          if (coeff[j]) e = field->add(e, field->mul(coeff[j], ambient[j]));
        s.elems.push_back(e);
      }
      if (!fn(s)) return false;

      std::size_t pos = 0;
      while (pos < odo.size() && ++odo[pos] == fq.size()) odo[pos++] = 0;
      if (pos == odo.size()) break;
    }

    // next pivot combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && piv[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) {
      more = false;
    } else {
      ++piv[static_cast<unsigned>(i)];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j)
        piv[j] = piv[j - 1] + 1;
    }
  }
  return true;
}

unsigned min_rank_distance_bruteforce(const RankCode& code, std::uint64_t cap) {
  checked_message_count(code, cap);
  const auto* F = code.field;
  unsigned best = code.n + 1;
  for_each_codeword(code, [&](const std::vector<felem>& w) {
    bool zero = true;
    for (felem x : w) zero = zero && x == 0;
    if (zero) return true;
    best = std::min(best, rank_weight(F, w));
    return best > 1;  // rank 1 is the floor for nonzero words
  });
  return best;
}

std::vector<std::uint64_t> rank_weight_distribution(const RankCode& code, std::uint64_t cap) {
  checked_message_count(code, cap);
  const auto* F = code.field;
  std::vector<std::uint64_t> counts(std::min<unsigned>(code.n, F->m()) + 1, 0);
  for_each_codeword(code, [&](const std::vector<felem>& w) {
    ++counts[rank_weight(F, w)];
    return true;
  });
  return counts;
}

}  // namespace rankcodes

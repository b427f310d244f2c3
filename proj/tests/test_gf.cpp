#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rankcodes/gf.hpp"

using namespace rankcodes;

namespace {

// Independent irreducibility oracle: a monic degree-d polynomial over F_p is
// reducible iff it is a product of two smaller monic polynomials.  Checked by
// trial division with every monic polynomial of degree 1..d/2.
bool irreducible_by_trial_division(const std::vector<unsigned>& f, std::uint64_t p) {
  const unsigned d = static_cast<unsigned>(f.size()) - 1;
  auto divides = [&](const std::vector<unsigned>& g) {
    // long division of f by monic g over F_p
    std::vector<unsigned> r = f;
    const unsigned dg = static_cast<unsigned>(g.size()) - 1;
    for (int i = static_cast<int>(d); i >= static_cast<int>(dg); --i) {
      const std::uint64_t c = r[static_cast<unsigned>(i)];
      if (!c) continue;
      for (unsigned j = 0; j <= dg; ++j) {
        auto& t = r[static_cast<unsigned>(i) - dg + j];
        t = static_cast<unsigned>((t + p * p - c * g[j] % p) % p);
      }
    }
    for (unsigned ci : r)
      if (ci) return false;
    return true;
  };
  for (unsigned dg = 1; dg <= d / 2; ++dg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<unsigned> g(dg + 1, 0);
      std::uint64_t t = v;
      for (unsigned i = 0; i < dg; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[dg] = 1;
      if (divides(g)) return false;
    }
  }
  return true;
}

// Laplace cofactor expansion, the independent determinant oracle.
felem det_laplace(const Matrix& M, std::vector<bool> cols_used, std::size_t row) {
  const auto* F = M.field();
  if (row == M.rows()) return 1;
  felem acc = 0;
  bool negate = false;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    if (cols_used[c]) continue;
    const felem x = M.at(row, c);
    if (x) {
      cols_used[c] = true;
      felem term = F->mul(x, det_laplace(M, cols_used, row + 1));
      cols_used[c] = false;
      if (negate) term = F->neg(term);
      acc = F->add(acc, term);
    }
    negate = !negate;
  }
  return acc;
}

}  // namespace

TEST_CASE("prime field F_2") {
  ExtensionField F(2, 1, 1);
  CHECK(F.order() == 2);
  CHECK(F.add(1, 1) == 0);
  CHECK(F.mul(1, 1) == 1);
  CHECK(F.sigma_exp() == 0);  // trivial Galois group for m = 1
}

TEST_CASE("F_4 with explicit modulus z^2+z+1") {
  ExtensionField F(2, 1, 2, {1, 1, 1});
  const felem w = 2;  // the root z
  CHECK(F.mul(w, w) == F.add(w, 1));      // w^2 = w + 1
  CHECK(F.frobenius(w, 1) == F.mul(w, w));  // sigma = (.)^2
}

TEST_CASE("default modulus of F_16 is z^4+z+1") {
  ExtensionField F(2, 1, 4);
  CHECK(F.modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});

  // oracle: scan all 16 monic degree-4 candidates in encoding order
  std::vector<unsigned> expected;
  for (std::uint64_t v = 0; v < 16; ++v) {
    std::vector<unsigned> f{static_cast<unsigned>(v & 1), static_cast<unsigned>((v >> 1) & 1),
                            static_cast<unsigned>((v >> 2) & 1), static_cast<unsigned>((v >> 3) & 1), 1};
    if (irreducible_by_trial_division(f, 2)) {
      expected = f;
      break;
    }
  }
  CHECK(F.modulus() == expected);
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(ExtensionField(4, 1, 2), std::invalid_argument);          // p not prime
  CHECK_THROWS_AS(ExtensionField(2, 1, 4, {1, 1, 0, 0, 1}, 2), std::invalid_argument);  // gcd(2,4)!=1
  CHECK_THROWS_AS(ExtensionField(2, 1, 2, {1, 0, 1}), std::invalid_argument);  // z^2+1 reducible
}

TEST_CASE("field axioms on random samples") {
  ExtensionField F(2, 1, 8);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const felem a = dist(rng), b = dist(rng), c = dist(rng);
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("field axioms over an odd characteristic") {
  ExtensionField F(3, 1, 3);
  CHECK(F.order() == 27);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const felem a = dist(rng), b = dist(rng), c = dist(rng);
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("frobenius is a ring automorphism fixing F_q") {
  ExtensionField F(2, 2, 3);  // F_{4^3} = F_64 over F_4
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const felem a = dist(rng), b = dist(rng);
    CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
    CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
    CHECK(F.frobenius(a, F.m()) == a);
    CHECK(F.frobenius(a, 0) == a);
  }
  for (felem e : F.fq_elements()) CHECK(F.frobenius(e, 1) == e);
}

TEST_CASE("subfield membership counts") {
  ExtensionField F(2, 1, 4);  // F_16
  unsigned count_s2 = 0, count_s1 = 0;
  for (felem e = 0; e < F.order(); ++e) {
    if (F.in_subfield(e, 2)) ++count_s2;
    if (F.in_subfield(e, 1)) ++count_s1;
  }
  CHECK(count_s2 == 4);
  CHECK(count_s1 == 2);
  CHECK(F.in_subfield(1, 2));
  CHECK_THROWS_AS(F.in_subfield(1, 3), std::invalid_argument);

  // an order-3 element is the embedded F_4 generator; a primitive element
  // (order 15) lies in no proper subfield
  felem omega = 0, prim = 0;
  for (felem e = 2; e < F.order(); ++e) {
    felem x = e;
    unsigned order = 1;
    while (x != 1) {
      x = F.mul(x, e);
      ++order;
    }
    if (order == 3 && !omega) omega = e;
    if (order == 15 && !prim) prim = e;
  }
  CHECK(F.in_subfield(omega, 2));
  CHECK_FALSE(F.in_subfield(omega, 1));
  CHECK_FALSE(F.in_subfield(prim, 2));
}

TEST_CASE("fq coordinates round-trip") {
  const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> cases{
      {2, 1, 6}, {2, 2, 3}, {3, 1, 3}};
  for (auto [p, a, m] : cases) {
    ExtensionField F(p, a, m);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<felem> dist(0, F.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const felem e = dist(rng);
      const auto c = F.fq_coords(e);
      REQUIRE(c.size() == m);
      for (felem ci : c) CHECK(F.in_subfield(ci, 1));
      CHECK(F.from_fq_coords(c) == e);
    }
  }
}

TEST_CASE("matrix rank and rref") {
  ExtensionField F(2, 1, 4);
  Matrix I = Matrix::identity(&F, 3);
  CHECK(I.rank() == 3);
  Matrix Z(&F, 3, 3);
  CHECK(Z.rank() == 0);
  Matrix M(&F, 2, 2);
  M.at(0, 0) = M.at(0, 1) = M.at(1, 0) = M.at(1, 1) = 1;
  CHECK(M.rank() == 1);
  CHECK(M.rank() == M.transpose().rank());
}

TEST_CASE("rank equals transposed rank on random matrices") {
  ExtensionField F(2, 1, 4);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int it = 0; it < 200; ++it) {
    Matrix M(&F, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) M.at(i, j) = dist(rng);
    CHECK(M.rank() == M.transpose().rank());
  }
}

TEST_CASE("determinant") {
  ExtensionField F(2, 1, 4);
  CHECK(Matrix::identity(&F, 4).det() == 1);
  Matrix S(&F, 2, 2);
  S.at(0, 1) = S.at(1, 0) = 1;
  CHECK(S.det() == F.neg(1));

  std::mt19937_64 rng(29);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int it = 0; it < 100; ++it) {
    Matrix M(&F, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) M.at(i, j) = dist(rng);
    CHECK(M.det() == det_laplace(M, std::vector<bool>(4, false), 0));
  }
  // multiplicativity
  for (int it = 0; it < 200; ++it) {
    Matrix A(&F, 3, 3), B(&F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        A.at(i, j) = dist(rng);
        B.at(i, j) = dist(rng);
      }
    CHECK((A * B).det() == F.mul(A.det(), B.det()));
  }
}

TEST_CASE("determinant oracle in odd characteristic") {
  ExtensionField F(3, 1, 2);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<felem> dist(0, F.order() - 1);
  for (int it = 0; it < 100; ++it) {
    Matrix M(&F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) M.at(i, j) = dist(rng);
    CHECK(M.det() == det_laplace(M, std::vector<bool>(3, false), 0));
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(6, 2, 2) == 651);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
}

TEST_CASE("field line description") {
  ExtensionField F(2, 1, 4);
  CHECK(F.describe() == "field p=2 a=1 m=4 modulus=1,1,0,0,1 sigma=1");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "rankcodes/io.hpp"

using namespace rankcodes;

TEST_CASE("field line round-trip") {
  const std::string line = "field p=2 a=1 m=4 modulus=1,1,0,0,1 sigma=1";
  const auto F = parse_field_line(line);
  CHECK(F->describe() == line);
  CHECK(F->order() == 16);

  const auto G = parse_field_line("field p=3 a=1 m=2 modulus=1,0,1 sigma=1");
  CHECK(G->p() == 3);
  CHECK(G->m() == 2);

  CHECK_THROWS_AS(parse_field_line("code n=4 k=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_line("field p=2 a=1 modulus=1,1,1 sigma=1"),
                  std::invalid_argument);  // missing m
  CHECK_THROWS_AS(parse_field_line("field p=2 a=1 m=2 modulus=1,0,1 sigma=1"),
                  std::invalid_argument);  // reducible modulus
}

TEST_CASE("code file round-trip is byte identical") {
  const std::string text =
      "field p=2 a=1 m=4 modulus=1,1,0,0,1 sigma=1\n"
      "code n=4 k=2\n"
      "alpha 1 2 4 8\n"
      "twist t=1 eta=9 lambda=1,0\n";
  std::istringstream in(text);
  const CodeFile cf = read_code_file(in);
  CHECK(cf.code.n == 4);
  CHECK(cf.code.k == 2);
  CHECK(cf.code.alpha == std::vector<felem>{1, 2, 4, 8});
  REQUIRE(cf.code.twist.ell() == 1);
  CHECK(cf.code.twist.eta[0] == 9);
  CHECK(cf.code.twist.lambda[0] == std::vector<felem>{1, 0});

  std::ostringstream out;
  write_code_file(out, cf.code);
  CHECK(out.str() == text);

  // and a second pass through the serialized form parses identically
  std::istringstream in2(out.str());
  std::ostringstream out2;
  write_code_file(out2, read_code_file(in2).code);
  CHECK(out2.str() == text);
}

TEST_CASE("comments and blank lines are skipped") {
  const std::string text =
      "# header comment\n"
      "\n"
      "field p=2 a=1 m=4 modulus=1,1,0,0,1 sigma=1  # trailing\n"
      "code n=4 k=2\n"
      "\n"
      "alpha 1 2 4 8\n";
  std::istringstream in(text);
  const CodeFile cf = read_code_file(in);
  CHECK(cf.code.twist.ell() == 0);
  CHECK(cf.code.alpha.size() == 4);
}

TEST_CASE("parse errors") {
  auto parse = [](const std::string& s, bool relaxed = false) {
    std::istringstream in(s);
    return read_code_file(in, relaxed);
  };
  const std::string field = "field p=2 a=1 m=4 modulus=1,1,0,0,1 sigma=1\n";

  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse(field), std::invalid_argument);                     // no code line
  CHECK_THROWS_AS(parse(field + "code n=4 k=2\n"), std::invalid_argument);  // no alpha
  CHECK_THROWS_AS(parse(field + "alpha 1 2\ncode n=2 k=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse(field + "code n=4 k=2\nalpha 1 2 4 8\nbogus t=1\n"),
                  std::invalid_argument);
  // invalid parameters surface through construction
  CHECK_THROWS_AS(parse(field + "code n=4 k=2\nalpha 1 2 4 7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse(field + "code n=4 k=2\nalpha 1 2 4 8\ntwist t=2 eta=1 lambda=1,0\n"),
                  std::invalid_argument);
  // ...unless relaxed mode admits t = n-k
  CHECK_NOTHROW(parse(field + "code n=4 k=2\nalpha 1 2 4 8\ntwist t=2 eta=1 lambda=1,0\n", true));

  CHECK_THROWS_AS(read_code_file("/nonexistent/path/code.txt"), std::runtime_error);
}

TEST_CASE("generator serialization") {
  ExtensionField F(2, 1, 4);
  Matrix G(&F, 2, 3);
  G.at(0, 0) = 1;
  G.at(0, 1) = 2;
  G.at(0, 2) = 4;
  G.at(1, 2) = 15;
  std::ostringstream out;
  write_generator(out, G);
  CHECK(out.str() == "1 2 4\n0 0 15\n");
}

TEST_CASE("verdict and transform reports") {
  ExtensionField F(2, 1, 4);
  MrdVerdict ok;
  CHECK(verdict_report(ok) == "MRD\n");

  MrdVerdict bad;
  bad.is_mrd = false;
  MrdWitness w;
  w.S = SubspaceBasis{&F, {2}};
  w.g = {1};
  w.f = SkewPoly(&F, {3, 1});
  w.codeword = {5, 6, 0};
  w.rank = 2;
  bad.witness = w;
  CHECK(verdict_report(bad) ==
        "NOT-MRD\nsubspace 2\ng 1\nf 3 1\ncodeword 5 6 0\nrank 2\n");

  SemilinearTransform T{7, 2, Matrix::identity(&F, 2)};
  CHECK(transform_report(T) == "lambda=7 galois=2\n1 0\n0 1\n");
}

TEST_CASE("element list parsing") {
  CHECK(parse_elem_list("1,0,15") == std::vector<felem>{1, 0, 15});
  CHECK(parse_uint_list("4,8") == std::vector<unsigned>{4, 8});
  CHECK_THROWS_AS(parse_elem_list("1,x"), std::invalid_argument);
}

// Command line front end for constructing rank-metric codes, verifying the
// MRD property, computing distances and testing semilinear equivalence.
//
// Exit codes: 0 affirmative/success, 1 negative finding, 2 usage/data error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rankcodes/equivalence.hpp"
#include "rankcodes/io.hpp"
#include "rankcodes/mrd.hpp"
#include "rankcodes/rank_metric.hpp"

namespace {

using namespace rankcodes;

void write_out(const std::string& path, const RankCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_code_file(out, code);
}

int cmd_construct(const std::string& mode, const std::string& in_path,
                  const std::string& out_path, bool relaxed,
                  std::uint64_t p, unsigned a, unsigned m, unsigned sigma,
                  const std::string& chain_csv, unsigned n, unsigned k,
                  const std::string& t_csv) {
  if (mode == "explicit") {
    CodeFile cf = read_code_file(in_path, relaxed);
    if (!out_path.empty()) write_out(out_path, cf.code);
    std::cout << "OK\n";
    write_generator(std::cout, generator_matrix(cf.code));
    return 0;
  }
  if (mode != "theorem2") throw std::invalid_argument("mode must be explicit or theorem2");
  if (relaxed) throw std::invalid_argument("the subfield-chain construction requires strict t bounds");
  auto field = std::make_shared<ExtensionField>(p, a, m, std::vector<unsigned>{}, sigma);
  SubfieldChain chain{parse_uint_list(chain_csv)};
  const RankCode code = construct_theorem2(field.get(), chain, n, k, parse_uint_list(t_csv));
  if (!out_path.empty()) write_out(out_path, code);
  std::cout << "OK\n";
  write_generator(std::cout, generator_matrix(code));
  return 0;
}

int cmd_verify_mrd(const std::string& path, const std::string& method,
                   std::uint64_t max_enum, bool relaxed) {
  CodeFile cf = read_code_file(path, relaxed);
  const unsigned singleton = cf.code.n - cf.code.k + 1;

  std::optional<MrdVerdict> lemma;
  std::optional<unsigned> dist;
  if (method == "lemma1" || method == "both") lemma = is_mrd(cf.code, max_enum);
  if (method == "brute" || method == "both")
    dist = min_rank_distance_bruteforce(cf.code, max_enum);
  if (method != "lemma1" && method != "brute" && method != "both")
    throw std::invalid_argument("method must be lemma1, brute or both");

  if (lemma && dist && lemma->is_mrd != (*dist == singleton)) {
    std::cout << "DISAGREE lemma1=" << (lemma->is_mrd ? "MRD" : "NOT-MRD")
              << " DIST=" << *dist << '\n';
    return 2;
  }
  const bool mrd = lemma ? lemma->is_mrd : *dist == singleton;
  if (lemma)
    std::cout << verdict_report(*lemma);
  else
    std::cout << (mrd ? "MRD\n" : "NOT-MRD\n");
  if (dist) std::cout << "DIST=" << *dist << '\n';
  return mrd ? 0 : 1;
}

int cmd_distance(const std::string& path, std::uint64_t max_enum, bool relaxed) {
  CodeFile cf = read_code_file(path, relaxed);
  std::cout << "DIST=" << min_rank_distance_bruteforce(cf.code, max_enum) << '\n';
  return 0;
}

int cmd_encode(const std::string& path, const std::string& msg_csv, bool relaxed) {
  CodeFile cf = read_code_file(path, relaxed);
  const auto word = encode(cf.code, parse_elem_list(msg_csv));
  std::cout << "OK\n";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << word[i];
  }
  std::cout << '\n';
  return 0;
}

int cmd_equiv(const std::string& path1, const std::string& path2,
              std::uint64_t budget, bool relaxed) {
  CodeFile c1 = read_code_file(path1, relaxed);
  CodeFile c2 = read_code_file(path2, relaxed);
  if (!c1.field->same(*c2.field))
    throw std::invalid_argument("codes live over different fields");
  const Matrix G1 = generator_matrix(c1.code);
  Matrix G2 = generator_matrix(c2.code);
  // borrow c1's field so matrix ops share one field object
  Matrix G2b(c1.field.get(), G2.rows(), G2.cols());
  for (std::size_t i = 0; i < G2.rows(); ++i)
    for (std::size_t j = 0; j < G2.cols(); ++j) G2b.at(i, j) = G2.at(i, j);
  const auto t = brute_force_equivalent(G1, G2b, budget);
  if (t) {
    std::cout << "EQUIVALENT\n" << transform_report(*t);
    return 0;
  }
  std::cout << "NOT-EQUIVALENT\n";
  return 1;
}

int cmd_search(std::uint64_t p, unsigned a, unsigned m, unsigned ell) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (a == 0 || m == 0) throw std::invalid_argument("a and m must be positive");
  const SearchResult res = theorem2_search(m, ell);
  std::cout << "OK\n";
  std::cout << "corollary n=" << res.corollary.n << " chain=";
  for (std::size_t i = 0; i < res.corollary.chain.s.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << res.corollary.chain.s[i];
  }
  std::cout << '\n';
  for (const auto& e : res.entries) {
    std::cout << "params chain=";
    for (std::size_t i = 0; i < res.corollary.chain.s.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << res.corollary.chain.s[i];
    }
    std::cout << " n=" << e.n << " k=" << e.k << " t=";
    for (std::size_t i = 0; i < e.t.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << e.t[i];
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabidulin and twisted Gabidulin rank-metric codes"};
  app.require_subcommand(1);

  bool relaxed = false;
  std::uint64_t seed = 0;
  app.add_flag("--relaxed-t", relaxed, "allow t_l = n-k instead of t_l < n-k");
  app.add_option("--seed", seed,
                 "seed for randomized property sampling (all commands here are deterministic)");

  std::string mode = "explicit", in_path, out_path, chain_csv, t_csv = "1";
  std::uint64_t p = 2;
  unsigned a = 1, m = 0, sigma = 1, n = 0, k = 0, ell = 1;
  auto* construct = app.add_subcommand("construct", "build a code and emit its files");
  construct->add_option("--mode", mode, "explicit|theorem2");
  construct->add_option("--in", in_path, "parameter file (explicit mode)");
  construct->add_option("--out", out_path, "output parameter file");
  construct->add_option("--p", p);
  construct->add_option("--a", a);
  construct->add_option("--m", m);
  construct->add_option("--sigma", sigma);
  construct->add_option("--chain", chain_csv, "subfield chain s0,s1,...");
  construct->add_option("--n", n);
  construct->add_option("--k", k);
  construct->add_option("--t", t_csv, "twist hooks t1,t2,...");

  std::string method = "lemma1";
  std::uint64_t max_enum = std::uint64_t(1) << 24;
  std::string file1, file2;
  auto* verify = app.add_subcommand("verify-mrd", "decide the MRD property");
  verify->add_option("file", file1)->required();
  verify->add_option("--method", method, "lemma1|brute|both");
  verify->add_option("--max-enum", max_enum, "enumeration cap");

  auto* distance = app.add_subcommand("distance", "brute-force minimum rank distance");
  distance->add_option("file", file1)->required();
  distance->add_option("--max-enum", max_enum);

  std::string msg_csv;
  auto* enc = app.add_subcommand("encode", "encode a message vector");
  enc->add_option("file", file1)->required();
  enc->add_option("--msg", msg_csv, "message m0,m1,...")->required();

  std::uint64_t budget = std::uint64_t(1) << 28;
  auto* equiv = app.add_subcommand("equiv", "brute-force semilinear equivalence");
  equiv->add_option("file1", file1)->required();
  equiv->add_option("file2", file2)->required();
  equiv->add_option("--budget", budget, "search budget |GL_n(q)|*m");

  auto* search = app.add_subcommand("search", "valid chain parameter sets");
  search->add_option("--p", p);
  search->add_option("--a", a);
  search->add_option("--m", m)->required();
  search->add_option("--ell", ell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed())
      return cmd_construct(mode, in_path, out_path, relaxed, p, a, m, sigma,
                           chain_csv, n, k, t_csv);
    if (verify->parsed()) return cmd_verify_mrd(file1, method, max_enum, relaxed);
    if (distance->parsed()) return cmd_distance(file1, max_enum, relaxed);
    if (enc->parsed()) return cmd_encode(file1, msg_csv, relaxed);
    if (equiv->parsed()) return cmd_equiv(file1, file2, budget, relaxed);
    if (search->parsed()) return cmd_search(p, a, m, ell);
  } catch (const std::exception& e) {
    std::cout << "ERROR " << e.what() << '\n';
    return 2;
  }
  return 2;
}

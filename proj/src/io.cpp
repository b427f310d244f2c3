#include "rankcodes/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rankcodes {

namespace {

// "key=value" tokens after the leading tag
std::vector<std::pair<std::string, std::string>> key_values(std::istringstream& is) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value token, got '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

std::string find_value(const std::vector<std::pair<std::string, std::string>>& kv,
                       const std::string& key) {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  throw std::invalid_argument("missing field '" + key + "'");
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t pos = 0;
  const std::uint64_t v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) return true;
  }
  return false;
}

}  // namespace

std::vector<felem> parse_elem_list(const std::string& csv) {
  std::vector<felem> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(to_u64(item));
  return out;
}

std::vector<unsigned> parse_uint_list(const std::string& csv) {
  std::vector<unsigned> out;
  for (felem v : parse_elem_list(csv)) out.push_back(static_cast<unsigned>(v));
  return out;
}

std::shared_ptr<ExtensionField> parse_field_line(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  is >> tag;
  if (tag != "field") throw std::invalid_argument("expected 'field' line");
  const auto kv = key_values(is);
  const auto p = to_u64(find_value(kv, "p"));
  const auto a = static_cast<unsigned>(to_u64(find_value(kv, "a")));
  const auto m = static_cast<unsigned>(to_u64(find_value(kv, "m")));
  const auto sigma = static_cast<unsigned>(to_u64(find_value(kv, "sigma")));
  const auto modulus = parse_uint_list(find_value(kv, "modulus"));
  return std::make_shared<ExtensionField>(p, a, m, modulus, sigma);
}

CodeFile read_code_file(std::istream& in, bool relaxed_t) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("missing field line");
  CodeFile out;
  out.field = parse_field_line(line);

  if (!next_content_line(in, line)) throw std::invalid_argument("missing code line");
  std::istringstream is(line);
  std::string tag;
  is >> tag;
  if (tag != "code") throw std::invalid_argument("expected 'code' line");
  const auto kv = key_values(is);
  const auto n = static_cast<unsigned>(to_u64(find_value(kv, "n")));
  const auto k = static_cast<unsigned>(to_u64(find_value(kv, "k")));

  if (!next_content_line(in, line)) throw std::invalid_argument("missing alpha line");
  std::istringstream as(line);
  as >> tag;
  if (tag != "alpha") throw std::invalid_argument("expected 'alpha' line");
  std::vector<felem> alpha;
  felem e;
  while (as >> e) alpha.push_back(e);

  TwistSpec twist;
  while (next_content_line(in, line)) {
    std::istringstream ts(line);
    ts >> tag;
    if (tag != "twist") throw std::invalid_argument("expected 'twist' line");
    const auto tkv = key_values(ts);
    twist.t.push_back(static_cast<unsigned>(to_u64(find_value(tkv, "t"))));
    twist.eta.push_back(to_u64(find_value(tkv, "eta")));
    twist.lambda.push_back(parse_elem_list(find_value(tkv, "lambda")));
  }

  out.code = make_code(out.field.get(), n, k, std::move(alpha), std::move(twist), relaxed_t);
  return out;
}

CodeFile read_code_file(const std::string& path, bool relaxed_t) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_code_file(in, relaxed_t);
}

void write_code_file(std::ostream& out, const RankCode& code) {
  out << code.field->describe() << '\n';
  out << "code n=" << code.n << " k=" << code.k << '\n';
  out << "alpha";
  for (felem a : code.alpha) out << ' ' << a;
  out << '\n';
  for (unsigned i = 0; i < code.twist.ell(); ++i) {
    out << "twist t=" << code.twist.t[i] << " eta=" << code.twist.eta[i] << " lambda=";
    for (std::size_t j = 0; j < code.twist.lambda[i].size(); ++j) {
      if (j) out << ',';
      out << code.twist.lambda[i][j];
    }
    out << '\n';
  }
}

void write_generator(std::ostream& out, const Matrix& G) {
  for (std::size_t i = 0; i < G.rows(); ++i) {
    for (std::size_t j = 0; j < G.cols(); ++j) {
      if (j) out << ' ';
      out << G.at(i, j);
    }
    out << '\n';
  }
}

std::string verdict_report(const MrdVerdict& verdict) {
  std::ostringstream os;
  if (verdict.is_mrd) {
    os << "MRD\n";
    return os.str();
  }
  os << "NOT-MRD\n";
  const auto& w = *verdict.witness;
  os << "subspace";
  for (felem e : w.S.elems) os << ' ' << e;
  os << "\ng";
  for (felem e : w.g) os << ' ' << e;
  os << "\nf";
  for (int i = 0; i <= w.f.deg(); ++i) os << ' ' << w.f.coeff(static_cast<unsigned>(i));
  os << "\ncodeword";
  for (felem e : w.codeword) os << ' ' << e;
  os << "\nrank " << w.rank << '\n';
  return os.str();
}

std::string transform_report(const SemilinearTransform& transform) {
  std::ostringstream os;
  os << "lambda=" << transform.lambda << " galois=" << transform.galois_exp << '\n';
  for (std::size_t i = 0; i < transform.A.rows(); ++i) {
    for (std::size_t j = 0; j < transform.A.cols(); ++j) {
      if (j) os << ' ';
      os << transform.A.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace rankcodes

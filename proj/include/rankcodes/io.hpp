#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "rankcodes/codes.hpp"
#include "rankcodes/equivalence.hpp"
#include "rankcodes/mrd.hpp"

namespace rankcodes {

// Line-oriented plain-text formats; `#` starts a comment, blank lines are
// skipped.  Elements are written as their canonical integer encoding.

std::shared_ptr<ExtensionField> parse_field_line(const std::string& line);

// Bundles the code with the field it borrows.
struct CodeFile {
  std::shared_ptr<ExtensionField> field;
  RankCode code;
};

CodeFile read_code_file(std::istream& in, bool relaxed_t = false);
CodeFile read_code_file(const std::string& path, bool relaxed_t = false);
void write_code_file(std::ostream& out, const RankCode& code);

void write_generator(std::ostream& out, const Matrix& G);

std::string verdict_report(const MrdVerdict& verdict);
std::string transform_report(const SemilinearTransform& transform);

std::vector<felem> parse_elem_list(const std::string& csv);
std::vector<unsigned> parse_uint_list(const std::string& csv);

}  // namespace rankcodes

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oexp/exprad.hpp"
#include "oexp/lie.hpp"

namespace oexp {

// On-disk description of an algebra: bracket entries are sparse, only pairs
// with lhs before rhs in basis order are legal, omitted pairs are zero.
// Rationals are strings "p/q"; a bracket value is a list of
// [basis_name, re, im] triples.
struct BracketTerm {
  std::string basis_name;
  std::string re, im;
};

struct BracketEntry {
  std::string lhs, rhs;
  std::vector<BracketTerm> value;
};

struct SplitNames {
  std::vector<std::string> b;
  std::vector<std::string> l;
  std::string l_label;
};

struct AlgebraFile {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<SplitNames> split;
};

// JSON round trip; render(parse(text)) is byte-stable.
AlgebraFile parse_algebra_text(const std::string& text);
std::string render_algebra_file(const AlgebraFile& file);

struct ParsedAlgebra {
  AlgebraFile file;
  LieAlgebra algebra;
  std::optional<SplitData> split;
};

// Validates and builds the algebra (Jacobi enforced) and resolves the
// declared split to subspaces.
ParsedAlgebra build_algebra(const AlgebraFile& file);
ParsedAlgebra parse_algebra_file(const std::string& text);

}  // namespace oexp

#pragma once

#include <string>

#include "oexp/algebra_io.hpp"
#include "oexp/descriptor.hpp"

namespace oexp {

// Full structural analysis of one algebra. The JSON document has stable key
// order and is byte-identical across runs; the text form is derived from it.
struct AnalysisReport {
  std::string json;  // serialized structured report
  std::string text;  // human-readable rendering
  bool split_validation_passed = true;
  bool descriptor_emitted = false;
};

// If the algebra is solvable and no split is declared, the split defaults to
// (g, 0). A non-solvable algebra without a declared split gets the structural
// part of the report only, with a notice that the descriptor stage was
// skipped. Throws ValidationError when a declared split fails validation.
AnalysisReport analyze(const ParsedAlgebra& input);

}  // namespace oexp

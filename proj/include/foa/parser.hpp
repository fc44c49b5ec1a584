#ifndef FOA_PARSER_HPP
#define FOA_PARSER_HPP

#include <string>
#include <vector>

#include "foa/formula.hpp"
#include "foa/signature.hpp"

namespace foa {

/// Symbol resolution context for parsing. Signatures are scanned in order;
/// duplicate names across entries are allowed only when the declarations
/// agree (this happens for rigid symbols shared between a signature and its
/// primed copy).
struct ParseContext {
  std::vector<SignaturePtr> sigs;
  /// Expand ->, <->, wX, Z, R, T into their negation duals while parsing.
  bool expand_derived = false;
};

/// Parses and sort-checks a formula in the module grammar (docs/grammar.md).
/// Line comments start with //.
FormulaPtr parse_formula(const std::string& text, const ParseContext& ctx);

} // namespace foa

#endif

#ifndef FOA_PRINTER_HPP
#define FOA_PRINTER_HPP

#include <string>

#include "foa/formula.hpp"

namespace foa {

/// Concrete-syntax printing in the module grammar. Deterministic down to the
/// byte; parse(print(f)) is structurally equal to f under the same context.
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

} // namespace foa

#endif

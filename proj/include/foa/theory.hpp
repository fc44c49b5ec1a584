#ifndef FOA_THEORY_HPP
#define FOA_THEORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foa/eval.hpp"
#include "foa/formula.hpp"
#include "foa/structure.hpp"

namespace foa {

/// Solver-facing theory configuration: SMT-LIB logic, sort translations, and
/// interpreted symbol translations. Symbols named here must be rigid; they
/// are emitted verbatim instead of being declared.
struct SmtConfig {
  std::string logic;
  std::map<std::string, std::string> sorts;
  std::map<std::string, std::string> symbols;
};

/// A set of first-order sentences over the word signature, optionally paired
/// with a solver mapping. Oracle checks evaluate the axioms per letter; the
/// solver backend asserts per-step copies.
struct Theory {
  std::vector<FormulaPtr> axioms;
  std::optional<SmtConfig> smt;
};

struct WordReport {
  bool ok = true;
  std::string message;
  std::optional<size_t> letter;
};

/// Checks the word against the definition of a theory word: constant sort
/// domains, constant rigid interpretations, and per-letter satisfaction of
/// every theory axiom. Reports the first violated constraint.
WordReport validate_word(const Word& word, const Theory& theory = {});

/// The signature with every non-rigid symbol primed (see Signature::primed).
Signature prime_signature(const Signature& sig);

} // namespace foa

#endif

#ifndef FOA_EVAL_HPP
#define FOA_EVAL_HPP

#include <map>
#include <string>

#include "foa/formula.hpp"
#include "foa/structure.hpp"

namespace foa {

/// Variable assignment. Sorts are implicit: callers bind elements of the
/// variable's sort domain.
using Environment = std::map<std::string, std::string>;

/// Classical Tarskian evaluation of a first-order formula on one structure.
/// Quantifiers range over the finite domain of the variable's sort; naive
/// enumeration, no skolemization. Second-order existentials are evaluated by
/// enumerating all tables of the quantified symbol over the structure's
/// domains.
bool eval_fo(const Structure& st, const FormulaPtr& phi, const Environment& env = {});

std::string eval_term(const Structure& st, const TermPtr& t, const Environment& env);

/// FOLTL satisfaction: word, position i, environment. Implements the
/// semantics clauses literally, including the i < |word|-1 guard for X and
/// the i > 0 guard for Y. The word must be non-empty and 0 <= i < |word|.
bool satisfies(const Word& word, const FormulaPtr& phi, size_t i, const Environment& env = {});

/// Pure-past satisfaction: evaluation at the last position.
bool satisfies_pure_past(const Word& word, const FormulaPtr& phi);

} // namespace foa

#endif

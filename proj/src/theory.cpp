#include "foa/theory.hpp"

#include "foa/printer.hpp"

namespace foa {

Signature prime_signature(const Signature& sig) { return sig.primed(); }

WordReport validate_word(const Word& word, const Theory& theory) {
  WordReport report;
  if (word.empty()) return report;

  const Signature& sig = *word.sig;
  for (size_t i = 0; i < word.size(); ++i) {
    try {
      word.letters[i].validate();
    } catch (const ValidationError& e) {
      return {false, std::string("letter is not a valid structure: ") + e.what(), i};
    }
  }
  const Structure& first = word.letters[0];
  for (size_t i = 1; i < word.size(); ++i) {
    const Structure& cur = word.letters[i];
    for (const auto& sort : sig.sorts())
      if (cur.domain(sort) != first.domain(sort))
        return {false, "domain of sort '" + sort + "' changes across the word", i};
    for (const auto& c : sig.constants())
      if (c.rigid && cur.constant(c.name) != first.constant(c.name))
        return {false, "rigid constant '" + c.name + "' changes its interpretation", i};
    for (const auto& f : sig.functions())
      if (f.rigid && cur.function_table(f.name) != first.function_table(f.name))
        return {false, "rigid function '" + f.name + "' changes its interpretation", i};
    for (const auto& p : sig.predicates())
      if (p.rigid && cur.predicate_table(p.name) != first.predicate_table(p.name))
        return {false, "rigid predicate '" + p.name + "' changes its interpretation", i};
  }
  for (size_t i = 0; i < word.size(); ++i)
    for (const auto& ax : theory.axioms)
      if (!eval_fo(word.letters[i], ax))
        return {false, "letter violates the axiom " + print_formula(ax), i};
  return report;
}

} // namespace foa

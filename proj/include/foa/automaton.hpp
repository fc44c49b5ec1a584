#ifndef FOA_AUTOMATON_HPP
#define FOA_AUTOMATON_HPP

#include <string>

#include "foa/formula.hpp"
#include "foa/signature.hpp"

namespace foa {

/// A symbolic first-order automaton <Sigma, Gamma, phi_0, phi_T, phi_F>.
/// States are Gamma-structures; phi_T is a sentence over Gamma, Sigma, and the
/// primed copy Gamma' describing one step. The same type also carries
/// Sigma_1^1 automata, whose condition formulas may start with an existential
/// second-order prefix (is_sigma11 distinguishes them).
///
/// The initial and acceptance conditions are Gamma-sentences; rigid word
/// symbols may additionally appear in them (interpreted theory symbols such
/// as numerals live in the word signature as rigid constants).
struct Automaton {
  SignaturePtr word_sig;  // Sigma
  SignaturePtr state_sig; // Gamma
  FormulaPtr init;        // phi_0
  FormulaPtr trans;       // phi_T
  FormulaPtr fin;         // phi_F

  bool is_sigma11() const;
};

/// Throws ValidationError unless all structural invariants hold: disjoint
/// signatures, condition formulas are first-order sentences over the right
/// sub-signatures, second-order quantifiers only in an outermost existential
/// prefix.
void validate_automaton(const Automaton& a);

enum class ControlClass { FiniteControl, DataControl, Monadic, General };

/// Most specific state-signature class: propositions only < propositions or
/// constants < relational with arities at most one < anything else.
ControlClass classify(const Automaton& a);

std::string control_class_name(ControlClass c);

} // namespace foa

#endif

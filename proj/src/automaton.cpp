#include "foa/automaton.hpp"

#include <algorithm>

#include "foa/errors.hpp"

namespace foa {

bool Automaton::is_sigma11() const {
  return has_so_quantifier(init) || has_so_quantifier(trans) || has_so_quantifier(fin);
}

namespace {

// Second-order quantifiers may form an outermost existential prefix only.
void check_so_prefix(const FormulaPtr& f, const char* which) {
  FormulaPtr body = f;
  while (body->kind == FKind::SoExists) body = body->kids[0];
  if (has_so_quantifier(body))
    throw ValidationError(std::string(which) +
                          " has a second-order quantifier outside the outermost prefix");
}

void check_condition(const FormulaPtr& f, const char* which,
                     const std::vector<const Signature*>& allowed,
                     const Signature* rigid_source) {
  if (has_temporal(f))
    throw ValidationError(std::string(which) + " contains a temporal operator");
  if (!is_sentence(f)) throw ValidationError(std::string(which) + " is not a sentence");
  check_so_prefix(f, which);
  for (const auto& name : symbols_used(f)) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const Signature* s) { return s->has_symbol(name); });
    if (!ok && rigid_source && rigid_source->has_symbol(name) &&
        rigid_source->symbol_is_rigid(name))
      ok = true;
    if (!ok)
      throw ValidationError(std::string(which) + " mentions the symbol '" + name +
                            "' outside its allowed signature");
  }
}

} // namespace

void validate_automaton(const Automaton& a) {
  if (!a.word_sig || !a.state_sig) throw ValidationError("automaton misses a signature");
  if (!a.word_sig->disjoint_with(*a.state_sig))
    throw ValidationError("word and state signatures are not disjoint");

  Signature primed = a.state_sig->primed();
  check_condition(a.init, "initial condition", {a.state_sig.get()}, a.word_sig.get());
  check_condition(a.fin, "acceptance condition", {a.state_sig.get()}, a.word_sig.get());
  check_condition(a.trans, "transition relation",
                  {a.state_sig.get(), a.word_sig.get(), &primed}, nullptr);
}

ControlClass classify(const Automaton& a) {
  const Signature& g = *a.state_sig;
  bool has_function = !g.functions().empty();
  bool has_constant = !g.constants().empty();
  size_t max_arity = 0;
  for (const auto& p : g.predicates()) max_arity = std::max(max_arity, p.args.size());

  if (!has_function && !has_constant && max_arity == 0) return ControlClass::FiniteControl;
  if (!has_function && max_arity == 0) return ControlClass::DataControl;
  if (!has_function && !has_constant && max_arity <= 1) return ControlClass::Monadic;
  return ControlClass::General;
}

std::string control_class_name(ControlClass c) {
  switch (c) {
  case ControlClass::FiniteControl: return "finite-control";
  case ControlClass::DataControl: return "data-control";
  case ControlClass::Monadic: return "monadic";
  case ControlClass::General: return "general";
  }
  return "?";
}

} // namespace foa

#ifndef FOA_FORMULA_HPP
#define FOA_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "foa/signature.hpp"

namespace foa {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Var, Const, App };

/// Immutable term tree. Every node carries its sort, resolved at build time.
struct Term {
  TermKind kind;
  std::string name;
  std::string sort;
  std::vector<TermPtr> args;
};

TermPtr mk_var(const std::string& name, const std::string& sort);
TermPtr mk_const(const std::string& name, const std::string& sort);
TermPtr mk_app(const std::string& name, const std::string& result_sort, std::vector<TermPtr> args);

enum class FKind {
  True,
  False,
  Atom,    // name + terms (propositions have no terms)
  Eq,      // terms[0] = terms[1]
  Not,
  And,
  Or,
  Implies,
  Iff,
  Exists,  // name = variable, var_sort, kids[0] = body
  Forall,
  Next,      // X
  WeakNext,  // wX
  Yesterday, // Y
  WeakYesterday, // Z (also written wY)
  Until,
  Release,
  Since,
  Triggered,
  SoExists // second-order existential; binds a symbol described by so_* fields
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable FOLTL formula tree. First-order formulas are the temporal-free
/// subset. Second-order existentials appear only in the outermost prefix of
/// automaton condition formulas.
struct Formula {
  FKind kind;
  std::string name;     // Atom: predicate; Exists/Forall: variable; SoExists: symbol
  std::string var_sort; // quantified variable sort
  std::vector<TermPtr> terms;
  std::vector<FormulaPtr> kids;

  // SoExists payload
  SymbolKind so_kind = SymbolKind::Predicate;
  std::vector<std::string> so_args;
  std::string so_result; // function result / constant sort
};

FormulaPtr mk_true();
FormulaPtr mk_false();
FormulaPtr mk_atom(const std::string& pred, std::vector<TermPtr> args = {});
FormulaPtr mk_eq(TermPtr l, TermPtr r);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_binary(FKind kind, FormulaPtr l, FormulaPtr r);
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_quant(FKind kind, const std::string& var, const std::string& sort, FormulaPtr body);
FormulaPtr mk_temporal(FKind kind, FormulaPtr f);
FormulaPtr mk_so_exists(const std::string& name, SymbolKind kind, std::vector<std::string> args,
                        const std::string& result, FormulaPtr body);

/// Right-folded conjunction/disjunction; empty input yields true/false.
FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs);

bool is_temporal_kind(FKind k);
bool is_future_kind(FKind k);
bool is_past_kind(FKind k);

/// Any temporal operator anywhere in the tree.
bool has_temporal(const FormulaPtr& f);
/// No future temporal operators (X, wX, U, R).
bool is_pure_past(const FormulaPtr& f);
/// Every subformula rooted at a temporal operator has at most one free variable.
bool is_monodic(const FormulaPtr& f);
bool has_equality(const FormulaPtr& f);
bool has_so_quantifier(const FormulaPtr& f);

/// Free variables in order of first occurrence in a left-to-right preorder
/// walk. This is the canonical surrogate argument order.
std::vector<std::pair<std::string, std::string>> free_vars_ordered(const FormulaPtr& f);

bool is_sentence(const FormulaPtr& f);

/// Names of all constants, functions and predicates occurring in the formula
/// (free second-order-bound names excluded).
std::set<std::string> symbols_used(const FormulaPtr& f);

/// Canonical printing with bound variables renamed by binder depth. Two
/// formulas are alpha-equivalent iff their canonical strings are equal.
std::string canonical_string(const FormulaPtr& f);
std::string canonical_string(const TermPtr& t);

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

/// FNV-1a hash of the canonical string, fixed width, used for surrogate names.
std::string content_hash(const FormulaPtr& f);

/// Replaces occurrences of the mapped constant/function/predicate symbols.
/// The mapping must be injective on the symbols occurring in the formula, and
/// no target name may already occur unrenamed (rename-collision otherwise).
/// Bound variables are untouched.
FormulaPtr rename_formula(const FormulaPtr& f, const std::map<std::string, std::string>& mapping);

/// rename_formula without the collision check, for step-indexing renames where
/// targets are known fresh by construction.
FormulaPtr rename_formula_unchecked(const FormulaPtr& f,
                                    const std::map<std::string, std::string>& mapping);

} // namespace foa

#endif

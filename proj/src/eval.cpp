#include "foa/eval.hpp"

#include "foa/enumerate.hpp"
#include "foa/errors.hpp"

namespace foa {

std::string eval_term(const Structure& st, const TermPtr& t, const Environment& env) {
  switch (t->kind) {
  case TermKind::Var: {
    auto it = env.find(t->name);
    if (it == env.end()) throw EvalError("unassigned free variable '" + t->name + "'");
    return it->second;
  }
  case TermKind::Const:
    return st.constant(t->name);
  case TermKind::App: {
    std::vector<std::string> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) args.push_back(eval_term(st, a, env));
    return st.function_value(t->name, args);
  }
  }
  throw Error("unreachable");
}

namespace {

bool eval_so_exists(const Structure& st, const FormulaPtr& phi, const Environment& env) {
  // Enumerate all tables of the quantified symbol over the current domains.
  auto ext = std::make_shared<Signature>();
  const auto collect_sorts = [&](const std::vector<std::string>& srts) {
    for (const auto& s : srts)
      if (!ext->has_sort(s)) ext->add_sort(s);
  };
  collect_sorts(phi->so_args);
  if (!phi->so_result.empty()) collect_sorts({phi->so_result});
  switch (phi->so_kind) {
  case SymbolKind::Predicate:
    ext->add_predicate(phi->name, phi->so_args, false);
    break;
  case SymbolKind::Function:
    ext->add_function(phi->name, phi->so_args, phi->so_result, false);
    break;
  case SymbolKind::Constant:
    ext->add_constant(phi->name, phi->so_result, false);
    break;
  }
  DomainMap doms;
  for (const auto& s : ext->sorts()) doms[s] = st.domain(s);
  StructureEnumerator en(ext, doms);
  Structure table;
  while (en.next(table)) {
    Structure joint = join_structures({&st, &table});
    if (eval_fo(joint, phi->kids[0], env)) return true;
  }
  return false;
}

} // namespace

bool eval_fo(const Structure& st, const FormulaPtr& phi, const Environment& env) {
  switch (phi->kind) {
  case FKind::True: return true;
  case FKind::False: return false;
  case FKind::Atom: {
    std::vector<std::string> args;
    args.reserve(phi->terms.size());
    for (const auto& t : phi->terms) args.push_back(eval_term(st, t, env));
    return st.predicate_holds(phi->name, args);
  }
  case FKind::Eq:
    return eval_term(st, phi->terms[0], env) == eval_term(st, phi->terms[1], env);
  case FKind::Not: return !eval_fo(st, phi->kids[0], env);
  case FKind::And: return eval_fo(st, phi->kids[0], env) && eval_fo(st, phi->kids[1], env);
  case FKind::Or: return eval_fo(st, phi->kids[0], env) || eval_fo(st, phi->kids[1], env);
  case FKind::Implies: return !eval_fo(st, phi->kids[0], env) || eval_fo(st, phi->kids[1], env);
  case FKind::Iff: return eval_fo(st, phi->kids[0], env) == eval_fo(st, phi->kids[1], env);
  case FKind::Exists:
  case FKind::Forall: {
    const auto& dom = st.domain(phi->var_sort);
    Environment inner = env;
    for (const auto& e : dom) {
      inner[phi->name] = e;
      bool v = eval_fo(st, phi->kids[0], inner);
      if (phi->kind == FKind::Exists && v) return true;
      if (phi->kind == FKind::Forall && !v) return false;
    }
    return phi->kind == FKind::Forall;
  }
  case FKind::SoExists:
    return eval_so_exists(st, phi, env);
  default:
    throw EvalError("temporal operator in first-order evaluation");
  }
}

namespace {

bool sat_rec(const Word& w, const FormulaPtr& phi, size_t i, const Environment& env) {
  const size_t n = w.size();
  switch (phi->kind) {
  case FKind::True: return true;
  case FKind::False: return false;
  case FKind::Atom:
  case FKind::Eq:
    return eval_fo(w.letters[i], phi, env);
  case FKind::Not: return !sat_rec(w, phi->kids[0], i, env);
  case FKind::And: return sat_rec(w, phi->kids[0], i, env) && sat_rec(w, phi->kids[1], i, env);
  case FKind::Or: return sat_rec(w, phi->kids[0], i, env) || sat_rec(w, phi->kids[1], i, env);
  case FKind::Implies:
    return !sat_rec(w, phi->kids[0], i, env) || sat_rec(w, phi->kids[1], i, env);
  case FKind::Iff:
    return sat_rec(w, phi->kids[0], i, env) == sat_rec(w, phi->kids[1], i, env);
  case FKind::Exists:
  case FKind::Forall: {
    const auto& dom = w.letters[i].domain(phi->var_sort);
    Environment inner = env;
    for (const auto& e : dom) {
      inner[phi->name] = e;
      bool v = sat_rec(w, phi->kids[0], i, inner);
      if (phi->kind == FKind::Exists && v) return true;
      if (phi->kind == FKind::Forall && !v) return false;
    }
    return phi->kind == FKind::Forall;
  }
  case FKind::Next:
    return i + 1 < n && sat_rec(w, phi->kids[0], i + 1, env);
  case FKind::WeakNext:
    return i + 1 >= n || sat_rec(w, phi->kids[0], i + 1, env);
  case FKind::Yesterday:
    return i > 0 && sat_rec(w, phi->kids[0], i - 1, env);
  case FKind::WeakYesterday:
    return i == 0 || sat_rec(w, phi->kids[0], i - 1, env);
  case FKind::Until: {
    for (size_t k = i; k < n; ++k) {
      if (sat_rec(w, phi->kids[1], k, env)) {
        bool all = true;
        for (size_t j = i; j < k && all; ++j) all = sat_rec(w, phi->kids[0], j, env);
        if (all) return true;
      }
    }
    return false;
  }
  case FKind::Release: {
    for (size_t k = i; k < n; ++k) {
      if (!sat_rec(w, phi->kids[1], k, env)) {
        bool released = false;
        for (size_t j = i; j < k && !released; ++j) released = sat_rec(w, phi->kids[0], j, env);
        if (!released) return false;
      }
    }
    return true;
  }
  case FKind::Since: {
    for (size_t k = i + 1; k-- > 0;) {
      if (sat_rec(w, phi->kids[1], k, env)) {
        bool all = true;
        for (size_t j = k + 1; j <= i && all; ++j) all = sat_rec(w, phi->kids[0], j, env);
        if (all) return true;
      }
    }
    return false;
  }
  case FKind::Triggered: {
    for (size_t k = i + 1; k-- > 0;) {
      if (!sat_rec(w, phi->kids[1], k, env)) {
        bool triggered = false;
        for (size_t j = k + 1; j <= i && !triggered; ++j)
          triggered = sat_rec(w, phi->kids[0], j, env);
        if (!triggered) return false;
      }
    }
    return true;
  }
  case FKind::SoExists:
    throw EvalError("second-order quantifier in FOLTL evaluation");
  }
  throw Error("unreachable");
}

} // namespace

bool satisfies(const Word& word, const FormulaPtr& phi, size_t i, const Environment& env) {
  if (word.empty()) throw EvalError("FOLTL satisfaction over the empty word");
  if (i >= word.size()) throw EvalError("position out of range");
  return sat_rec(word, phi, i, env);
}

bool satisfies_pure_past(const Word& word, const FormulaPtr& phi) {
  if (!is_pure_past(phi)) throw EvalError("formula uses a future temporal operator");
  if (word.empty()) throw EvalError("FOLTL satisfaction over the empty word");
  return sat_rec(word, phi, word.size() - 1, {});
}

} // namespace foa

#include "foa/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "foa/errors.hpp"

namespace foa {

TermPtr mk_var(const std::string& name, const std::string& sort) {
  return std::make_shared<Term>(Term{TermKind::Var, name, sort, {}});
}

TermPtr mk_const(const std::string& name, const std::string& sort) {
  return std::make_shared<Term>(Term{TermKind::Const, name, sort, {}});
}

TermPtr mk_app(const std::string& name, const std::string& result_sort,
               std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term{TermKind::App, name, result_sort, std::move(args)});
}

namespace {
FormulaPtr node(Formula f) { return std::make_shared<Formula>(std::move(f)); }
} // namespace

FormulaPtr mk_true() { return node({FKind::True, "", "", {}, {}, SymbolKind::Predicate, {}, ""}); }
FormulaPtr mk_false() { return node({FKind::False, "", "", {}, {}, SymbolKind::Predicate, {}, ""}); }

FormulaPtr mk_atom(const std::string& pred, std::vector<TermPtr> args) {
  return node({FKind::Atom, pred, "", std::move(args), {}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_eq(TermPtr l, TermPtr r) {
  return node({FKind::Eq, "", "", {std::move(l), std::move(r)}, {}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_not(FormulaPtr f) {
  return node({FKind::Not, "", "", {}, {std::move(f)}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_binary(FKind kind, FormulaPtr l, FormulaPtr r) {
  return node({kind, "", "", {}, {std::move(l), std::move(r)}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) { return mk_binary(FKind::And, std::move(l), std::move(r)); }
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) { return mk_binary(FKind::Or, std::move(l), std::move(r)); }
FormulaPtr mk_implies(FormulaPtr l, FormulaPtr r) { return mk_binary(FKind::Implies, std::move(l), std::move(r)); }
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r) { return mk_binary(FKind::Iff, std::move(l), std::move(r)); }

FormulaPtr mk_quant(FKind kind, const std::string& var, const std::string& sort, FormulaPtr body) {
  return node({kind, var, sort, {}, {std::move(body)}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_temporal(FKind kind, FormulaPtr f) {
  return node({kind, "", "", {}, {std::move(f)}, SymbolKind::Predicate, {}, ""});
}

FormulaPtr mk_so_exists(const std::string& name, SymbolKind kind, std::vector<std::string> args,
                        const std::string& result, FormulaPtr body) {
  return node({FKind::SoExists, name, "", {}, {std::move(body)}, kind, std::move(args), result});
}

FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_true();
  FormulaPtr acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = mk_and(fs[i], acc);
  return acc;
}

FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_false();
  FormulaPtr acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = mk_or(fs[i], acc);
  return acc;
}

bool is_temporal_kind(FKind k) {
  switch (k) {
  case FKind::Next:
  case FKind::WeakNext:
  case FKind::Yesterday:
  case FKind::WeakYesterday:
  case FKind::Until:
  case FKind::Release:
  case FKind::Since:
  case FKind::Triggered:
    return true;
  default:
    return false;
  }
}

bool is_future_kind(FKind k) {
  return k == FKind::Next || k == FKind::WeakNext || k == FKind::Until || k == FKind::Release;
}

bool is_past_kind(FKind k) { return is_temporal_kind(k) && !is_future_kind(k); }

namespace {

template <typename Fn> void walk(const FormulaPtr& f, Fn&& fn) {
  fn(f);
  for (const auto& k : f->kids) walk(k, fn);
}

} // namespace

bool has_temporal(const FormulaPtr& f) {
  bool found = false;
  walk(f, [&](const FormulaPtr& n) { found = found || is_temporal_kind(n->kind); });
  return found;
}

bool is_pure_past(const FormulaPtr& f) {
  bool future = false;
  walk(f, [&](const FormulaPtr& n) { future = future || is_future_kind(n->kind); });
  return !future;
}

bool has_equality(const FormulaPtr& f) {
  bool found = false;
  walk(f, [&](const FormulaPtr& n) { found = found || n->kind == FKind::Eq; });
  return found;
}

bool has_so_quantifier(const FormulaPtr& f) {
  bool found = false;
  walk(f, [&](const FormulaPtr& n) { found = found || n->kind == FKind::SoExists; });
  return found;
}

namespace {

void term_vars(const TermPtr& t, std::vector<std::pair<std::string, std::string>>& out,
               const std::vector<std::string>& bound) {
  if (t->kind == TermKind::Var) {
    if (std::find(bound.begin(), bound.end(), t->name) == bound.end() &&
        std::find_if(out.begin(), out.end(),
                     [&](const auto& p) { return p.first == t->name; }) == out.end())
      out.emplace_back(t->name, t->sort);
  }
  for (const auto& a : t->args) term_vars(a, out, bound);
}

void free_vars_rec(const FormulaPtr& f, std::vector<std::pair<std::string, std::string>>& out,
                   std::vector<std::string>& bound) {
  switch (f->kind) {
  case FKind::Atom:
  case FKind::Eq:
    for (const auto& t : f->terms) term_vars(t, out, bound);
    return;
  case FKind::Exists:
  case FKind::Forall: {
    bound.push_back(f->name);
    free_vars_rec(f->kids[0], out, bound);
    bound.pop_back();
    return;
  }
  default:
    for (const auto& k : f->kids) free_vars_rec(k, out, bound);
    return;
  }
}

} // namespace

std::vector<std::pair<std::string, std::string>> free_vars_ordered(const FormulaPtr& f) {
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::string> bound;
  free_vars_rec(f, out, bound);
  return out;
}

bool is_sentence(const FormulaPtr& f) { return free_vars_ordered(f).empty(); }

bool is_monodic(const FormulaPtr& f) {
  bool ok = true;
  walk(f, [&](const FormulaPtr& n) {
    if (is_temporal_kind(n->kind) && free_vars_ordered(n).size() > 1) ok = false;
  });
  return ok;
}

namespace {

void term_symbols(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind != TermKind::Var) out.insert(t->name);
  for (const auto& a : t->args) term_symbols(a, out);
}

void symbols_rec(const FormulaPtr& f, std::set<std::string>& out,
                 std::vector<std::string>& so_bound) {
  switch (f->kind) {
  case FKind::Atom:
    if (std::find(so_bound.begin(), so_bound.end(), f->name) == so_bound.end())
      out.insert(f->name);
    for (const auto& t : f->terms) term_symbols(t, out);
    return;
  case FKind::Eq:
    for (const auto& t : f->terms) term_symbols(t, out);
    return;
  case FKind::SoExists:
    so_bound.push_back(f->name);
    symbols_rec(f->kids[0], out, so_bound);
    so_bound.pop_back();
    return;
  default:
    for (const auto& k : f->kids) symbols_rec(k, out, so_bound);
    return;
  }
}

} // namespace

std::set<std::string> symbols_used(const FormulaPtr& f) {
  std::set<std::string> out;
  std::vector<std::string> so_bound;
  symbols_rec(f, out, so_bound);
  // Terms referencing second-order bound functions/constants are not separated
  // here; SoExists binds predicate/function/constant names uniformly, so strip
  // any name that is bound somewhere above its use site. The recursion already
  // handles predicates; function/constant uses inside terms are rare enough
  // that constructions never reuse a bound name for a signature symbol.
  return out;
}

namespace {

const char* kind_token(FKind k) {
  switch (k) {
  case FKind::True: return "true";
  case FKind::False: return "false";
  case FKind::Not: return "not";
  case FKind::And: return "and";
  case FKind::Or: return "or";
  case FKind::Implies: return "implies";
  case FKind::Iff: return "iff";
  case FKind::Exists: return "exists";
  case FKind::Forall: return "forall";
  case FKind::Next: return "X";
  case FKind::WeakNext: return "wX";
  case FKind::Yesterday: return "Y";
  case FKind::WeakYesterday: return "Z";
  case FKind::Until: return "U";
  case FKind::Release: return "R";
  case FKind::Since: return "S";
  case FKind::Triggered: return "T";
  default: return "?";
  }
}

struct CanonCtx {
  std::vector<std::pair<std::string, std::string>> binders; // user name -> canonical name
  int depth = 0;

  std::string lookup(const std::string& name) const {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      if (it->first == name) return it->second;
    return name; // free variable: printed by its own name
  }
};

void canon_term(const TermPtr& t, CanonCtx& ctx, std::string& out) {
  switch (t->kind) {
  case TermKind::Var:
    out += "v:";
    out += ctx.lookup(t->name);
    return;
  case TermKind::Const:
    out += "c:";
    out += t->name;
    return;
  case TermKind::App:
    out += "(";
    out += t->name;
    for (const auto& a : t->args) {
      out += " ";
      canon_term(a, ctx, out);
    }
    out += ")";
    return;
  }
}

void canon_rec(const FormulaPtr& f, CanonCtx& ctx, std::string& out) {
  switch (f->kind) {
  case FKind::True:
  case FKind::False:
    out += kind_token(f->kind);
    return;
  case FKind::Atom:
    out += "(";
    out += f->name;
    for (const auto& t : f->terms) {
      out += " ";
      canon_term(t, ctx, out);
    }
    out += ")";
    return;
  case FKind::Eq:
    out += "(= ";
    canon_term(f->terms[0], ctx, out);
    out += " ";
    canon_term(f->terms[1], ctx, out);
    out += ")";
    return;
  case FKind::Exists:
  case FKind::Forall: {
    std::string canon = "%" + std::to_string(ctx.depth);
    out += "(";
    out += kind_token(f->kind);
    out += " ";
    out += canon;
    out += ":";
    out += f->var_sort;
    out += " ";
    ctx.binders.emplace_back(f->name, canon);
    ++ctx.depth;
    canon_rec(f->kids[0], ctx, out);
    --ctx.depth;
    ctx.binders.pop_back();
    out += ")";
    return;
  }
  case FKind::SoExists: {
    out += "(exists2 ";
    out += f->name;
    out += ":";
    switch (f->so_kind) {
    case SymbolKind::Predicate: out += "pred"; break;
    case SymbolKind::Function: out += "func"; break;
    case SymbolKind::Constant: out += "const"; break;
    }
    out += "(";
    for (size_t i = 0; i < f->so_args.size(); ++i) {
      if (i) out += ",";
      out += f->so_args[i];
    }
    out += ")";
    if (!f->so_result.empty()) {
      out += "->";
      out += f->so_result;
    }
    out += " ";
    canon_rec(f->kids[0], ctx, out);
    out += ")";
    return;
  }
  default: {
    out += "(";
    out += kind_token(f->kind);
    for (const auto& k : f->kids) {
      out += " ";
      canon_rec(k, ctx, out);
    }
    out += ")";
    return;
  }
  }
}

} // namespace

std::string canonical_string(const FormulaPtr& f) {
  std::string out;
  CanonCtx ctx;
  canon_rec(f, ctx, out);
  return out;
}

std::string canonical_string(const TermPtr& t) {
  std::string out;
  CanonCtx ctx;
  canon_term(t, ctx, out);
  return out;
}

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return canonical_string(a) == canonical_string(b);
}

std::string content_hash(const FormulaPtr& f) {
  const std::string s = canonical_string(f);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(12, '0');
  for (int i = 11; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& mapping) {
  switch (t->kind) {
  case TermKind::Var:
    return t;
  case TermKind::Const: {
    auto it = mapping.find(t->name);
    return it == mapping.end() ? t : mk_const(it->second, t->sort);
  }
  case TermKind::App: {
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) args.push_back(rename_term(a, mapping));
    auto it = mapping.find(t->name);
    return mk_app(it == mapping.end() ? t->name : it->second, t->sort, std::move(args));
  }
  }
  throw Error("unreachable");
}

FormulaPtr rename_rec(const FormulaPtr& f, const std::map<std::string, std::string>& mapping) {
  Formula copy = *f;
  if (f->kind == FKind::Atom) {
    auto it = mapping.find(f->name);
    if (it != mapping.end()) copy.name = it->second;
  }
  for (auto& t : copy.terms) t = rename_term(t, mapping);
  for (auto& k : copy.kids) k = rename_rec(k, mapping);
  return std::make_shared<Formula>(std::move(copy));
}

} // namespace

FormulaPtr rename_formula_unchecked(const FormulaPtr& f,
                                    const std::map<std::string, std::string>& mapping) {
  return rename_rec(f, mapping);
}

FormulaPtr rename_formula(const FormulaPtr& f, const std::map<std::string, std::string>& mapping) {
  std::set<std::string> present = symbols_used(f);
  std::map<std::string, std::string> occurring;
  for (const auto& [from, to] : mapping)
    if (present.count(from)) occurring.emplace(from, to);
  std::set<std::string> targets;
  for (const auto& [from, to] : occurring) {
    (void)from;
    if (!targets.insert(to).second)
      throw ValidationError("rename mapping is not injective on occurring symbols ('" + to +
                            "' targeted twice)");
    if (present.count(to) && !occurring.count(to))
      throw ValidationError("rename collision: target symbol '" + to +
                            "' already occurs and is not itself renamed");
  }
  return rename_rec(f, mapping);
}

} // namespace foa

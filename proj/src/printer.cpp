#include "foa/printer.hpp"

namespace foa {

namespace {

// Precedence levels: -> <-> and quantifier bodies 0, | 1, & 2, U/R/S/T 3,
// unary 4, atoms 6. Operands below the required level get parentheses.
int level_of(const Formula& f) {
  switch (f.kind) {
  case FKind::Implies:
  case FKind::Iff:
  case FKind::Exists:
  case FKind::Forall:
  case FKind::SoExists:
    return 0;
  case FKind::Or:
    return 1;
  case FKind::And:
    return 2;
  case FKind::Until:
  case FKind::Release:
  case FKind::Since:
  case FKind::Triggered:
    return 3;
  case FKind::Not:
  case FKind::Next:
  case FKind::WeakNext:
  case FKind::Yesterday:
  case FKind::WeakYesterday:
    return 4;
  default:
    return 6;
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out);

void print_binary(const FormulaPtr& f, int lvl, const char* op, std::string& out) {
  print_rec(f->kids[0], lvl + 1, out);
  out += " ";
  out += op;
  out += " ";
  print_rec(f->kids[1], lvl, out); // right-associative
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  int lvl = level_of(*f);
  if (lvl < min_level) {
    out += "(";
    print_rec(f, 0, out);
    out += ")";
    return;
  }
  switch (f->kind) {
  case FKind::True: out += "true"; return;
  case FKind::False: out += "false"; return;
  case FKind::Atom:
    out += f->name;
    if (!f->terms.empty()) {
      out += "(";
      for (size_t i = 0; i < f->terms.size(); ++i) {
        if (i) out += ", ";
        out += print_term(f->terms[i]);
      }
      out += ")";
    }
    return;
  case FKind::Eq:
    out += print_term(f->terms[0]);
    out += " = ";
    out += print_term(f->terms[1]);
    return;
  case FKind::Not:
    out += "!";
    print_rec(f->kids[0], 4, out);
    return;
  case FKind::Next:
  case FKind::WeakNext:
  case FKind::Yesterday:
  case FKind::WeakYesterday:
    out += f->kind == FKind::Next         ? "X "
           : f->kind == FKind::WeakNext   ? "wX "
           : f->kind == FKind::Yesterday  ? "Y "
                                          : "Z ";
    print_rec(f->kids[0], 4, out);
    return;
  case FKind::Until: print_binary(f, 3, "U", out); return;
  case FKind::Release: print_binary(f, 3, "R", out); return;
  case FKind::Since: print_binary(f, 3, "S", out); return;
  case FKind::Triggered: print_binary(f, 3, "T", out); return;
  case FKind::And: print_binary(f, 2, "&", out); return;
  case FKind::Or: print_binary(f, 1, "|", out); return;
  case FKind::Implies: print_binary(f, 0, "->", out); return;
  case FKind::Iff: print_binary(f, 0, "<->", out); return;
  case FKind::Exists:
  case FKind::Forall:
    out += f->kind == FKind::Exists ? "exists " : "forall ";
    out += f->name;
    out += ":";
    out += f->var_sort;
    out += ". ";
    print_rec(f->kids[0], 0, out);
    return;
  case FKind::SoExists: {
    out += "exists2 ";
    out += f->name;
    out += ":";
    switch (f->so_kind) {
    case SymbolKind::Predicate: out += "pred("; break;
    case SymbolKind::Function: out += "func("; break;
    case SymbolKind::Constant: out += "const("; break;
    }
    for (size_t i = 0; i < f->so_args.size(); ++i) {
      if (i) out += ", ";
      out += f->so_args[i];
    }
    if (f->so_kind == SymbolKind::Function) {
      out += " -> ";
      out += f->so_result;
    } else if (f->so_kind == SymbolKind::Constant) {
      out += f->so_result;
    }
    out += "). ";
    print_rec(f->kids[0], 0, out);
    return;
  }
  }
}

} // namespace

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
  case TermKind::Var:
  case TermKind::Const:
    return t->name;
  case TermKind::App: {
    std::string out = t->name + "(";
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ", ";
      out += print_term(t->args[i]);
    }
    out += ")";
    return out;
  }
  }
  return "?";
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

} // namespace foa

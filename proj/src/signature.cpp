#include "foa/signature.hpp"

#include <algorithm>
#include <cctype>

namespace foa {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '@';
}

} // namespace

bool valid_symbol_name(const std::string& name) {
  if (name.empty()) return false;
  if (std::all_of(name.begin(), name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true; // numeral-named constants
  if (!ident_start(name[0])) return false;
  size_t i = 1;
  while (i < name.size() && ident_char(name[i])) ++i;
  while (i < name.size() && name[i] == '\'') ++i; // primes only at the end
  return i == name.size();
}

bool user_writable_name(const std::string& name, bool allow_numeral) {
  if (name.empty()) return false;
  if (std::all_of(name.begin(), name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return allow_numeral;
  if (!ident_start(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string primed_name(const std::string& name) { return name + "'"; }

std::string fresh_name(const std::string& base, const std::vector<const Signature*>& taken) {
  auto used = [&](const std::string& n) {
    for (const Signature* s : taken)
      if (s && s->has_symbol(n)) return true;
    return false;
  };
  std::string candidate = base + "#";
  for (int i = 1; used(candidate); ++i) candidate = base + "#" + std::to_string(i);
  return candidate;
}

void Signature::check_new_name(const std::string& name) const {
  if (!valid_symbol_name(name))
    throw ValidationError("invalid symbol name '" + name + "'");
  if (by_name_.count(name))
    throw ValidationError("duplicate symbol name '" + name + "'");
}

void Signature::check_sort_exists(const std::string& sort) const {
  if (!has_sort(sort)) throw ValidationError("sort '" + sort + "' is not declared");
}

void Signature::add_sort(const std::string& name) {
  if (name.empty() || !ident_start(name[0]))
    throw ValidationError("invalid sort name '" + name + "'");
  if (has_sort(name)) throw ValidationError("duplicate sort '" + name + "'");
  sorts_.push_back(name);
}

bool Signature::has_sort(const std::string& name) const {
  return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

void Signature::add_constant(const std::string& name, const std::string& sort, bool rigid) {
  check_new_name(name);
  check_sort_exists(sort);
  consts_.push_back({name, sort, rigid});
  order_.emplace_back(SymbolKind::Constant, name);
  by_name_.emplace(name, SymbolKind::Constant);
}

void Signature::add_function(const std::string& name, std::vector<std::string> args,
                             const std::string& result, bool rigid) {
  check_new_name(name);
  for (const auto& a : args) check_sort_exists(a);
  check_sort_exists(result);
  funcs_.push_back({name, std::move(args), result, rigid});
  order_.emplace_back(SymbolKind::Function, name);
  by_name_.emplace(name, SymbolKind::Function);
}

void Signature::add_predicate(const std::string& name, std::vector<std::string> args, bool rigid) {
  check_new_name(name);
  for (const auto& a : args) check_sort_exists(a);
  preds_.push_back({name, std::move(args), rigid});
  order_.emplace_back(SymbolKind::Predicate, name);
  by_name_.emplace(name, SymbolKind::Predicate);
}

const ConstDecl* Signature::find_constant(const std::string& name) const {
  for (const auto& c : consts_)
    if (c.name == name) return &c;
  return nullptr;
}

const FuncDecl* Signature::find_function(const std::string& name) const {
  for (const auto& f : funcs_)
    if (f.name == name) return &f;
  return nullptr;
}

const PredDecl* Signature::find_predicate(const std::string& name) const {
  for (const auto& p : preds_)
    if (p.name == name) return &p;
  return nullptr;
}

std::optional<SymbolKind> Signature::kind_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Signature::symbol_is_rigid(const std::string& name) const {
  if (const auto* c = find_constant(name)) return c->rigid;
  if (const auto* f = find_function(name)) return f->rigid;
  if (const auto* p = find_predicate(name)) return p->rigid;
  throw ValidationError("unknown symbol '" + name + "'");
}

bool Signature::disjoint_with(const Signature& other) const {
  for (const auto& [kind, name] : order_) {
    (void)kind;
    if (other.has_symbol(name)) return false;
  }
  return true;
}

Signature Signature::primed() const {
  Signature out;
  out.sorts_ = sorts_;
  for (const auto& [kind, name] : order_) {
    switch (kind) {
    case SymbolKind::Constant: {
      const auto* c = find_constant(name);
      out.add_constant(c->rigid ? c->name : primed_name(c->name), c->sort, c->rigid);
      break;
    }
    case SymbolKind::Function: {
      const auto* f = find_function(name);
      out.add_function(f->rigid ? f->name : primed_name(f->name), f->args, f->result, f->rigid);
      break;
    }
    case SymbolKind::Predicate: {
      const auto* p = find_predicate(name);
      out.add_predicate(p->rigid ? p->name : primed_name(p->name), p->args, p->rigid);
      break;
    }
    }
  }
  return out;
}

Signature Signature::union_of(const std::vector<const Signature*>& parts) {
  Signature out;
  for (const Signature* part : parts)
    for (const auto& s : part->sorts())
      if (!out.has_sort(s)) out.add_sort(s);
  for (const Signature* part : parts) {
    for (const auto& [kind, name] : part->declaration_order()) {
      if (out.has_symbol(name))
        throw ValidationError("signatures are not disjoint: duplicate symbol '" + name + "'");
      switch (kind) {
      case SymbolKind::Constant: {
        const auto* c = part->find_constant(name);
        out.add_constant(c->name, c->sort, c->rigid);
        break;
      }
      case SymbolKind::Function: {
        const auto* f = part->find_function(name);
        out.add_function(f->name, f->args, f->result, f->rigid);
        break;
      }
      case SymbolKind::Predicate: {
        const auto* p = part->find_predicate(name);
        out.add_predicate(p->name, p->args, p->rigid);
        break;
      }
      }
    }
  }
  return out;
}

} // namespace foa

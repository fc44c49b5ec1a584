#include "foa/structure.hpp"

#include <algorithm>

namespace foa {

void Structure::set_domain(const std::string& sort, std::vector<std::string> elements) {
  domains_[sort] = std::move(elements);
}

const std::vector<std::string>& Structure::domain(const std::string& sort) const {
  auto it = domains_.find(sort);
  if (it == domains_.end()) throw EvalError("no domain for sort '" + sort + "'");
  return it->second;
}

void Structure::set_constant(const std::string& name, const std::string& element) {
  consts_[name] = element;
}

void Structure::set_function_entry(const std::string& name, const std::vector<std::string>& args,
                                   const std::string& value) {
  funcs_[name][args] = value;
}

void Structure::set_predicate(const std::string& name, std::set<std::vector<std::string>> tuples) {
  preds_[name] = std::move(tuples);
}

void Structure::add_predicate_tuple(const std::string& name,
                                    const std::vector<std::string>& tuple) {
  preds_[name].insert(tuple);
}

const std::string& Structure::constant(const std::string& name) const {
  auto it = consts_.find(name);
  if (it == consts_.end()) throw EvalError("constant '" + name + "' has no interpretation");
  return it->second;
}

const std::string& Structure::function_value(const std::string& name,
                                             const std::vector<std::string>& args) const {
  auto it = funcs_.find(name);
  if (it == funcs_.end()) throw EvalError("function '" + name + "' has no interpretation");
  auto jt = it->second.find(args);
  if (jt == it->second.end())
    throw EvalError("function '" + name + "' is not defined on the given tuple");
  return jt->second;
}

bool Structure::predicate_holds(const std::string& name,
                                const std::vector<std::string>& args) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw EvalError("predicate '" + name + "' has no interpretation");
  return it->second.count(args) > 0;
}

const std::set<std::vector<std::string>>&
Structure::predicate_table(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw EvalError("predicate '" + name + "' has no interpretation");
  return it->second;
}

const std::map<std::vector<std::string>, std::string>&
Structure::function_table(const std::string& name) const {
  auto it = funcs_.find(name);
  if (it == funcs_.end()) throw EvalError("function '" + name + "' has no interpretation");
  return it->second;
}

namespace {

// All tuples over the given domains, lexicographic in domain order.
std::vector<std::vector<std::string>>
tuple_space(const Structure& st, const std::vector<std::string>& arg_sorts) {
  std::vector<std::vector<std::string>> tuples{{}};
  for (const auto& sort : arg_sorts) {
    const auto& dom = st.domain(sort);
    std::vector<std::vector<std::string>> next;
    next.reserve(tuples.size() * dom.size());
    for (const auto& t : tuples)
      for (const auto& e : dom) {
        auto copy = t;
        copy.push_back(e);
        next.push_back(std::move(copy));
      }
    tuples = std::move(next);
  }
  return tuples;
}

bool in_domain(const std::vector<std::string>& dom, const std::string& e) {
  return std::find(dom.begin(), dom.end(), e) != dom.end();
}

} // namespace

void Structure::validate() const {
  if (!sig_) throw ValidationError("structure has no signature");
  for (const auto& sort : sig_->sorts())
    if (!domains_.count(sort))
      throw ValidationError("structure misses a domain for sort '" + sort + "'");
  for (const auto& [sort, dom] : domains_) {
    if (!sig_->has_sort(sort))
      throw ValidationError("domain for undeclared sort '" + sort + "'");
    std::set<std::string> seen(dom.begin(), dom.end());
    if (seen.size() != dom.size())
      throw ValidationError("duplicate element in domain of sort '" + sort + "'");
  }
  for (const auto& c : sig_->constants()) {
    auto it = consts_.find(c.name);
    if (it == consts_.end())
      throw ValidationError("constant '" + c.name + "' is uninterpreted");
    if (!in_domain(domain(c.sort), it->second))
      throw ValidationError("constant '" + c.name + "' maps outside its sort domain");
  }
  for (const auto& f : sig_->functions()) {
    auto it = funcs_.find(f.name);
    if (it == funcs_.end())
      throw ValidationError("function '" + f.name + "' is uninterpreted");
    auto tuples = tuple_space(*this, f.args);
    if (it->second.size() != tuples.size())
      throw ValidationError("function '" + f.name + "' is not total");
    for (const auto& t : tuples) {
      auto jt = it->second.find(t);
      if (jt == it->second.end())
        throw ValidationError("function '" + f.name + "' misses a tuple");
      if (!in_domain(domain(f.result), jt->second))
        throw ValidationError("function '" + f.name + "' maps outside the result domain");
    }
  }
  for (const auto& p : sig_->predicates()) {
    auto it = preds_.find(p.name);
    if (it == preds_.end())
      throw ValidationError("predicate '" + p.name + "' is uninterpreted");
    for (const auto& t : it->second) {
      if (t.size() != p.args.size())
        throw ValidationError("predicate '" + p.name + "' holds a tuple of wrong arity");
      for (size_t i = 0; i < t.size(); ++i)
        if (!in_domain(domain(p.args[i]), t[i]))
          throw ValidationError("predicate '" + p.name + "' holds an element outside its domain");
    }
  }
  for (const auto& [name, v] : consts_) {
    (void)v;
    if (!sig_->find_constant(name))
      throw ValidationError("table for undeclared constant '" + name + "'");
  }
  for (const auto& [name, v] : funcs_) {
    (void)v;
    if (!sig_->find_function(name))
      throw ValidationError("table for undeclared function '" + name + "'");
  }
  for (const auto& [name, v] : preds_) {
    (void)v;
    if (!sig_->find_predicate(name))
      throw ValidationError("table for undeclared predicate '" + name + "'");
  }
}

Structure Structure::renamed(const Signature& renamed_sig) const {
  // Tables are carried over by declaration position.
  Structure out(std::make_shared<Signature>(renamed_sig));
  out.domains_ = domains_;
  const auto& from = sig_->declaration_order();
  const auto& to = renamed_sig.declaration_order();
  if (from.size() != to.size())
    throw ValidationError("renamed signature has a different symbol count");
  for (size_t i = 0; i < from.size(); ++i) {
    if (from[i].first != to[i].first)
      throw ValidationError("renamed signature reorders symbol kinds");
    switch (from[i].first) {
    case SymbolKind::Constant:
      out.consts_[to[i].second] = consts_.at(from[i].second);
      break;
    case SymbolKind::Function:
      out.funcs_[to[i].second] = funcs_.at(from[i].second);
      break;
    case SymbolKind::Predicate:
      out.preds_[to[i].second] = preds_.at(from[i].second);
      break;
    }
  }
  return out;
}

Structure Structure::restricted(SignaturePtr sub) const {
  Structure out(sub);
  for (const auto& sort : sub->sorts()) out.set_domain(sort, domain(sort));
  for (const auto& c : sub->constants()) out.consts_[c.name] = consts_.at(c.name);
  for (const auto& f : sub->functions()) out.funcs_[f.name] = funcs_.at(f.name);
  for (const auto& p : sub->predicates()) out.preds_[p.name] = preds_.at(p.name);
  return out;
}

bool Structure::operator==(const Structure& other) const {
  return domains_ == other.domains_ && consts_ == other.consts_ && funcs_ == other.funcs_ &&
         preds_ == other.preds_;
}

Structure join_structures(const std::vector<const Structure*>& parts) {
  std::vector<const Signature*> sigs;
  sigs.reserve(parts.size());
  for (const auto* p : parts) sigs.push_back(p->signature().get());
  Signature joint = Signature::union_of(sigs); // throws on overlapping names
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      for (const auto& [sort, dom] : parts[i]->domains())
        if (parts[j]->domains().count(sort) && parts[j]->domains().at(sort) != dom)
          throw ValidationError("joined structures disagree on the domain of sort '" + sort + "'");

  Structure out(std::make_shared<Signature>(std::move(joint)));
  for (const auto* p : parts) {
    for (const auto& [sort, dom] : p->domains()) out.set_domain(sort, dom);
    for (const auto& c : p->signature()->constants()) out.set_constant(c.name, p->constant(c.name));
    for (const auto& f : p->signature()->functions())
      for (const auto& [args, v] : p->function_table(f.name)) out.set_function_entry(f.name, args, v);
    for (const auto& pr : p->signature()->predicates())
      out.set_predicate(pr.name, p->predicate_table(pr.name));
  }
  return out;
}

namespace {

bool next_permutation_index(std::vector<size_t>& perm) {
  return std::next_permutation(perm.begin(), perm.end());
}

} // namespace

bool isomorphic(const Structure& a, const Structure& b) {
  const Signature& sig = *a.signature();
  if (*b.signature() != sig) return false;
  if (a.domains() != b.domains()) return false;
  if (a == b) return true;

  // Per-sort permutations of the shared domains, tried as one odometer.
  std::vector<std::string> sorts = sig.sorts();
  std::vector<std::vector<size_t>> perms;
  for (const auto& s : sorts) {
    std::vector<size_t> base(a.domain(s).size());
    for (size_t i = 0; i < base.size(); ++i) base[i] = i;
    perms.push_back(base);
  }

  auto map_elem = [&](const std::string& sort, const std::string& e) -> const std::string& {
    const auto& dom = a.domain(sort);
    size_t idx = std::find(dom.begin(), dom.end(), e) - dom.begin();
    size_t si = std::find(sorts.begin(), sorts.end(), sort) - sorts.begin();
    return dom[perms[si][idx]];
  };

  auto matches = [&]() {
    for (const auto& c : sig.constants())
      if (map_elem(c.sort, a.constant(c.name)) != b.constant(c.name)) return false;
    for (const auto& p : sig.predicates()) {
      const auto& ta = a.predicate_table(p.name);
      const auto& tb = b.predicate_table(p.name);
      if (ta.size() != tb.size()) return false;
      for (const auto& tup : ta) {
        std::vector<std::string> mapped(tup.size());
        for (size_t i = 0; i < tup.size(); ++i) mapped[i] = map_elem(p.args[i], tup[i]);
        if (!tb.count(mapped)) return false;
      }
    }
    for (const auto& f : sig.functions()) {
      for (const auto& [args, v] : a.function_table(f.name)) {
        std::vector<std::string> mapped(args.size());
        for (size_t i = 0; i < args.size(); ++i) mapped[i] = map_elem(f.args[i], args[i]);
        if (b.function_value(f.name, mapped) != map_elem(f.result, v)) return false;
      }
    }
    return true;
  };

  // Odometer over the per-sort permutations.
  while (true) {
    if (matches()) return true;
    size_t i = 0;
    while (i < perms.size() && !next_permutation_index(perms[i])) {
      // wrapped: perms[i] is back to identity, carry to the next sort
      ++i;
    }
    if (i == perms.size()) return false;
  }
}

} // namespace foa

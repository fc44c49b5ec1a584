#include "foa/enumerate.hpp"

#include <algorithm>

namespace foa {

std::vector<std::vector<std::string>> tuples_over(const DomainMap& domains,
                                                  const std::vector<std::string>& arg_sorts) {
  std::vector<std::vector<std::string>> tuples{{}};
  for (const auto& sort : arg_sorts) {
    auto it = domains.find(sort);
    if (it == domains.end()) throw ValidationError("no domain for sort '" + sort + "'");
    std::vector<std::vector<std::string>> next;
    next.reserve(tuples.size() * it->second.size());
    for (const auto& t : tuples)
      for (const auto& e : it->second) {
        auto copy = t;
        copy.push_back(e);
        next.push_back(std::move(copy));
      }
    tuples = std::move(next);
  }
  return tuples;
}

StructureEnumerator::StructureEnumerator(SignaturePtr sig, DomainMap domains)
    : sig_(std::move(sig)), domains_(std::move(domains)) {
  for (const auto& sort : sig_->sorts())
    if (!domains_.count(sort))
      throw ValidationError("domain assignment misses sort '" + sort + "'");
  for (const auto& [kind, name] : sig_->declaration_order()) {
    Slot slot;
    slot.kind = kind;
    slot.name = name;
    switch (kind) {
    case SymbolKind::Constant: {
      const auto* c = sig_->find_constant(name);
      slot.radix = domains_.at(c->sort).size();
      slot.digits.assign(1, 0);
      break;
    }
    case SymbolKind::Function: {
      const auto* f = sig_->find_function(name);
      slot.tuples = tuples_over(domains_, f->args);
      slot.radix = domains_.at(f->result).size();
      slot.digits.assign(slot.tuples.size(), 0);
      break;
    }
    case SymbolKind::Predicate: {
      const auto* p = sig_->find_predicate(name);
      slot.tuples = tuples_over(domains_, p->args);
      slot.radix = 2;
      slot.digits.assign(slot.tuples.size(), 0);
      break;
    }
    }
    if (slot.radix == 0) throw ValidationError("empty domain in enumeration");
    slots_.push_back(std::move(slot));
  }
}

void StructureEnumerator::reset() {
  for (auto& s : slots_) std::fill(s.digits.begin(), s.digits.end(), 0);
  started_ = false;
  done_ = false;
}

void StructureEnumerator::emit(Structure& out) const {
  out = Structure(sig_);
  for (const auto& [sort, dom] : domains_) out.set_domain(sort, dom);
  for (const auto& slot : slots_) {
    switch (slot.kind) {
    case SymbolKind::Constant: {
      const auto* c = sig_->find_constant(slot.name);
      out.set_constant(slot.name, domains_.at(c->sort)[slot.digits[0]]);
      break;
    }
    case SymbolKind::Function: {
      const auto* f = sig_->find_function(slot.name);
      const auto& result_dom = domains_.at(f->result);
      for (size_t i = 0; i < slot.tuples.size(); ++i)
        out.set_function_entry(slot.name, slot.tuples[i], result_dom[slot.digits[i]]);
      break;
    }
    case SymbolKind::Predicate: {
      std::set<std::vector<std::string>> table;
      for (size_t i = 0; i < slot.tuples.size(); ++i)
        if (slot.digits[i]) table.insert(slot.tuples[i]);
      out.set_predicate(slot.name, std::move(table));
      break;
    }
    }
  }
}

bool StructureEnumerator::next(Structure& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    emit(out);
    return true;
  }
  // Increment: last symbol fastest; within a symbol, first tuple fastest.
  for (size_t s = slots_.size(); s-- > 0;) {
    auto& slot = slots_[s];
    for (size_t d = 0; d < slot.digits.size(); ++d) {
      if (++slot.digits[d] < slot.radix) {
        emit(out);
        return true;
      }
      slot.digits[d] = 0;
    }
  }
  done_ = true;
  return false;
}

unsigned long long StructureEnumerator::count(const Signature& sig, const DomainMap& domains) {
  unsigned __int128 total = 1;
  const unsigned __int128 cap = (unsigned __int128)1 << 62;
  auto mul_pow = [&](unsigned long long base, unsigned long long exp) {
    for (unsigned long long i = 0; i < exp; ++i) {
      total *= base;
      if (total > cap) throw ResourceError("structure space too large to enumerate");
    }
  };
  for (const auto& c : sig.constants()) mul_pow(domains.at(c.sort).size(), 1);
  for (const auto& f : sig.functions()) {
    unsigned long long slots = 1;
    for (const auto& a : f.args) slots *= domains.at(a).size();
    mul_pow(domains.at(f.result).size(), slots);
  }
  for (const auto& p : sig.predicates()) {
    unsigned long long slots = 1;
    for (const auto& a : p.args) slots *= domains.at(a).size();
    mul_pow(2, slots);
  }
  return (unsigned long long)total;
}

std::vector<Structure> all_structures(SignaturePtr sig, const DomainMap& domains,
                                      unsigned long long budget) {
  unsigned long long n = StructureEnumerator::count(*sig, domains);
  if (n > budget)
    throw ResourceError("enumeration budget exceeded: " + std::to_string(n) +
                        " structures, budget " + std::to_string(budget));
  std::vector<Structure> out;
  out.reserve(n);
  StructureEnumerator en(sig, domains);
  Structure st;
  while (en.next(st)) out.push_back(st);
  return out;
}

std::vector<DomainMap> domain_assignments(const std::vector<std::string>& sorts, int bound) {
  std::vector<DomainMap> out;
  if (bound < 1) return out;
  std::vector<int> sizes(sorts.size(), 1);
  while (true) {
    DomainMap m;
    for (size_t i = 0; i < sorts.size(); ++i) {
      std::vector<std::string> dom;
      for (int e = 1; e <= sizes[i]; ++e) dom.push_back("e" + std::to_string(e));
      m[sorts[i]] = std::move(dom);
    }
    out.push_back(std::move(m));
    size_t i = 0;
    while (i < sizes.size() && sizes[i] == bound) sizes[i++] = 1;
    if (i == sizes.size()) break;
    ++sizes[i];
  }
  return out;
}

namespace {

// Deterministic dump of the rigid part, used to group letters into
// rigidity-compatible families.
std::string rigid_key(const Structure& st) {
  std::string key;
  const Signature& sig = *st.signature();
  for (const auto& c : sig.constants())
    if (c.rigid) key += "c:" + c.name + "=" + st.constant(c.name) + ";";
  for (const auto& f : sig.functions())
    if (f.rigid) {
      key += "f:" + f.name + "{";
      for (const auto& [args, v] : st.function_table(f.name)) {
        for (const auto& a : args) key += a + ",";
        key += "->" + v + ";";
      }
      key += "}";
    }
  for (const auto& p : sig.predicates())
    if (p.rigid) {
      key += "p:" + p.name + "{";
      for (const auto& t : st.predicate_table(p.name)) {
        for (const auto& a : t) key += a + ",";
        key += ";";
      }
      key += "}";
    }
  return key;
}

} // namespace

void for_each_word(SignaturePtr sig, const DomainMap& domains, size_t min_len, size_t max_len,
                   const std::function<void(const Word&)>& fn, unsigned long long letter_budget) {
  if (min_len == 0) {
    Word empty;
    empty.sig = sig;
    fn(empty);
  }
  if (max_len == 0) return;
  std::vector<Structure> letters = all_structures(sig, domains, letter_budget);
  // Group letters by their rigid fingerprint; words never mix groups.
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < letters.size(); ++i) groups[rigid_key(letters[i])].push_back(i);

  Word w;
  w.sig = sig;
  for (const auto& [key, members] : groups) {
    (void)key;
    for (size_t len = std::max<size_t>(1, min_len); len <= max_len; ++len) {
      std::vector<size_t> pick(len, 0);
      while (true) {
        w.letters.clear();
        for (size_t i = 0; i < len; ++i) w.letters.push_back(letters[members[pick[i]]]);
        fn(w);
        size_t i = 0;
        while (i < len && ++pick[i] == members.size()) pick[i++] = 0;
        if (i == len) break;
      }
    }
  }
}

} // namespace foa

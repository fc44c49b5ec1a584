#ifndef FOA_SIGNATURE_HPP
#define FOA_SIGNATURE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foa/errors.hpp"

namespace foa {

enum class SymbolKind { Constant, Function, Predicate };

struct ConstDecl {
  std::string name;
  std::string sort;
  bool rigid = false;
  bool operator==(const ConstDecl&) const = default;
};

struct FuncDecl {
  std::string name;
  std::vector<std::string> args;
  std::string result;
  bool rigid = false;
  bool operator==(const FuncDecl&) const = default;
};

struct PredDecl {
  std::string name;
  std::vector<std::string> args; // empty for propositions
  bool rigid = false;
  bool operator==(const PredDecl&) const = default;
};

/// A multi-sorted vocabulary. Symbol names are unique across all kinds and
/// every referenced sort must be declared. Sort names live in a global
/// namespace shared between signatures; symbol names do not.
///
/// Name decoration conventions (reserved, not writable through the JSON
/// loader): a trailing apostrophe marks a primed copy of a non-rigid symbol,
/// '#' marks generated symbols (surrogates, tags, sinks), '@' marks
/// step-indexed copies used by the bounded unrolling.
class Signature {
public:
  Signature() = default;

  void add_sort(const std::string& name);
  void add_constant(const std::string& name, const std::string& sort, bool rigid);
  void add_function(const std::string& name, std::vector<std::string> args,
                    const std::string& result, bool rigid);
  void add_predicate(const std::string& name, std::vector<std::string> args, bool rigid);

  const std::vector<std::string>& sorts() const { return sorts_; }
  bool has_sort(const std::string& name) const;

  const std::vector<ConstDecl>& constants() const { return consts_; }
  const std::vector<FuncDecl>& functions() const { return funcs_; }
  const std::vector<PredDecl>& predicates() const { return preds_; }

  /// Unified symbol declaration order (the enumeration and serialization order).
  const std::vector<std::pair<SymbolKind, std::string>>& declaration_order() const {
    return order_;
  }

  const ConstDecl* find_constant(const std::string& name) const;
  const FuncDecl* find_function(const std::string& name) const;
  const PredDecl* find_predicate(const std::string& name) const;
  bool has_symbol(const std::string& name) const { return kind_of(name).has_value(); }
  std::optional<SymbolKind> kind_of(const std::string& name) const;
  bool symbol_is_rigid(const std::string& name) const;

  bool disjoint_with(const Signature& other) const;

  /// The signature with every non-rigid symbol renamed to its primed version.
  /// Rigid symbols and sorts are untouched. Not idempotent: priming twice
  /// yields the double-primed copy.
  Signature primed() const;

  /// Union of signatures with pairwise-disjoint symbol names. Sorts may be
  /// shared and are deduplicated.
  static Signature union_of(const std::vector<const Signature*>& parts);

  bool operator==(const Signature&) const = default;

private:
  void check_new_name(const std::string& name) const;
  void check_sort_exists(const std::string& sort) const;

  std::vector<std::string> sorts_;
  std::vector<ConstDecl> consts_;
  std::vector<FuncDecl> funcs_;
  std::vector<PredDecl> preds_;
  std::vector<std::pair<SymbolKind, std::string>> order_;
  std::map<std::string, SymbolKind> by_name_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Primed name of a non-rigid symbol (one more trailing apostrophe).
std::string primed_name(const std::string& name);

/// True if the character set is acceptable for an internally built symbol.
bool valid_symbol_name(const std::string& name);

/// True if the name is writable in user input: an identifier with no
/// decoration characters, or (constants only) a base-10 numeral.
bool user_writable_name(const std::string& name, bool allow_numeral);

/// First name in the sequence base#, base#1, base#2, ... not present in
/// `taken`. Deterministic given the inputs.
std::string fresh_name(const std::string& base, const std::vector<const Signature*>& taken);

} // namespace foa

#endif

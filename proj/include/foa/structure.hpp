#ifndef FOA_STRUCTURE_HPP
#define FOA_STRUCTURE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "foa/signature.hpp"

namespace foa {

/// An explicit finite interpretation of a signature. Element ids are interned
/// strings scoped to a sort; equality of elements is id equality. Domains are
/// ordered: the order fixes tuple enumeration and serialization.
class Structure {
public:
  Structure() = default;
  explicit Structure(SignaturePtr sig) : sig_(std::move(sig)) {}

  const SignaturePtr& signature() const { return sig_; }

  void set_domain(const std::string& sort, std::vector<std::string> elements);
  const std::vector<std::string>& domain(const std::string& sort) const;
  const std::map<std::string, std::vector<std::string>>& domains() const { return domains_; }

  void set_constant(const std::string& name, const std::string& element);
  void set_function_entry(const std::string& name, const std::vector<std::string>& args,
                          const std::string& value);
  void set_predicate(const std::string& name, std::set<std::vector<std::string>> tuples);
  void add_predicate_tuple(const std::string& name, const std::vector<std::string>& tuple);

  const std::string& constant(const std::string& name) const;
  const std::string& function_value(const std::string& name,
                                    const std::vector<std::string>& args) const;
  bool predicate_holds(const std::string& name, const std::vector<std::string>& args) const;
  const std::set<std::vector<std::string>>& predicate_table(const std::string& name) const;
  const std::map<std::vector<std::string>, std::string>&
  function_table(const std::string& name) const;

  /// Checks every table against the signature: totality of functions over the
  /// cartesian product of argument domains, element membership, no tables for
  /// undeclared symbols. Throws ValidationError on the first violation.
  void validate() const;

  /// Same tables under the renaming given by the primed signature. Used to
  /// build the rho' part of transition evaluation.
  Structure renamed(const Signature& renamed_sig) const;

  /// Structure over the sub-signature containing only the given symbols.
  Structure restricted(SignaturePtr sub) const;

  bool operator==(const Structure& other) const;

private:
  SignaturePtr sig_;
  std::map<std::string, std::vector<std::string>> domains_;
  std::map<std::string, std::string> consts_;
  std::map<std::string, std::map<std::vector<std::string>, std::string>> funcs_;
  std::map<std::string, std::set<std::vector<std::string>>> preds_;
};

/// Disjoint union of structures over pairwise-disjoint signatures that agree
/// on every shared sort's domain.
Structure join_structures(const std::vector<const Structure*>& parts);

/// True if some per-sort bijection between the (equal-length) domains maps the
/// tables of a onto the tables of b. Both structures must share a signature.
bool isomorphic(const Structure& a, const Structure& b);

/// A finite sequence of structures over one signature. Rigid symbols and sort
/// domains must be constant across letters; see validate_word in theory.hpp.
struct Word {
  SignaturePtr sig;
  std::vector<Structure> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

} // namespace foa

#endif

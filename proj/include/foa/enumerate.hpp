#ifndef FOA_ENUMERATE_HPP
#define FOA_ENUMERATE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "foa/structure.hpp"

namespace foa {

using DomainMap = std::map<std::string, std::vector<std::string>>;

/// Streams every structure over the signature with exactly the given domains,
/// in a deterministic canonical order: symbols in declaration order (later
/// symbols cycle fastest), table slots in lexicographic tuple order (earlier
/// tuples cycle fastest), elements in domain order.
class StructureEnumerator {
public:
  StructureEnumerator(SignaturePtr sig, DomainMap domains);

  /// Fills `out` with the next structure; false when exhausted.
  bool next(Structure& out);

  void reset();

  /// Closed-form size of the whole space. Throws ResourceError on overflow.
  static unsigned long long count(const Signature& sig, const DomainMap& domains);

private:
  struct Slot {
    SymbolKind kind;
    std::string name;
    std::vector<std::vector<std::string>> tuples; // functions/predicates
    size_t radix = 1;                             // per-digit radix
    std::vector<size_t> digits;
  };

  void emit(Structure& out) const;
  SignaturePtr sig_;
  DomainMap domains_;
  std::vector<Slot> slots_;
  bool started_ = false;
  bool done_ = false;
};

/// Materializes the space, guarded by a budget on the structure count.
std::vector<Structure> all_structures(SignaturePtr sig, const DomainMap& domains,
                                      unsigned long long budget);

/// All tuples over the given argument sorts, lexicographic in domain order.
std::vector<std::vector<std::string>> tuples_over(const DomainMap& domains,
                                                  const std::vector<std::string>& arg_sorts);

/// Domain assignments for the given sorts with sizes 1..bound each, elements
/// named e1, e2, ... Deterministic order: odometer over sizes.
std::vector<DomainMap> domain_assignments(const std::vector<std::string>& sorts, int bound);

/// Enumerates every word over the signature with the given domains and length
/// in [min_len, max_len], respecting rigidity (rigid interpretations constant
/// across letters). The callback may be invoked a large number of times; the
/// budget bounds the number of letters enumerated, not words.
void for_each_word(SignaturePtr sig, const DomainMap& domains, size_t min_len, size_t max_len,
                   const std::function<void(const Word&)>& fn,
                   unsigned long long letter_budget = 1000000);

} // namespace foa

#endif

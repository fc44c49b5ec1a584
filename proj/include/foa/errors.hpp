#ifndef FOA_ERRORS_HPP
#define FOA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace foa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Concrete-syntax errors, with a position in the input text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  size_t pos() const { return pos_; }

private:
  size_t pos_;
};

/// Sort mismatches and unknown-symbol errors during formula checking.
class SortError : public Error {
public:
  using Error::Error;
};

/// Violated structural invariants (signatures, structures, automata, files).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Missing variable assignment or symbol during evaluation.
class EvalError : public Error {
public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured budget.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Zero or multiple successors where a unique one was required.
class DeterminismError : public Error {
public:
  using Error::Error;
};

/// Child-process solver failures (spawn, protocol, unparseable output).
class SolverError : public Error {
public:
  using Error::Error;
};

} // namespace foa

#endif

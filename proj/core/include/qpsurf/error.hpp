#ifndef QPSURF_ERROR_HPP
#define QPSURF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpsurf {

/// Malformed text input (files, scalars, element lines).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of a mathematical operation does not hold
/// (2-cycle at the mutation vertex, unflippable arc, unknown arrow, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpsurf

#endif  // QPSURF_ERROR_HPP

// Exception types shared by every module.

#ifndef SUPERCHAR_ERROR_HPP_
#define SUPERCHAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace superchar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input: bad tables, unknown catalog names,
// unparsable files. The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A caller handed an operation arguments outside its contract
// (e.g. a subgroup that is not S-normal).
struct PreconditionError : Error {
  using Error::Error;
};

// Size guards (max group order, max number of irreducibles).
struct GuardError : Error {
  using Error::Error;
};

// Something that must hold by construction did not.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace superchar

#endif  // SUPERCHAR_ERROR_HPP_

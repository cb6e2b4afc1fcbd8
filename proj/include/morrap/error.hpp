#ifndef MORRAP_ERROR_HPP
#define MORRAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace morrap {

/// Failure categories. The command-line tool maps each one to an exit code.
enum class ErrorKind {
  invalid_argument,  ///< precondition violated by a caller
  config,            ///< malformed or incomplete configuration
  infeasible,        ///< empty feasible region
  degenerate,        ///< zero denominator, collapsed footprint, equal anchors
  budget,            ///< design lattice larger than the enumeration budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace morrap

#endif  // MORRAP_ERROR_HPP

#ifndef ACM_ERRORS_HPP
#define ACM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acm {

/// Inputs outside an operation's mathematical domain (p below the
/// canonical-branch threshold, inadmissible density spec, out-of-range
/// unitary parameters, ...). The CLI maps these to exit status 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative routine failed to meet its residual target. Never silent.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acm

#endif  // ACM_ERRORS_HPP

#ifndef ACM_TOOLS_CLI_APP_HPP
#define ACM_TOOLS_CLI_APP_HPP

#include <string>

#include "json_io.hpp"

namespace acm {

/// Default tolerances; overridable through the JSON file named by the
/// ACM_TOLERANCE_PROFILE environment variable, then by per-command --tol.
struct ToleranceProfile {
  double unit_modulus = 1e-9;  // root-modulus acceptance in unitary-check
  double structure = 1e-9;     // coefficient-structure identities
  double density = 1e-10;      // admissibility and density validation
  double hermitian = 1e-12;    // hermiticity checks in reports

  static ToleranceProfile from_environment();
};

struct RunOutcome {
  Json document;
  int exit_code = 0;  // 0 success, 2 domain verdicts carrying a document
};

/// Executes one request: {"command": ..., payload fields...}. Throws
/// std::invalid_argument on malformed input (exit 1) and DomainError /
/// ConvergenceError on domain failures without a result document (exit 2).
RunOutcome run_request(const Json& request, const ToleranceProfile& profile);

/// Human-readable rendering of a result document.
std::string render_text(const Json& doc);

}  // namespace acm

#endif  // ACM_TOOLS_CLI_APP_HPP

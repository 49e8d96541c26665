#pragma once

#include <stdexcept>
#include <string>

namespace qwp {

/// Failure categories raised by validation and numeric routines. The CLI
/// maps these onto its exit-code contract; the token form (see to_string)
/// names the first violated invariant.
enum class errc {
  dimension_mismatch,
  not_hermitian,
  not_positive,
  exceeds_identity,
  trace_too_large,
  not_finite,
  empty_list,
  trace_increasing,
  no_convergence,
  not_commuting,
  verification_failed,
  invalid_model,
  invalid_dimension,
  parse_error,
  io_error,
};

/// Stable kebab-case token for an error category, e.g. "not-positive".
const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace qwp

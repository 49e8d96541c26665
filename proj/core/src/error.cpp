#include "qwp/error.hpp"

namespace qwp {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::not_hermitian: return "not-hermitian";
    case errc::not_positive: return "not-positive";
    case errc::exceeds_identity: return "exceeds-identity";
    case errc::trace_too_large: return "trace-too-large";
    case errc::not_finite: return "not-finite";
    case errc::empty_list: return "empty-list";
    case errc::trace_increasing: return "trace-increasing";
    case errc::no_convergence: return "no-convergence";
    case errc::not_commuting: return "not-commuting";
    case errc::verification_failed: return "verification-failed";
    case errc::invalid_model: return "invalid-model";
    case errc::invalid_dimension: return "invalid-dimension";
    case errc::parse_error: return "parse-error";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace qwp

#pragma once

#include <filesystem>
#include <optional>
#include <variant>

#include "qwp/commutativity.hpp"
#include "qwp/sysenv.hpp"

namespace qwp::io {

/// Unvalidated system-environment presentation as read from disk; run it
/// through validate_model with the caller's tolerance.
struct RawSysEnv {
  std::size_t sys_dim = 0;
  std::size_t env_dim = 0;
  ComplexMatrix unitary;
  ComplexMatrix projector;
  std::vector<Complex> env_state;
};

/// Channel file contents: the declared system dimension plus exactly one of
/// the two program presentations.
struct RawChannel {
  std::size_t dim = 0;
  std::variant<std::vector<ComplexMatrix>, RawSysEnv> body;

  bool is_kraus() const { return body.index() == 0; }
};

/// Matrix files hold {"dim": n, "entries": [[re, im], ...]} with dim^2
/// row-major entries. Numbers are written with full round-trip precision
/// (up to 17 significant digits), so save/load is bit-exact.
ComplexMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// Channel files hold {"dim": n, "kraus": [entries, ...]} or
/// {"dim": n, "sysenv": {"sys_dim", "env_dim", "U", "P", "e0"}}.
RawChannel load_channel(const std::filesystem::path& path);
void save_kraus_channel(const std::filesystem::path& path, const KrausChannel& channel);

void save_expected(const std::filesystem::path& path, bool inputs_commute, bool wps_commute);

/// Report files mirror CommutativityReport losslessly: the four verdicts,
/// commutator norm, trace gap, the witness when present, the agree flag and
/// the tolerance used.
void save_report(const std::filesystem::path& path, const CommutativityReport& report,
                 std::size_t dim);

}  // namespace qwp::io

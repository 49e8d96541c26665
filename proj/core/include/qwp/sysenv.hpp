#pragma once

#include <span>
#include <vector>

#include "qwp/channels.hpp"

namespace qwp {

/// Quantum program presented as a dilation: a unitary U and projector P on
/// the composite space system (x) environment, plus a fixed unit environment
/// state e0. Composite index convention is system-major: (i, a) maps to
/// i * env_dim + a.
class SystemEnvironmentModel {
 public:
  std::size_t sys_dim() const { return sys_dim_; }
  std::size_t env_dim() const { return env_dim_; }
  std::size_t composite_dim() const { return sys_dim_ * env_dim_; }
  const ComplexMatrix& unitary() const { return unitary_; }
  const ComplexMatrix& projector() const { return projector_; }
  const std::vector<Complex>& env_state() const { return env_state_; }

 private:
  friend SystemEnvironmentModel validate_model(std::size_t, std::size_t, ComplexMatrix,
                                               ComplexMatrix, std::vector<Complex>, double);
  SystemEnvironmentModel(std::size_t sys_dim, std::size_t env_dim, ComplexMatrix u,
                         ComplexMatrix p, std::vector<Complex> e0)
      : sys_dim_(sys_dim), env_dim_(env_dim), unitary_(std::move(u)), projector_(std::move(p)),
        env_state_(std::move(e0)) {}

  std::size_t sys_dim_;
  std::size_t env_dim_;
  ComplexMatrix unitary_;
  ComplexMatrix projector_;
  std::vector<Complex> env_state_;
};

/// Checks U^dagger U = I, P = P^dagger = P^2 and ||e0|| = 1, throwing
/// invalid-model naming the failed check (dimension-mismatch for size
/// inconsistencies).
SystemEnvironmentModel validate_model(std::size_t sys_dim, std::size_t env_dim, ComplexMatrix u,
                                      ComplexMatrix p, std::vector<Complex> e0,
                                      double tol = kDefaultTol);

/// Contraction of the environment indices: result(i,j) = sum_a X((i,a),(j,a)).
/// Preserves the trace.
ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t sys_dim, std::size_t env_dim);

/// <e0| X |e0> taken on the environment factor only:
/// result(i,j) = sum_{a,b} conj(e0[a]) X((i,a),(j,b)) e0[b].
ComplexMatrix env_contract(const ComplexMatrix& x, std::span<const Complex> e0,
                           std::size_t sys_dim, std::size_t env_dim);

/// Weakest precondition straight from the dilation:
/// <e0| U^dagger P (M (x) I_E) P U |e0>, validated in M's mode.
QuantumPredicate se_wp(const SystemEnvironmentModel& model, const QuantumPredicate& m);

/// State-side action tr_E[P U (rho (x) e0 e0^dagger) U^dagger P].
DensityMatrix se_apply(const SystemEnvironmentModel& model, const DensityMatrix& rho);

/// Kraus operators equivalent to the dilation, oriented so that
/// wp(extract_kraus(model), M) == se_wp(model, M): the raw dilation
/// operators (I (x) <a|) P U (I (x) |e0>) satisfy the opposite convention,
/// so each one is adjointed. Operators with Frobenius norm <= 1e-12 are
/// pruned (at least one operator is always kept).
KrausChannel extract_kraus(const SystemEnvironmentModel& model);

}  // namespace qwp

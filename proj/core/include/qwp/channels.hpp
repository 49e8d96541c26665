#pragma once

#include <cstdint>
#include <vector>

#include "qwp/predicates.hpp"

namespace qwp {

/// Quantum program in operator-sum form: a finite list of same-dimension
/// Kraus operators E_i with sum_i E_i E_i^dagger below the identity, the
/// trace-nonincreasing condition under the orientation used throughout this
/// library (see wp / apply).
class KrausChannel {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

 private:
  friend KrausChannel validate_channel(std::vector<ComplexMatrix>, double);
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> ops)
      : dim_(dim), operators_(std::move(ops)) {}

  std::size_t dim_;
  std::vector<ComplexMatrix> operators_;
};

/// Throws empty-list, dimension-mismatch, or trace-increasing (when
/// sum E_i E_i^dagger is not below the identity).
KrausChannel validate_channel(std::vector<ComplexMatrix> ops, double tol = kDefaultTol);

/// Weakest precondition wp(E)(M) = sum_i E_i M E_i^dagger, wrapped in the
/// same validation mode as M. The result is Hermitian whenever M is, and
/// strict inputs give strict outputs.
QuantumPredicate wp(const KrausChannel& channel, const QuantumPredicate& m);

/// State-side action E(rho) = sum_i E_i^dagger rho E_i. This orientation is
/// the unique one dual to wp above: Tr(wp(E)(M) rho) = Tr(M E(rho)) for all
/// inputs.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// Samples `samples` pseudorandom densities rho_k = random_density(dim,
/// seed + k) and checks |Tr(wp(E)(M) rho_k) - Tr(M E(rho_k))| <= tol for
/// each. A sampled cross-check of the duality, not a proof.
bool check_duality(const KrausChannel& channel, const QuantumPredicate& m,
                   std::size_t samples = 100, std::uint64_t seed = 0, double tol = kDefaultTol);

/// Precondition relation M {E} N, decided exactly through the wp
/// characterization: true iff M <= wp(E)(N) in the Loewner order.
bool is_precondition(const QuantumPredicate& m, const QuantumPredicate& n,
                     const KrausChannel& channel, double tol = kDefaultTol);

}  // namespace qwp

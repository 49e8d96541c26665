#pragma once

#include <optional>
#include <vector>

#include "qwp/channels.hpp"
#include "qwp/eig.hpp"

namespace qwp {

enum class Verdict { commutes, does_not_commute };

const char* to_string(Verdict v) noexcept;

/// Constructive certificate that two Hermitian matrices commute: a single
/// unitary U with U^dagger A U = diag(lambda) and U^dagger B U = diag(mu).
struct SimDiagWitness {
  ComplexMatrix unitary;
  std::vector<double> lambda;
  std::vector<double> mu;
};

/// Verdicts of the four commutativity procedures plus the reported norms.
/// `agree` is true iff all four verdicts coincide; the procedures are
/// provably equivalent, so a false `agree` signals an implementation bug.
struct CommutativityReport {
  Verdict direct;
  double commutator_norm;

  Verdict hermitian_product;

  Verdict trace_identity;
  double trace_gap;

  Verdict simultaneous_diag;
  std::optional<SimDiagWitness> witness;

  bool agree;
  double tol;
};

/// AB - BA. Anti-Hermitian whenever A and B are Hermitian.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Definitional test: ||AB - BA||_F <= tol * max(1, ||A|| * ||B||).
Verdict check_direct(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

/// Hermitian-product test: A and B commute iff AB is Hermitian.
Verdict check_hermitian_product(const ComplexMatrix& a, const ComplexMatrix& b,
                                double tol = kDefaultTol);

/// Trace test: A and B commute iff Tr((AB)^2) = Tr(A^2 B^2). Both traces are
/// real for Hermitian inputs; an imaginary residue above tolerance is
/// rejected rather than silently dropped.
Verdict check_trace_identity(const ComplexMatrix& a, const ComplexMatrix& b,
                             double tol = kDefaultTol);

/// |Tr((AB)^2) - Tr(A^2 B^2)|, the quantity behind check_trace_identity.
double trace_identity_gap(const ComplexMatrix& a, const ComplexMatrix& b);

/// Builds a simultaneous diagonalizer for two commuting Hermitian matrices:
/// eigendecompose A, cluster its eigenvalues into eigenspaces (gap threshold
/// max(1e-8, 1e-6 * spread), one retry at 100x on verification failure),
/// then eigendecompose the compression of B inside each cluster. The
/// returned witness is verified before it escapes.
///
/// Throws not-commuting when check_direct rejects, verification-failed when
/// no clustering yields a diagonalizing unitary.
SimDiagWitness simultaneous_diagonalize(const ComplexMatrix& a, const ComplexMatrix& b,
                                        double tol = kDefaultTol);

/// Runs all four procedures and cross-checks them. The diagonalization is
/// only attempted when the direct test passes; otherwise its slot reports
/// does_not_commute with no witness.
CommutativityReport check_all(const ComplexMatrix& a, const ComplexMatrix& b,
                              double tol = kDefaultTol);

/// check_all applied to the weakest preconditions wp(E)(M) and wp(E)(N).
/// M and N themselves need not commute.
CommutativityReport wp_commutes(const QuantumPredicate& m, const QuantumPredicate& n,
                                const KrausChannel& channel, double tol = kDefaultTol);

}  // namespace qwp

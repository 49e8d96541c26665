#pragma once

#include <vector>

#include "qwp/complex_matrix.hpp"

namespace qwp {

/// Spectral factorization A = U diag(eigenvalues) U^dagger of a Hermitian
/// matrix. Eigenvalues are real and nondecreasing; the columns of `unitary`
/// are the matching orthonormal eigenvectors.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix unitary;
};

/// Eigendecomposition by cyclic Jacobi rotations adapted to complex
/// Hermitian matrices: two-sided unitary 2x2 rotations annihilate
/// off-diagonal pairs until the off-diagonal Frobenius mass drops below
/// 1e-13 * ||A||_F. The sweep budget is 40; exhausting it raises
/// no-convergence. Ties in the final nondecreasing sort keep Jacobi output
/// order (stable sort), so results are deterministic.
///
/// Throws not-hermitian when is_hermitian(a, tol) fails.
EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol = kDefaultTol);

/// True iff the smallest eigenvalue of `a` is >= -tol * max(1, ||a||_F).
/// Throws not-hermitian when the input is not Hermitian.
bool is_psd(const ComplexMatrix& a, double tol = kDefaultTol);

/// Loewner order: a is below b iff b - a is positive semidefinite.
bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

}  // namespace qwp

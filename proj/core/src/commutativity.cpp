#include "qwp/commutativity.hpp"

#include <cmath>
#include <utility>

namespace qwp {

namespace {

void require_hermitian_pair(const ComplexMatrix& a, const ComplexMatrix& b, double tol,
                            const char* op) {
  detail::require_same_dim(a, b, op);
  if (!is_hermitian(a, tol))
    throw Error(errc::not_hermitian, std::string(op) + ": first argument is not Hermitian");
  if (!is_hermitian(b, tol))
    throw Error(errc::not_hermitian, std::string(op) + ": second argument is not Hermitian");
}

// Eigenvalue clusters of a nondecreasing sequence: a new cluster starts
// wherever the gap exceeds `threshold`. Returns the start index of each
// cluster plus a final sentinel equal to n.
std::vector<std::size_t> cluster_boundaries(const std::vector<double>& values, double threshold) {
  std::vector<std::size_t> bounds{0};
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] - values[k - 1] > threshold) bounds.push_back(k);
  bounds.push_back(values.size());
  return bounds;
}

struct SimDiagAttempt {
  SimDiagWitness witness;
  bool verified;
};

SimDiagAttempt attempt_simdiag(const ComplexMatrix& a, const ComplexMatrix& b,
                               const EigenDecomposition& eig_a, double cluster_threshold,
                               double tol) {
  const std::size_t n = a.dim();
  ComplexMatrix u = eig_a.unitary;

  const std::vector<std::size_t> bounds = cluster_boundaries(eig_a.eigenvalues, cluster_threshold);
  for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
    const std::size_t lo = bounds[c];
    const std::size_t k = bounds[c + 1] - lo;
    if (k < 2) continue;

    // Compress B onto the cluster's eigenspace and diagonalize the block.
    ComplexMatrix bu(n);  // columns lo..lo+k of B * U, stored in a full matrix
    for (std::size_t col = 0; col < k; ++col)
      for (std::size_t i = 0; i < n; ++i) {
        Complex v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += b(i, j) * u(j, lo + col);
        bu(i, col) = v;
      }
    ComplexMatrix block(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = 0; col < k; ++col) {
        Complex v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += std::conj(u(i, lo + r)) * bu(i, col);
        block(r, col) = v;
      }
    // The compression is Hermitian up to the cluster-splitting error.
    for (std::size_t r = 0; r < k; ++r) {
      block(r, r) = block(r, r).real();
      for (std::size_t col = r + 1; col < k; ++col) {
        const Complex v = 0.5 * (block(r, col) + std::conj(block(col, r)));
        block(r, col) = v;
        block(col, r) = std::conj(v);
      }
    }
    const EigenDecomposition eig_block = hermitian_eig(block, tol);

    ComplexMatrix rotated(n);  // replacement columns: U_cluster * W
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t col = 0; col < k; ++col) {
        Complex v = 0.0;
        for (std::size_t r = 0; r < k; ++r) v += u(i, lo + r) * eig_block.unitary(r, col);
        rotated(i, col) = v;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t col = 0; col < k; ++col) u(i, lo + col) = rotated(i, col);
  }

  const ComplexMatrix ua = adjoint(u) * a * u;
  const ComplexMatrix ub = adjoint(u) * b * u;

  SimDiagAttempt attempt;
  attempt.witness.unitary = u;
  attempt.witness.lambda.resize(n);
  attempt.witness.mu.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    attempt.witness.lambda[i] = ua(i, i).real();
    attempt.witness.mu[i] = ub(i, i).real();
  }
  attempt.verified =
      off_diagonal_norm(ua) <= tol * std::max(1.0, frobenius_norm(a)) &&
      off_diagonal_norm(ub) <= tol * std::max(1.0, frobenius_norm(b)) &&
      frobenius_distance(adjoint(u) * u, ComplexMatrix::identity(n)) <= tol * std::max(1.0, std::sqrt(double(n)));
  return attempt;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  return v == Verdict::commutes ? "commutes" : "does-not-commute";
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Verdict check_direct(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_hermitian_pair(a, b, tol, "check_direct");
  const double norm = frobenius_norm(commutator(a, b));
  const double scale = std::max(1.0, frobenius_norm(a) * frobenius_norm(b));
  return norm <= tol * scale ? Verdict::commutes : Verdict::does_not_commute;
}

Verdict check_hermitian_product(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_hermitian_pair(a, b, tol, "check_hermitian_product");
  return is_hermitian(a * b, tol) ? Verdict::commutes : Verdict::does_not_commute;
}

double trace_identity_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix ab = a * b;
  const Complex t_sq = trace(ab * ab);
  const Complex t_aabb = trace(a * a * b * b);
  return std::abs(t_sq.real() - t_aabb.real());
}

Verdict check_trace_identity(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_hermitian_pair(a, b, tol, "check_trace_identity");
  const ComplexMatrix ab = a * b;
  const Complex t_sq = trace(ab * ab);
  const Complex t_aabb = trace(a * a * b * b);

  const double na = frobenius_norm(a);
  const double nb = frobenius_norm(b);
  const double scale = std::max(1.0, na * na * nb * nb);
  // Both traces are provably real here; a large imaginary residue would mean
  // the Hermiticity precondition was violated after all.
  if (std::abs(t_sq.imag()) > tol * scale || std::abs(t_aabb.imag()) > tol * scale)
    throw Error(errc::not_hermitian, "check_trace_identity: trace has imaginary residue");

  const double gap = std::abs(t_sq.real() - t_aabb.real());
  return gap <= tol * scale ? Verdict::commutes : Verdict::does_not_commute;
}

SimDiagWitness simultaneous_diagonalize(const ComplexMatrix& a, const ComplexMatrix& b,
                                        double tol) {
  require_hermitian_pair(a, b, tol, "simultaneous_diagonalize");
  if (check_direct(a, b, tol) != Verdict::commutes)
    throw Error(errc::not_commuting, "simultaneous_diagonalize: inputs do not commute");

  const EigenDecomposition eig_a = hermitian_eig(a, tol);
  const double spread = eig_a.eigenvalues.back() - eig_a.eigenvalues.front();
  const double threshold = std::max(1e-8, 1e-6 * spread);

  SimDiagAttempt attempt = attempt_simdiag(a, b, eig_a, threshold, tol);
  if (!attempt.verified) {
    // Near-degenerate eigenvalues may have been split across clusters; retry
    // once with a much coarser clustering.
    attempt = attempt_simdiag(a, b, eig_a, threshold * 100.0, tol);
  }
  if (!attempt.verified)
    throw Error(errc::verification_failed,
                "simultaneous_diagonalize: no clustering produced a diagonalizing unitary");
  return std::move(attempt.witness);
}

CommutativityReport check_all(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_hermitian_pair(a, b, tol, "check_all");

  CommutativityReport report;
  report.tol = tol;
  report.direct = check_direct(a, b, tol);
  report.commutator_norm = frobenius_norm(commutator(a, b));
  report.hermitian_product = check_hermitian_product(a, b, tol);
  report.trace_identity = check_trace_identity(a, b, tol);
  report.trace_gap = trace_identity_gap(a, b);

  if (report.direct == Verdict::commutes) {
    try {
      report.witness = simultaneous_diagonalize(a, b, tol);
      report.simultaneous_diag = Verdict::commutes;
    } catch (const Error& e) {
      if (e.code() != errc::verification_failed) throw;
      report.simultaneous_diag = Verdict::does_not_commute;
    }
  } else {
    report.simultaneous_diag = Verdict::does_not_commute;
  }

  report.agree = report.direct == report.hermitian_product &&
                 report.direct == report.trace_identity &&
                 report.direct == report.simultaneous_diag;
  return report;
}

CommutativityReport wp_commutes(const QuantumPredicate& m, const QuantumPredicate& n,
                                const KrausChannel& channel, double tol) {
  const QuantumPredicate wm = wp(channel, m);
  const QuantumPredicate wn = wp(channel, n);
  return check_all(wm.matrix(), wn.matrix(), tol);
}

}  // namespace qwp

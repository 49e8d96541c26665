#include "qwp/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwp {

namespace {

constexpr int kMaxSweeps = 40;
constexpr double kOffDiagonalTarget = 1e-13;

// One two-sided rotation A <- J^dagger A J annihilating the (p,q) pair,
// with J the identity outside rows/cols p,q and
//   J(p,p) = c, J(p,q) = s, J(q,p) = -conj(s), J(q,q) = c,
// c real, |s|^2 + c^2 = 1. V accumulates the product of rotations so that
// V^dagger A_in V stays equal to the working matrix.
void rotate_pair(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double m = std::abs(apq);
  if (m == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  // tan of the rotation angle; smaller-magnitude root of t^2 + 2*tau*t - 1.
  // tau may overflow to inf for denormal m, in which case t underflows to 0
  // and the explicit zeroing below commits an error of at most m.
  const double tau = (aqq - app) / (2.0 * m);
  const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(tau, 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double sigma = t * c;
  const Complex s = (sigma / m) * apq;  // sigma * e^{i arg(apq)}
  const Complex s_conj = std::conj(s);

  a(p, p) = app - t * m;
  a(q, q) = aqq + t * m;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s_conj * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s_conj * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol))
    throw Error(errc::not_hermitian, "hermitian_eig: input is not Hermitian");

  const std::size_t n = a.dim();

  // Work on the Hermitian average; exact for exactly-Hermitian input, and it
  // keeps the diagonal real from the start.
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }

  ComplexMatrix u = ComplexMatrix::identity(n);
  const double target = kOffDiagonalTarget * frobenius_norm(h);

  bool converged = off_diagonal_norm(h) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate_pair(h, u, p, q);
    converged = off_diagonal_norm(h) <= target;
  }
  if (!converged)
    throw Error(errc::no_convergence, "hermitian_eig: sweep budget exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&h](std::size_t i, std::size_t j) { return h(i, i).real() < h(j, j).real(); });

  EigenDecomposition result;
  result.eigenvalues.resize(n);
  result.unitary = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    result.eigenvalues[j] = h(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) result.unitary(i, j) = u(i, order[j]);
  }
  return result;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) throw Error(errc::not_hermitian, "is_psd: input is not Hermitian");
  const EigenDecomposition eig = hermitian_eig(a, tol);
  return eig.eigenvalues.front() >= -tol * std::max(1.0, frobenius_norm(a));
}

bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  detail::require_same_dim(a, b, "loewner_leq");
  if (!is_hermitian(a, tol)) throw Error(errc::not_hermitian, "loewner_leq: lhs is not Hermitian");
  if (!is_hermitian(b, tol)) throw Error(errc::not_hermitian, "loewner_leq: rhs is not Hermitian");
  return is_psd(b - a, tol);
}

}  // namespace qwp

#include "qwp/predicates.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "qwp/eig.hpp"

namespace qwp {

namespace {

// Gaussian sampler on top of mt19937_64 with a hand-rolled Box-Muller
// transform. The engine's output sequence is fixed by the standard, so the
// same (dim, seed) reproduces the same matrix on any platform.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_gaussian_matrix(std::size_t dim, GaussianRng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.all_finite()) throw Error(errc::not_finite, std::string(what) + ": non-finite entry");
}

}  // namespace

const char* to_string(PredicateMode mode) noexcept {
  return mode == PredicateMode::strict ? "strict" : "observable";
}

QuantumPredicate validate_predicate(ComplexMatrix m, PredicateMode mode, double tol) {
  require_finite(m, "predicate");
  if (!is_hermitian(m, tol))
    throw Error(errc::not_hermitian, "predicate matrix is not Hermitian");
  if (mode == PredicateMode::strict) {
    if (!is_psd(m, tol))
      throw Error(errc::not_positive, "predicate has an eigenvalue below zero");
    if (!is_psd(ComplexMatrix::identity(m.dim()) - m, tol))
      throw Error(errc::exceeds_identity, "predicate has an eigenvalue above one");
  }
  return QuantumPredicate(std::move(m), mode);
}

DensityMatrix validate_density(ComplexMatrix r, double tol) {
  require_finite(r, "density");
  if (!is_hermitian(r, tol))
    throw Error(errc::not_hermitian, "density matrix is not Hermitian");
  if (!is_psd(r, tol))
    throw Error(errc::not_positive, "density matrix has an eigenvalue below zero");
  if (trace(r).real() > 1.0 + tol)
    throw Error(errc::trace_too_large, "density trace exceeds one");
  return DensityMatrix(std::move(r));
}

QuantumPredicate random_predicate(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw Error(errc::invalid_dimension, "random_predicate: dim must be >= 1");
  GaussianRng rng(seed);
  const ComplexMatrix h = hermitian_part(random_gaussian_matrix(dim, rng));
  EigenDecomposition eig = hermitian_eig(h);

  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  const double spread = hi - lo;
  std::vector<double> mapped(dim);
  for (std::size_t k = 0; k < dim; ++k)
    mapped[k] = spread > 0.0 ? (eig.eigenvalues[k] - lo) / spread : 0.5;

  // U diag(mapped) U^dagger, assembled Hermitian by construction.
  const ComplexMatrix& u = eig.unitary;
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex v = 0.0;
      for (std::size_t k = 0; k < dim; ++k) v += mapped[k] * u(i, k) * std::conj(u(j, k));
      m(i, j) = v;
    }
  return validate_predicate(hermitian_part(m), PredicateMode::strict);
}

DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw Error(errc::invalid_dimension, "random_density: dim must be >= 1");
  GaussianRng rng(seed);
  const ComplexMatrix g = random_gaussian_matrix(dim, rng);
  ComplexMatrix s = g * adjoint(g);
  const double t = trace(s).real();  // positive with probability one
  s *= Complex(1.0 / t, 0.0);
  return validate_density(hermitian_part(s));
}

}  // namespace qwp

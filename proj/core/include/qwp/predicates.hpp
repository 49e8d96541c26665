#pragma once

#include <cstdint>

#include "qwp/complex_matrix.hpp"

namespace qwp {

/// `strict` enforces the full predicate contract 0 <= M <= I in the Loewner
/// order; `observable` enforces Hermiticity only. The relaxed mode exists
/// because some worked inputs are Hermitian without being positive, while
/// every commutativity result needs Hermiticity alone.
enum class PredicateMode { strict, observable };

const char* to_string(PredicateMode mode) noexcept;

/// Hermitian matrix validated under one of the two modes; construct via
/// validate_predicate. Immutable once built.
class QuantumPredicate {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  PredicateMode mode() const { return mode_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  friend QuantumPredicate validate_predicate(ComplexMatrix, PredicateMode, double);
  QuantumPredicate(ComplexMatrix m, PredicateMode mode) : matrix_(std::move(m)), mode_(mode) {}

  ComplexMatrix matrix_;
  PredicateMode mode_;
};

/// Positive operator with trace at most 1 (subnormalized states allowed);
/// construct via validate_density.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  friend DensityMatrix validate_density(ComplexMatrix, double);
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

/// Checks run in order: finite entries, Hermitian, then in strict mode
/// positive and bounded by the identity. Throws the Error naming the first
/// violated invariant (not-finite, not-hermitian, not-positive,
/// exceeds-identity).
QuantumPredicate validate_predicate(ComplexMatrix m, PredicateMode mode = PredicateMode::strict,
                                    double tol = kDefaultTol);

/// Checks finite, Hermitian, positive, trace <= 1 + tol, in that order.
DensityMatrix validate_density(ComplexMatrix r, double tol = kDefaultTol);

/// Deterministic in (dim, seed). Draws a Gaussian Hermitian matrix and
/// remaps its spectrum affinely into [0, 1]; the result always passes strict
/// validation.
QuantumPredicate random_predicate(std::size_t dim, std::uint64_t seed);

/// Deterministic in (dim, seed). G G^dagger normalized to trace one for a
/// Gaussian G.
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);

}  // namespace qwp

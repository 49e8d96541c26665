#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qwp/error.hpp"

namespace qwp {

using Complex = std::complex<double>;

/// Default relative tolerance for every boolean predicate in the library.
/// Applied as tol * max(1, frobenius_norm(...)) so the zero matrix needs no
/// special casing.
inline constexpr double kDefaultTol = 1e-9;

/// Dense square matrix of complex doubles, row-major. The universal carrier
/// for operators, predicates, densities and Kraus operators.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(std::size_t dim);
  /// Row-by-row construction, e.g. from_rows({{a, b}, {c, d}}).
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
/// Matrix product; throws dimension-mismatch on unequal dims.
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of diagonal entries.
Complex trace(const ComplexMatrix& a);

/// sqrt(sum |a_ij|^2); zero iff a is the zero matrix.
double frobenius_norm(const ComplexMatrix& a);

/// Frobenius norm of a - b. Matrix comparisons in tests go through this
/// rather than entrywise equality.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(sum over i != j of |a_ij|^2).
double off_diagonal_norm(const ComplexMatrix& a);

/// ||A - A^dagger||_F <= tol * max(1, ||A||_F).
bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

namespace detail {
inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw Error(errc::dimension_mismatch,
                std::string(op) + ": dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}
}  // namespace detail

}  // namespace qwp

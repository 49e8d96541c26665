#include "qwp/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qwp/eig.hpp"

namespace qwp {

KrausChannel validate_channel(std::vector<ComplexMatrix> ops, double tol) {
  if (ops.empty()) throw Error(errc::empty_list, "channel needs at least one Kraus operator");
  const std::size_t dim = ops.front().dim();
  if (dim == 0) throw Error(errc::invalid_dimension, "Kraus operators must have dim >= 1");
  for (const ComplexMatrix& e : ops) {
    if (e.dim() != dim)
      throw Error(errc::dimension_mismatch, "Kraus operators disagree on dimension");
    if (!e.all_finite()) throw Error(errc::not_finite, "Kraus operator has a non-finite entry");
  }

  ComplexMatrix sum(dim);
  for (const ComplexMatrix& e : ops) sum += e * adjoint(e);
  if (!loewner_leq(sum, ComplexMatrix::identity(dim), tol))
    throw Error(errc::trace_increasing, "sum of E_i E_i^dagger exceeds the identity");

  return KrausChannel(dim, std::move(ops));
}

QuantumPredicate wp(const KrausChannel& channel, const QuantumPredicate& m) {
  if (channel.dim() != m.dim())
    throw Error(errc::dimension_mismatch, "wp: channel dim " + std::to_string(channel.dim()) +
                                              ", predicate dim " + std::to_string(m.dim()));
  ComplexMatrix result(channel.dim());
  for (const ComplexMatrix& e : channel.operators()) result += e * m.matrix() * adjoint(e);
  return validate_predicate(std::move(result), m.mode());
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim())
    throw Error(errc::dimension_mismatch, "apply: channel dim " + std::to_string(channel.dim()) +
                                              ", density dim " + std::to_string(rho.dim()));
  ComplexMatrix result(channel.dim());
  for (const ComplexMatrix& e : channel.operators()) result += adjoint(e) * rho.matrix() * e;
  return validate_density(std::move(result));
}

bool check_duality(const KrausChannel& channel, const QuantumPredicate& m, std::size_t samples,
                   std::uint64_t seed, double tol) {
  if (channel.dim() != m.dim())
    throw Error(errc::dimension_mismatch, "check_duality: channel and predicate dims differ");
  const QuantumPredicate w = wp(channel, m);
  for (std::size_t k = 0; k < samples; ++k) {
    const DensityMatrix rho = random_density(channel.dim(), seed + k);
    const Complex lhs = trace(w.matrix() * rho.matrix());
    const Complex rhs = trace(m.matrix() * apply(channel, rho).matrix());
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

bool is_precondition(const QuantumPredicate& m, const QuantumPredicate& n,
                     const KrausChannel& channel, double tol) {
  if (m.dim() != n.dim() || m.dim() != channel.dim())
    throw Error(errc::dimension_mismatch, "is_precondition: dims disagree");
  return loewner_leq(m.matrix(), wp(channel, n).matrix(), tol);
}

}  // namespace qwp

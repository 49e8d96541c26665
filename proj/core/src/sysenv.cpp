#include "qwp/sysenv.hpp"

#include <cmath>
#include <utility>

#include "qwp/eig.hpp"

namespace qwp {

namespace {

constexpr double kPruneThreshold = 1e-12;

ComplexMatrix outer_product(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) m(a, b) = v[a] * std::conj(v[b]);
  return m;
}

}  // namespace

SystemEnvironmentModel validate_model(std::size_t sys_dim, std::size_t env_dim, ComplexMatrix u,
                                      ComplexMatrix p, std::vector<Complex> e0, double tol) {
  if (sys_dim == 0 || env_dim == 0)
    throw Error(errc::invalid_model, "system and environment dims must be >= 1");
  const std::size_t dim = sys_dim * env_dim;
  if (u.dim() != dim || p.dim() != dim)
    throw Error(errc::dimension_mismatch, "U and P must act on the composite space");
  if (e0.size() != env_dim)
    throw Error(errc::dimension_mismatch, "e0 length must equal env_dim");
  if (!u.all_finite() || !p.all_finite())
    throw Error(errc::not_finite, "model has a non-finite entry");

  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  const double scale = tol * std::max(1.0, frobenius_norm(u));
  if (frobenius_distance(adjoint(u) * u, eye) > scale)
    throw Error(errc::invalid_model, "U is not unitary");
  const double pscale = tol * std::max(1.0, frobenius_norm(p));
  if (frobenius_distance(p, adjoint(p)) > pscale)
    throw Error(errc::invalid_model, "P is not Hermitian");
  if (frobenius_distance(p * p, p) > pscale)
    throw Error(errc::invalid_model, "P is not idempotent");

  double norm2 = 0.0;
  for (const Complex& c : e0) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(errc::not_finite, "e0 has a non-finite entry");
    norm2 += std::norm(c);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > tol)
    throw Error(errc::invalid_model, "e0 is not a unit vector");

  return SystemEnvironmentModel(sys_dim, env_dim, std::move(u), std::move(p), std::move(e0));
}

ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t sys_dim, std::size_t env_dim) {
  if (x.dim() != sys_dim * env_dim)
    throw Error(errc::dimension_mismatch, "partial_trace_env: composite dim mismatch");
  ComplexMatrix r(sys_dim);
  for (std::size_t i = 0; i < sys_dim; ++i)
    for (std::size_t j = 0; j < sys_dim; ++j) {
      Complex v = 0.0;
      for (std::size_t a = 0; a < env_dim; ++a) v += x(i * env_dim + a, j * env_dim + a);
      r(i, j) = v;
    }
  return r;
}

ComplexMatrix env_contract(const ComplexMatrix& x, std::span<const Complex> e0,
                           std::size_t sys_dim, std::size_t env_dim) {
  if (x.dim() != sys_dim * env_dim)
    throw Error(errc::dimension_mismatch, "env_contract: composite dim mismatch");
  if (e0.size() != env_dim)
    throw Error(errc::dimension_mismatch, "env_contract: e0 length mismatch");
  ComplexMatrix r(sys_dim);
  for (std::size_t i = 0; i < sys_dim; ++i)
    for (std::size_t j = 0; j < sys_dim; ++j) {
      Complex v = 0.0;
      for (std::size_t a = 0; a < env_dim; ++a)
        for (std::size_t b = 0; b < env_dim; ++b)
          v += std::conj(e0[a]) * x(i * env_dim + a, j * env_dim + b) * e0[b];
      r(i, j) = v;
    }
  return r;
}

QuantumPredicate se_wp(const SystemEnvironmentModel& model, const QuantumPredicate& m) {
  if (m.dim() != model.sys_dim())
    throw Error(errc::dimension_mismatch, "se_wp: predicate dim must equal sys_dim");
  const ComplexMatrix lifted = tensor(m.matrix(), ComplexMatrix::identity(model.env_dim()));
  const ComplexMatrix& u = model.unitary();
  const ComplexMatrix& p = model.projector();
  const ComplexMatrix x = adjoint(u) * p * lifted * p * u;
  return validate_predicate(env_contract(x, model.env_state(), model.sys_dim(), model.env_dim()),
                            m.mode());
}

DensityMatrix se_apply(const SystemEnvironmentModel& model, const DensityMatrix& rho) {
  if (rho.dim() != model.sys_dim())
    throw Error(errc::dimension_mismatch, "se_apply: density dim must equal sys_dim");
  const ComplexMatrix lifted = tensor(rho.matrix(), outer_product(model.env_state()));
  const ComplexMatrix& u = model.unitary();
  const ComplexMatrix& p = model.projector();
  const ComplexMatrix x = p * u * lifted * adjoint(u) * p;
  return validate_density(partial_trace_env(x, model.sys_dim(), model.env_dim()));
}

KrausChannel extract_kraus(const SystemEnvironmentModel& model) {
  const std::size_t s = model.sys_dim();
  const std::size_t e = model.env_dim();
  const ComplexMatrix pu = model.projector() * model.unitary();
  const std::vector<Complex>& e0 = model.env_state();

  std::vector<ComplexMatrix> kraus;
  ComplexMatrix fallback;  // largest pruned operator, kept if all are pruned
  double fallback_norm = -1.0;
  for (std::size_t a = 0; a < e; ++a) {
    // F_a = (I (x) <a|) P U (I (x) |e0>); the channel operator is F_a^dagger.
    ComplexMatrix f(s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        Complex v = 0.0;
        for (std::size_t b = 0; b < e; ++b) v += pu(i * e + a, j * e + b) * e0[b];
        f(i, j) = v;
      }
    ComplexMatrix k = adjoint(f);
    const double norm = frobenius_norm(k);
    if (norm > kPruneThreshold) {
      kraus.push_back(std::move(k));
    } else if (norm > fallback_norm) {
      fallback_norm = norm;
      fallback = std::move(k);
    }
  }
  if (kraus.empty()) kraus.push_back(std::move(fallback));
  return validate_channel(std::move(kraus));
}

}  // namespace qwp

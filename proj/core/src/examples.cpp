#include "qwp/examples.hpp"

namespace qwp::examples {

namespace {

using C = Complex;

ComplexMatrix example1_m() {
  return ComplexMatrix::from_rows({{0.2, C(0.0, 0.2)}, {C(0.0, -0.2), 0.5}});
}

ComplexMatrix example1_n() {
  return ComplexMatrix::from_rows({{0.3, C(0.1, 0.2)}, {C(0.1, -0.2), 0.0}});
}

ComplexMatrix example1_e() {
  return ComplexMatrix::from_rows({{0.1, 0.0}, {0.0, 0.0}});
}

ComplexMatrix example2_m() {
  return ComplexMatrix::from_rows({{0.2, 0.0}, {0.0, 0.0}});
}

ComplexMatrix example2_n() {
  return ComplexMatrix::from_rows({{0.3, 0.0}, {0.0, 0.7}});
}

ComplexMatrix example2_e() {
  return ComplexMatrix::from_rows({{0.5, C(0.0, 0.2)}, {0.0, 0.5}});
}

// I_{n-2} (+) block, the embedding both families use. The loop overwrites
// the whole trailing block, so only the leading identity part survives.
ComplexMatrix embed_trailing(std::size_t n, const ComplexMatrix& block) {
  ComplexMatrix m = ComplexMatrix::identity(n);
  const std::size_t off = n - block.dim();
  for (std::size_t i = 0; i < block.dim(); ++i)
    for (std::size_t j = 0; j < block.dim(); ++j) m(off + i, off + j) = block(i, j);
  return m;
}

ExampleInstance build(std::size_t n, const ComplexMatrix& m2, PredicateMode m_mode,
                      const ComplexMatrix& n2, PredicateMode n_mode, const ComplexMatrix& e2,
                      bool inputs_commute, bool wps_commute) {
  if (n < 2) throw Error(errc::invalid_dimension, "instance dimension must be >= 2");
  return ExampleInstance{
      validate_predicate(embed_trailing(n, m2), m_mode),
      validate_predicate(embed_trailing(n, n2), n_mode),
      validate_channel({embed_trailing(n, e2)}),
      inputs_commute,
      wps_commute,
  };
}

}  // namespace

ExampleInstance example1() { return prop7_instance(2); }

ExampleInstance example2() { return prop8_instance(2); }

ExampleInstance prop7_instance(std::size_t n) {
  return build(n, example1_m(), PredicateMode::strict, example1_n(), PredicateMode::observable,
               example1_e(), /*inputs_commute=*/false, /*wps_commute=*/true);
}

ExampleInstance prop8_instance(std::size_t n) {
  return build(n, example2_m(), PredicateMode::strict, example2_n(), PredicateMode::strict,
               example2_e(), /*inputs_commute=*/true, /*wps_commute=*/false);
}

}  // namespace qwp::examples

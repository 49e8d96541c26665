#pragma once

#include "qwp/commutativity.hpp"

namespace qwp::examples {

/// A bundled (M, N, E) triple together with what it demonstrates: whether
/// the inputs commute and whether their weakest preconditions do. The two
/// families deliberately disagree on those two flags in opposite ways.
struct ExampleInstance {
  QuantumPredicate m;
  QuantumPredicate n;
  KrausChannel channel;
  bool expected_inputs_commute;
  bool expected_wps_commute;
};

/// 2x2 instance with non-commuting inputs whose weakest preconditions
/// commute. N is Hermitian but not positive, so it carries observable mode.
ExampleInstance example1();

/// 2x2 instance with commuting (diagonal) inputs whose weakest
/// preconditions do not commute. All strict.
ExampleInstance example2();

/// example1 embedded as the trailing 2x2 block of an n-dimensional instance,
/// identity elsewhere. n = 2 reproduces example1 exactly (bit for bit).
/// Throws invalid-dimension for n < 2.
ExampleInstance prop7_instance(std::size_t n);

/// example2 embedded the same way. n = 2 reproduces example2 exactly.
ExampleInstance prop8_instance(std::size_t n);

}  // namespace qwp::examples

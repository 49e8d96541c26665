// Acceptance suite: runs each acceptance criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "qwp/examples.hpp"
#include "qwp/io.hpp"
#include "support/generators.hpp"

using namespace qwp;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  const char* summary;
  double time_budget_seconds;  // 0 = no budget
  std::function<bool(std::string&)> body;
};

bool entrywise_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (std::abs(a.entries()[k] - b.entries()[k]) > tol) return false;
  return true;
}

bool all_four(const CommutativityReport& r, Verdict v) {
  return r.direct == v && r.hermitian_product == v && r.trace_identity == v &&
         r.simultaneous_diag == v && r.agree;
}

// ---- criterion 1 ----------------------------------------------------------

bool criterion1(std::string& why) {
  const auto ex = examples::example1();
  const ComplexMatrix wm = wp(ex.channel, ex.m).matrix();
  const ComplexMatrix wn = wp(ex.channel, ex.n).matrix();
  if (!entrywise_close(wm, ComplexMatrix::from_rows({{0.002, 0.0}, {0.0, 0.0}}), 1e-12)) {
    why = "wp(E)(M) mismatch";
    return false;
  }
  if (!entrywise_close(wn, ComplexMatrix::from_rows({{0.003, 0.0}, {0.0, 0.0}}), 1e-12)) {
    why = "wp(E)(N) mismatch";
    return false;
  }

  const ComplexMatrix mn_expected = ComplexMatrix::from_rows(
      {{Complex(0.1, 0.02), Complex(0.02, 0.04)}, {Complex(0.05, -0.16), Complex(0.04, -0.02)}});
  const ComplexMatrix nm_expected = ComplexMatrix::from_rows(
      {{Complex(0.1, -0.02), Complex(0.05, 0.16)}, {Complex(0.02, -0.04), Complex(0.04, 0.02)}});
  if (!entrywise_close(ex.m.matrix() * ex.n.matrix(), mn_expected, 1e-12) ||
      !entrywise_close(ex.n.matrix() * ex.m.matrix(), nm_expected, 1e-12)) {
    why = "input product mismatch";
    return false;
  }

  if (!all_four(check_all(wm, wn), Verdict::commutes)) {
    why = "wp pair verdicts";
    return false;
  }
  if (!all_four(check_all(ex.m.matrix(), ex.n.matrix()), Verdict::does_not_commute)) {
    why = "input pair verdicts";
    return false;
  }
  return true;
}

// ---- criterion 2 ----------------------------------------------------------

bool criterion2(std::string& why) {
  const auto ex = examples::example2();
  const ComplexMatrix wm = wp(ex.channel, ex.m).matrix();
  const ComplexMatrix wn = wp(ex.channel, ex.n).matrix();
  if (!entrywise_close(wm, ComplexMatrix::from_rows({{0.05, 0.0}, {0.0, 0.0}}), 1e-12)) {
    why = "wp(E)(M) mismatch";
    return false;
  }
  const ComplexMatrix wn_expected =
      ComplexMatrix::from_rows({{0.103, Complex(0.0, 0.07)}, {Complex(0.0, -0.07), 0.175}});
  if (!entrywise_close(wn, wn_expected, 1e-12)) {
    why = "wp(E)(N) mismatch";
    return false;
  }

  const ComplexMatrix ab_expected =
      ComplexMatrix::from_rows({{0.00515, Complex(0.0, 0.0035)}, {0.0, 0.0}});
  const ComplexMatrix ba_expected =
      ComplexMatrix::from_rows({{0.00515, 0.0}, {Complex(0.0, -0.0035), 0.0}});
  if (!entrywise_close(wm * wn, ab_expected, 1e-12) ||
      !entrywise_close(wn * wm, ba_expected, 1e-12)) {
    why = "wp product mismatch";
    return false;
  }

  if (!all_four(check_all(wm, wn), Verdict::does_not_commute)) {
    why = "wp pair verdicts";
    return false;
  }
  if (!all_four(check_all(ex.m.matrix(), ex.n.matrix()), Verdict::commutes)) {
    why = "input pair verdicts";
    return false;
  }
  return true;
}

// ---- criterion 3 ----------------------------------------------------------

bool criterion3(std::string& why) {
  const auto ex1 = examples::example1();
  for (double lambda : hermitian_eig(ex1.m.matrix()).eigenvalues)
    if (std::abs(lambda * lambda - 0.7 * lambda + 0.06) > 1e-10) {
      why = "eigenvalues of M do not solve the quadratic";
      return false;
    }

  const auto ex2 = examples::example2();
  const ComplexMatrix& e = ex2.channel.operators()[0];
  const ComplexMatrix gap = ComplexMatrix::identity(2) - e * adjoint(e);
  for (double lambda : hermitian_eig(gap).eigenvalues)
    if (std::abs(lambda * lambda - 1.46 * lambda + 0.5225) > 1e-10) {
      why = "eigenvalues of I - EE^dagger do not solve the quadratic";
      return false;
    }

  if (hermitian_eig(ex1.n.matrix()).eigenvalues.front() >= 0.0) {
    why = "N is missing its negative eigenvalue";
    return false;
  }
  try {
    validate_predicate(ex1.n.matrix(), PredicateMode::strict);
    why = "strict validation accepted N";
    return false;
  } catch (const Error& err) {
    if (err.code() != errc::not_positive) {
      why = "strict rejection named the wrong invariant";
      return false;
    }
  }
  try {
    validate_predicate(ex1.n.matrix(), PredicateMode::observable);
  } catch (const Error&) {
    why = "observable validation rejected N";
    return false;
  }
  return true;
}

// ---- criteria 4 and 5 share one sweep --------------------------------------

struct SweepOutcome {
  bool ran = false;
  bool verdicts_agree = true;
  bool witnesses_sound = true;
  bool trace_identity_holds = true;
  std::string detail;
};

SweepOutcome g_sweep;

void run_sweep() {
  if (g_sweep.ran) return;
  g_sweep.ran = true;
  Rng rng(20250811);
  for (std::size_t dim : {2, 3, 4, 8}) {
    for (int rep = 0; rep < 2000; ++rep) {
      ComplexMatrix a(dim), b(dim);
      if (rep < 1000) {
        a = random_hermitian(dim, rng);
        b = random_hermitian(dim, rng);
      } else {
        // simultaneously conjugated diagonals, every third pair degenerate
        const ComplexMatrix u = random_unitary(dim, rng);
        ComplexMatrix d1(dim), d2(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          d1(i, i) = (rep % 3 == 0 && i % 2 == 1) ? d1(i - 1, i - 1)
                                                  : Complex(rng.gaussian(), 0.0);
          d2(i, i) = rng.gaussian();
        }
        a = u * d1 * adjoint(u);
        b = u * d2 * adjoint(u);
      }

      const CommutativityReport r = check_all(a, b);
      if (!r.agree) {
        g_sweep.verdicts_agree = false;
        g_sweep.detail = "disagreement at dim " + std::to_string(dim);
        return;
      }
      if (r.witness) {
        const SimDiagWitness& w = *r.witness;
        const std::size_t n = a.dim();
        const bool unitary_ok =
            frobenius_distance(adjoint(w.unitary) * w.unitary, ComplexMatrix::identity(n)) <= 1e-8;
        const bool diag_ok =
            off_diagonal_norm(adjoint(w.unitary) * a * w.unitary) <= 1e-8 * std::max(1.0, frobenius_norm(a)) &&
            off_diagonal_norm(adjoint(w.unitary) * b * w.unitary) <= 1e-8 * std::max(1.0, frobenius_norm(b));
        if (!unitary_ok || !diag_ok) {
          g_sweep.witnesses_sound = false;
          g_sweep.detail = "witness check failed at dim " + std::to_string(dim);
          return;
        }
      }

      // Frobenius-trace identity: ||[A,B]||^2 = 2 (Tr(A^2B^2) - Tr((AB)^2))
      const double lhs = std::pow(frobenius_norm(commutator(a, b)), 2);
      const ComplexMatrix ab = a * b;
      const double rhs = 2.0 * (trace(a * a * b * b) - trace(ab * ab)).real();
      if (std::abs(lhs - rhs) > 1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
        g_sweep.trace_identity_holds = false;
        g_sweep.detail = "identity residual at dim " + std::to_string(dim);
        return;
      }
    }
  }
}

bool criterion4(std::string& why) {
  run_sweep();
  why = g_sweep.detail;
  return g_sweep.verdicts_agree && g_sweep.witnesses_sound;
}

bool criterion5(std::string& why) {
  run_sweep();
  why = g_sweep.detail;
  return g_sweep.trace_identity_holds;
}

// ---- criterion 6 ----------------------------------------------------------

bool criterion6(std::string& why) {
  Rng rng(606);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t dim = 2 + rep % 7;  // 2..8
    const KrausChannel channel = random_channel(dim, 1 + rep % 4, rng);
    const QuantumPredicate m = random_predicate(dim, 4000 + rep);
    if (!is_hermitian(wp(channel, m).matrix(), 1e-10)) {
      why = "non-Hermitian wp at rep " + std::to_string(rep);
      return false;
    }
  }
  return true;
}

// ---- criterion 7 ----------------------------------------------------------

bool criterion7(std::string& why) {
  Rng rng(707);
  for (int model_idx = 0; model_idx < 50; ++model_idx) {
    const std::size_t s = rng.uniform_int(2, 3);
    const std::size_t e = rng.uniform_int(2, 3);
    const SystemEnvironmentModel model = random_model(s, e, rng);
    const KrausChannel kraus = extract_kraus(model);

    const QuantumPredicate m = random_predicate(s, 5000 + model_idx);
    const QuantumPredicate via_model = se_wp(model, m);
    const QuantumPredicate via_kraus = wp(kraus, m);
    if (frobenius_distance(via_model.matrix(), via_kraus.matrix()) > 1e-10) {
      why = "representation mismatch at model " + std::to_string(model_idx);
      return false;
    }

    for (std::uint64_t k = 0; k < 100; ++k) {
      const DensityMatrix rho = random_density(s, 100 * model_idx + k);
      const Complex lhs = trace(via_model.matrix() * rho.matrix());
      const Complex rhs = trace(m.matrix() * se_apply(model, rho).matrix());
      if (std::abs(lhs - rhs) > 1e-10) {
        why = "duality violation at model " + std::to_string(model_idx);
        return false;
      }
    }
  }
  return true;
}

// ---- criterion 8 ----------------------------------------------------------

bool criterion8(std::string& why) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto p7 = examples::prop7_instance(n);
    if (check_direct(p7.m.matrix(), p7.n.matrix()) != Verdict::does_not_commute ||
        !p7.expected_wps_commute ||
        !all_four(wp_commutes(p7.m, p7.n, p7.channel), Verdict::commutes)) {
      why = "prop7 flags at n=" + std::to_string(n);
      return false;
    }
    const auto p8 = examples::prop8_instance(n);
    if (check_direct(p8.m.matrix(), p8.n.matrix()) != Verdict::commutes ||
        p8.expected_wps_commute ||
        !all_four(wp_commutes(p8.m, p8.n, p8.channel), Verdict::does_not_commute)) {
      why = "prop8 flags at n=" + std::to_string(n);
      return false;
    }
  }

  const auto base1 = examples::example1();
  const auto emb1 = examples::prop7_instance(2);
  const auto base2 = examples::example2();
  const auto emb2 = examples::prop8_instance(2);
  if (!(base1.m.matrix() == emb1.m.matrix() && base1.n.matrix() == emb1.n.matrix() &&
        base1.channel.operators() == emb1.channel.operators() &&
        base2.m.matrix() == emb2.m.matrix() && base2.n.matrix() == emb2.n.matrix() &&
        base2.channel.operators() == emb2.channel.operators())) {
    why = "n=2 instances are not bit-identical to the base examples";
    return false;
  }
  return true;
}

// ---- criterion 9 ----------------------------------------------------------

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QWP_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool criterion9(std::string& why) {
  const fs::path tmp = fs::temp_directory_path() / "qwp_acceptance";
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  const fs::path ex1 = tmp / "ex1", ex2 = tmp / "ex2";
  if (run_cli("example ex1 --out " + ex1.string()) != 0 ||
      run_cli("example ex2 --out " + ex2.string()) != 0) {
    why = "example generation failed";
    return false;
  }

  const int code1 = run_cli("check-commute " + (ex1 / "channel.json").string() + " " +
                            (ex1 / "M.json").string() + " " + (ex1 / "N.json").string() +
                            " --out " + (ex1 / "report.json").string());
  const int code2 = run_cli("check-commute " + (ex2 / "channel.json").string() + " " +
                            (ex2 / "M.json").string() + " " + (ex2 / "N.json").string() +
                            " --out " + (ex2 / "report.json").string());
  if (code1 != 0) {
    why = "ex1 pipeline exited " + std::to_string(code1);
    return false;
  }
  if (code2 != 4) {
    why = "ex2 pipeline exited " + std::to_string(code2);
    return false;
  }

  // bit-exact round trip of every matrix file written by the pipeline
  for (const fs::path& dir : {ex1, ex2})
    for (const char* name : {"M.json", "N.json"}) {
      const fs::path original = dir / name;
      const fs::path copy = dir / (std::string("rt_") + name);
      io::save_matrix(copy, io::load_matrix(original));
      if (slurp(copy) != slurp(original)) {
        why = std::string("round trip changed ") + name;
        return false;
      }
    }
  fs::remove_all(tmp);
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked instance 1: goldens and verdicts", 1.0, criterion1},
      {2, "worked instance 2: goldens and verdicts", 1.0, criterion2},
      {3, "characteristic-polynomial and negative-eigenvalue checks", 0.0, criterion3},
      {4, "four-method agreement sweep with sound witnesses", 60.0, criterion4},
      {5, "Frobenius-trace identity on the sweep", 60.0, criterion5},
      {6, "wp Hermiticity on 200 random channel/predicate pairs", 0.0, criterion6},
      {7, "representation equivalence and duality on 50 random models", 30.0, criterion7},
      {8, "embedded counterexample families for n in 2..8", 0.0, criterion8},
      {9, "CLI end-to-end pipeline and bit-exact round trip", 0.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_budget_seconds > 0.0 && seconds > c.time_budget_seconds) {
      ok = false;
      why = "time budget exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.summary,
                seconds, why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}

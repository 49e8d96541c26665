// qwp: command-line front end for weakest-precondition computation and
// commutativity reports over JSON matrix/channel files.
//
// Exit codes (stable contract):
//   0  success / valid / wp pair commutes
//   1  I/O, parse, or usage error
//   2  validation failure (a named invariant does not hold)
//   3  dimension mismatch (or invalid --n)
//   4  wp pair does not commute
//   5  the four commutativity procedures disagree (bug tripwire)

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwp/examples.hpp"
#include "qwp/io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qwp;

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalid = 2,
  kDimensionMismatch = 3,
  kDoesNotCommute = 4,
  kDisagreement = 5,
};

int map_error(errc code, bool dims_as_invalid) {
  switch (code) {
    case errc::io_error:
    case errc::parse_error:
      return kIoError;
    case errc::dimension_mismatch:
    case errc::invalid_dimension:
      return dims_as_invalid ? kInvalid : kDimensionMismatch;
    default:
      return kInvalid;
  }
}

PredicateMode parse_mode(const std::string& mode) {
  return mode == "observable" ? PredicateMode::observable : PredicateMode::strict;
}

KrausChannel channel_from_raw(const io::RawChannel& raw, double tol) {
  if (raw.is_kraus()) return validate_channel(std::get<0>(raw.body), tol);
  const io::RawSysEnv& m = std::get<1>(raw.body);
  return extract_kraus(
      validate_model(m.sys_dim, m.env_dim, m.unitary, m.projector, m.env_state, tol));
}

int cmd_validate(const std::string& kind, const fs::path& path, const std::string& mode,
                 double tol) {
  try {
    if (kind == "predicate") {
      validate_predicate(io::load_matrix(path), parse_mode(mode), tol);
    } else if (kind == "density") {
      validate_density(io::load_matrix(path), tol);
    } else {  // channel
      const io::RawChannel raw = io::load_channel(path);
      if (raw.is_kraus()) {
        validate_channel(std::get<0>(raw.body), tol);
      } else {
        const io::RawSysEnv& m = std::get<1>(raw.body);
        validate_model(m.sys_dim, m.env_dim, m.unitary, m.projector, m.env_state, tol);
      }
    }
  } catch (const Error& e) {
    const int code = map_error(e.code(), /*dims_as_invalid=*/true);
    if (code == kIoError)
      std::cerr << e.what() << '\n';
    else
      std::cout << e.what() << '\n';
    return code;
  }
  std::cout << "valid\n";
  return kOk;
}

int cmd_wp(const fs::path& channel_path, const fs::path& predicate_path, const fs::path& out,
           const std::string& mode, double tol) {
  try {
    const io::RawChannel raw = io::load_channel(channel_path);
    const QuantumPredicate m =
        validate_predicate(io::load_matrix(predicate_path), parse_mode(mode), tol);
    QuantumPredicate result = [&] {
      if (raw.is_kraus()) return wp(validate_channel(std::get<0>(raw.body), tol), m);
      const io::RawSysEnv& model = std::get<1>(raw.body);
      return se_wp(validate_model(model.sys_dim, model.env_dim, model.unitary, model.projector,
                                  model.env_state, tol),
                   m);
    }();
    io::save_matrix(out, result.matrix());
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return map_error(e.code(), /*dims_as_invalid=*/false);
  }
  return kOk;
}

int cmd_check_commute(const fs::path& channel_path, const fs::path& m_path, const fs::path& n_path,
                      const fs::path& out, double tol) {
  try {
    const KrausChannel channel = channel_from_raw(io::load_channel(channel_path), tol);
    // Hermiticity is all the four procedures need, so the inputs are taken
    // in observable mode here.
    const QuantumPredicate m =
        validate_predicate(io::load_matrix(m_path), PredicateMode::observable, tol);
    const QuantumPredicate n =
        validate_predicate(io::load_matrix(n_path), PredicateMode::observable, tol);

    const CommutativityReport report = wp_commutes(m, n, channel, tol);
    io::save_report(out, report, channel.dim());

    std::cout << "check-commute: " << to_string(report.direct)
              << " (agree=" << (report.agree ? "yes" : "no")
              << ", commutator_norm=" << report.commutator_norm << ")\n";
    if (!report.agree) return kDisagreement;
    return report.direct == Verdict::commutes ? kOk : kDoesNotCommute;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return map_error(e.code(), /*dims_as_invalid=*/false);
  }
}

int cmd_example(const std::string& name, std::size_t n, const fs::path& out_dir) {
  try {
    const examples::ExampleInstance instance = [&] {
      if (name == "ex1") return examples::example1();
      if (name == "ex2") return examples::example2();
      if (name == "prop7") return examples::prop7_instance(n);
      return examples::prop8_instance(n);
    }();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(errc::io_error, "cannot create " + out_dir.string());

    io::save_matrix(out_dir / "M.json", instance.m.matrix());
    io::save_matrix(out_dir / "N.json", instance.n.matrix());
    io::save_kraus_channel(out_dir / "channel.json", instance.channel);
    io::save_expected(out_dir / "expected.json", instance.expected_inputs_commute,
                      instance.expected_wps_commute);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == errc::invalid_dimension ? kDimensionMismatch : kIoError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakest preconditions of quantum programs and their commutativity"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string kind, mode = "strict", name;
  std::string in_path, channel_path, m_path, n_path, out_path = ".";
  double tol = kDefaultTol;
  std::size_t dim_n = 2;

  CLI::App* validate = app.add_subcommand("validate", "validate a predicate, density or channel file");
  validate->add_option("kind", kind)->required()->check(CLI::IsMember({"predicate", "density", "channel"}));
  validate->add_option("path", in_path)->required();
  validate->add_option("--mode", mode)->check(CLI::IsMember({"strict", "observable"}));
  validate->add_option("--tol", tol);

  CLI::App* wp_cmd = app.add_subcommand("wp", "compute the weakest precondition of a predicate");
  wp_cmd->add_option("channel", channel_path)->required();
  wp_cmd->add_option("predicate", in_path)->required();
  wp_cmd->add_option("--out", out_path)->required();
  wp_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strict", "observable"}));
  wp_cmd->add_option("--tol", tol);

  CLI::App* check = app.add_subcommand("check-commute", "decide commutativity of two weakest preconditions");
  check->add_option("channel", channel_path)->required();
  check->add_option("M", m_path)->required();
  check->add_option("N", n_path)->required();
  check->add_option("--out", out_path)->required();
  check->add_option("--tol", tol);

  CLI::App* example = app.add_subcommand("example", "write a bundled example instance to a directory");
  example->add_option("name", name)->required()->check(CLI::IsMember({"ex1", "ex2", "prop7", "prop8"}));
  example->add_option("--n", dim_n, "dimension for prop7/prop8 embeddings");
  example->add_option("--out", out_path, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  if (validate->parsed()) return cmd_validate(kind, in_path, mode, tol);
  if (wp_cmd->parsed()) return cmd_wp(channel_path, in_path, out_path, mode, tol);
  if (check->parsed()) return cmd_check_commute(channel_path, m_path, n_path, out_path, tol);
  return cmd_example(name, dim_n, out_path);
}

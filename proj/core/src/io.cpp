#include "qwp/io.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace qwp::io {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(errc::io_error, "cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error(errc::io_error, "short write to " + path.string());
}

double finite_number(const json& j, const char* where) {
  if (!j.is_number()) throw Error(errc::parse_error, std::string(where) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(errc::parse_error, std::string(where) + ": non-finite number");
  return v;
}

Complex parse_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2)
    throw Error(errc::parse_error, std::string(where) + ": expected a [re, im] pair");
  return {finite_number(j[0], where), finite_number(j[1], where)};
}

std::size_t parse_dim(const json& j, const char* where) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw Error(errc::parse_error, std::string(where) + ": dim must be a positive integer");
  return j.get<std::size_t>();
}

ComplexMatrix parse_entries(const json& j, std::size_t dim, const char* where) {
  if (!j.is_array() || j.size() != dim * dim)
    throw Error(errc::parse_error,
                std::string(where) + ": expected " + std::to_string(dim * dim) + " entries");
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = parse_complex(j[i * dim + k], where);
  return m;
}

json entries_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& v : m.entries()) entries.push_back(json::array({v.real(), v.imag()}));
  return entries;
}

json witness_to_json(const SimDiagWitness& w) {
  return json{{"unitary", entries_to_json(w.unitary)}, {"lambda", w.lambda}, {"mu", w.mu}};
}

}  // namespace

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
    throw Error(errc::parse_error, path.string() + ": expected {\"dim\", \"entries\"}");
  const std::size_t dim = parse_dim(doc["dim"], "matrix");
  return parse_entries(doc["entries"], dim, "matrix");
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  write_file(path, json{{"dim", m.dim()}, {"entries", entries_to_json(m)}});
}

RawChannel load_channel(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  if (!doc.is_object() || !doc.contains("dim"))
    throw Error(errc::parse_error, path.string() + ": expected an object with \"dim\"");
  const bool has_kraus = doc.contains("kraus");
  const bool has_sysenv = doc.contains("sysenv");
  if (has_kraus == has_sysenv)
    throw Error(errc::parse_error,
                path.string() + ": exactly one of \"kraus\" / \"sysenv\" must be present");

  RawChannel channel;
  channel.dim = parse_dim(doc["dim"], "channel");

  if (has_kraus) {
    const json& ops = doc["kraus"];
    if (!ops.is_array() || ops.empty())
      throw Error(errc::parse_error, path.string() + ": \"kraus\" must be a nonempty array");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ops.size());
    for (const json& op : ops) kraus.push_back(parse_entries(op, channel.dim, "kraus operator"));
    channel.body = std::move(kraus);
    return channel;
  }

  const json& se = doc["sysenv"];
  if (!se.is_object() || !se.contains("sys_dim") || !se.contains("env_dim") ||
      !se.contains("U") || !se.contains("P") || !se.contains("e0"))
    throw Error(errc::parse_error,
                path.string() + ": \"sysenv\" needs sys_dim, env_dim, U, P, e0");
  RawSysEnv model;
  model.sys_dim = parse_dim(se["sys_dim"], "sysenv");
  model.env_dim = parse_dim(se["env_dim"], "sysenv");
  if (model.sys_dim != channel.dim)
    throw Error(errc::parse_error, path.string() + ": dim must equal sysenv.sys_dim");
  const std::size_t composite = model.sys_dim * model.env_dim;
  model.unitary = parse_entries(se["U"], composite, "sysenv U");
  model.projector = parse_entries(se["P"], composite, "sysenv P");
  const json& e0 = se["e0"];
  if (!e0.is_array() || e0.size() != model.env_dim)
    throw Error(errc::parse_error, path.string() + ": e0 must have env_dim entries");
  for (const json& c : e0) model.env_state.push_back(parse_complex(c, "sysenv e0"));
  channel.body = std::move(model);
  return channel;
}

void save_kraus_channel(const std::filesystem::path& path, const KrausChannel& channel) {
  json ops = json::array();
  for (const ComplexMatrix& e : channel.operators()) ops.push_back(entries_to_json(e));
  write_file(path, json{{"dim", channel.dim()}, {"kraus", std::move(ops)}});
}

void save_expected(const std::filesystem::path& path, bool inputs_commute, bool wps_commute) {
  write_file(path, json{{"inputs_commute", inputs_commute}, {"wps_commute", wps_commute}});
}

void save_report(const std::filesystem::path& path, const CommutativityReport& report,
                 std::size_t dim) {
  json doc{
      {"dim", dim},
      {"tol", report.tol},
      {"direct",
       {{"verdict", to_string(report.direct)}, {"commutator_norm", report.commutator_norm}}},
      {"hermitian_product", {{"verdict", to_string(report.hermitian_product)}}},
      {"trace_identity",
       {{"verdict", to_string(report.trace_identity)}, {"trace_gap", report.trace_gap}}},
      {"simultaneous_diag", {{"verdict", to_string(report.simultaneous_diag)}}},
      {"agree", report.agree},
  };
  if (report.witness)
    doc["simultaneous_diag"]["witness"] = witness_to_json(*report.witness);
  else
    doc["simultaneous_diag"]["witness"] = nullptr;
  write_file(path, doc);
}

}  // namespace qwp::io

#include "dfsl/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <utility>

namespace dfsl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config key '" + path + "': " + what);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

double get_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

// Exact fields reject binary floats: 0.3 as a JSON number is not 3/10.
Rational get_exact(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_float())
    fail(path, "exact values must be integers or strings like \"3/10\" or \"0.3\"");
  fail(path, "expected an integer or a rational string");
}

FracOrder get_mu(const json& j, const std::string& path, Backend backend) {
  const Rational r = get_exact(j, path);
  if (r.num() <= 0 || r.num() > r.den()) fail(path, "mu must lie in (0,1]");
  if (r.den() > (BigInt(1) << 62)) fail(path, "mu denominator is too large");
  return FracOrder(r.num().convert_to<std::int64_t>(), r.den().convert_to<std::int64_t>(),
                   backend);
}

CoeffSpec get_coeff(const json& j, const std::string& path) {
  CoeffSpec spec;
  if (j.is_number_integer() || j.is_string() || j.is_number_float()) {
    spec.is_constant = true;
    spec.constant = get_exact(j, path);
    return spec;
  }
  if (!j.is_object()) fail(path, "expected a number, rational string, or {constant|values}");
  for (const auto& [key, _] : j.items())
    if (key != "constant" && key != "values") fail(path + "." + key, "unknown key");
  if (j.contains("constant") == j.contains("values"))
    fail(path, "needs exactly one of 'constant' or 'values'");
  if (j.contains("constant")) {
    spec.is_constant = true;
    spec.constant = get_exact(j.at("constant"), path + ".constant");
    return spec;
  }
  const json& vals = j.at("values");
  if (!vals.is_array() || vals.empty()) fail(path + ".values", "expected a nonempty array");
  spec.is_constant = false;
  for (std::size_t i = 0; i < vals.size(); ++i)
    spec.values.push_back(get_exact(vals[i], path + ".values[" + std::to_string(i) + "]"));
  return spec;
}

void check_known_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) fail(key, "unknown key");
}

Command get_command(const json& j) {
  const std::string s = get_string(j, "command");
  if (s == "kernels") return Command::Kernels;
  if (s == "opmat") return Command::Opmat;
  if (s == "verify") return Command::Verify;
  if (s == "eig") return Command::Eig;
  if (s == "compare") return Command::Compare;
  if (s == "sweep") return Command::Sweep;
  fail("command", "must be one of kernels|opmat|verify|eig|compare|sweep");
}

Backend get_backend(const json& j) {
  const std::string s = get_string(j, "backend");
  if (s == "rational") return Backend::ExactRational;
  if (s == "float64") return Backend::Float64;
  fail("backend", "must be 'rational' or 'float64'");
}

KernelKind get_kernel_kind(const json& j) {
  const std::string s = get_string(j, "kernel");
  if (s == "rl_sum") return KernelKind::RLSum;
  if (s == "rl_diff") return KernelKind::RLDiff;
  if (s == "gl") return KernelKind::GL;
  fail("kernel", "must be one of rl_sum|rl_diff|gl");
}

OperatorKind get_op_kind(const json& j) {
  const std::string s = get_string(j, "kind");
  if (s == "NablaLeftSum") return OperatorKind::NablaLeftSum;
  if (s == "NablaRightSum") return OperatorKind::NablaRightSum;
  if (s == "NablaLeftDiff") return OperatorKind::NablaLeftDiff;
  if (s == "NablaRightDiff") return OperatorKind::NablaRightDiff;
  if (s == "DeltaLeftDiff") return OperatorKind::DeltaLeftDiff;
  if (s == "DeltaRightDiff") return OperatorKind::DeltaRightDiff;
  fail("kind", "must name one of the six operator kinds");
}

DfslVariant get_variant(const json& j) {
  const std::string s = get_string(j, "variant");
  if (s == "RL") return DfslVariant::RL;
  if (s == "GL") return DfslVariant::GL;
  fail("variant", "must be 'RL' or 'GL'");
}

GridSpec get_grid(const json& j) {
  if (!j.is_object()) fail("grid", "expected an object {a, b, h?}");
  check_known_keys(j, {"a", "b", "h"});
  if (!j.contains("a") || !j.contains("b")) fail("grid", "needs integer endpoints 'a' and 'b'");
  const std::int64_t a = get_int(j.at("a"), "grid.a");
  const std::int64_t b = get_int(j.at("b"), "grid.b");
  Rational h(1);
  if (j.contains("h")) h = get_exact(j.at("h"), "grid.h");
  try {
    return GridSpec(a, b, std::move(h));
  } catch (const std::exception& e) {
    fail("grid", e.what());
  }
}

void check_coeff_length(const CoeffSpec& spec, const GridSpec& grid, const std::string& path) {
  if (spec.is_constant) return;
  if (spec.values.size() != static_cast<std::size_t>(grid.n()))
    fail(path, "values list has length " + std::to_string(spec.values.size()) +
                   ", grid interior needs " + std::to_string(grid.n()));
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Kernels: return "kernels";
    case Command::Opmat: return "opmat";
    case Command::Verify: return "verify";
    case Command::Eig: return "eig";
    case Command::Compare: return "compare";
    case Command::Sweep: return "sweep";
  }
  return "?";
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ConfigError("parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(col));
  }
  if (!doc.is_object()) throw ConfigError("config key '': top level must be an object");

  RunConfig cfg;
  cfg.command = get_command(doc.at("command"));

  static const std::set<std::string> common = {"command", "backend"};
  std::set<std::string> allowed = common;
  switch (cfg.command) {
    case Command::Kernels:
      allowed.insert({"kernel", "mu", "len"});
      break;
    case Command::Opmat:
      allowed.insert({"kind", "mu", "grid"});
      break;
    case Command::Verify:
      allowed.insert({"variant", "mu", "grid", "trials", "seed", "p", "q"});
      break;
    case Command::Eig:
      allowed.insert({"variant", "mu", "grid", "p", "q", "r", "eig_tol", "sweep_cap",
                      "eigenvectors"});
      break;
    case Command::Compare:
    case Command::Sweep:
      allowed.insert({"variant", "mu", "grid", "p", "q1", "q2", "r", "selection", "tol",
                      "eig_tol", "sweep_cap", "seed"});
      break;
  }
  check_known_keys(doc, allowed);

  const bool float_only = cfg.command == Command::Eig || cfg.command == Command::Compare ||
                          cfg.command == Command::Sweep;
  cfg.backend = float_only ? Backend::Float64 : Backend::ExactRational;
  if (doc.contains("backend")) cfg.backend = get_backend(doc.at("backend"));
  if (float_only && cfg.backend != Backend::Float64)
    fail("backend", "eig/compare/sweep require float64 (the eigensolver is float-only)");

  if (!doc.contains("mu")) fail("mu", "required");
  if (cfg.command == Command::Sweep && doc.at("mu").is_array()) {
    const json& list = doc.at("mu");
    if (list.empty()) fail("mu", "sweep needs a nonempty list");
    for (std::size_t i = 0; i < list.size(); ++i)
      cfg.mu.push_back(get_mu(list[i], "mu[" + std::to_string(i) + "]", cfg.backend));
    for (std::size_t i = 0; i + 1 < cfg.mu.size(); ++i)
      if (!(cfg.mu[i].as_rational() < cfg.mu[i + 1].as_rational()))
        fail("mu", "sweep list must be strictly increasing");
  } else {
    if (doc.at("mu").is_array()) fail("mu", "a list is only valid for sweep");
    cfg.mu.push_back(get_mu(doc.at("mu"), "mu", cfg.backend));
  }

  cfg.p.is_constant = true;
  cfg.p.constant = Rational(1);
  cfg.r.is_constant = true;
  cfg.r.constant = Rational(1);

  switch (cfg.command) {
    case Command::Kernels: {
      if (!doc.contains("kernel")) fail("kernel", "required");
      cfg.kernel = get_kernel_kind(doc.at("kernel"));
      if (doc.contains("len")) {
        const std::int64_t len = get_int(doc.at("len"), "len");
        if (len < 1) fail("len", "must be >= 1");
        cfg.len = static_cast<std::size_t>(len);
      }
      return cfg;
    }
    case Command::Opmat: {
      if (!doc.contains("kind")) fail("kind", "required");
      cfg.op_kind = get_op_kind(doc.at("kind"));
      if (!doc.contains("grid")) fail("grid", "required");
      cfg.grid = get_grid(doc.at("grid"));
      return cfg;
    }
    default:
      break;
  }

  if (!doc.contains("grid")) fail("grid", "required");
  cfg.grid = get_grid(doc.at("grid"));
  if (doc.contains("variant")) cfg.variant = get_variant(doc.at("variant"));

  if (doc.contains("p")) cfg.p = get_coeff(doc.at("p"), "p");
  if (doc.contains("q")) cfg.q = get_coeff(doc.at("q"), "q");
  if (doc.contains("q1")) cfg.q1 = get_coeff(doc.at("q1"), "q1");
  if (doc.contains("q2")) cfg.q2 = get_coeff(doc.at("q2"), "q2");
  if (doc.contains("r")) cfg.r = get_coeff(doc.at("r"), "r");
  check_coeff_length(cfg.p, *cfg.grid, "p");
  check_coeff_length(cfg.q, *cfg.grid, "q");
  check_coeff_length(cfg.q1, *cfg.grid, "q1");
  check_coeff_length(cfg.q2, *cfg.grid, "q2");
  check_coeff_length(cfg.r, *cfg.grid, "r");

  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<std::int64_t>() < 0))
      fail("seed", "expected a nonnegative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("trials")) {
    const std::int64_t t = get_int(doc.at("trials"), "trials");
    if (t < 1) fail("trials", "must be >= 1");
    cfg.trials = static_cast<int>(t);
  }
  if (doc.contains("tol")) {
    cfg.tol = get_real(doc.at("tol"), "tol");
    if (!(cfg.tol >= 0)) fail("tol", "must be >= 0");
  }
  if (doc.contains("eig_tol")) {
    cfg.eig_tol = get_real(doc.at("eig_tol"), "eig_tol");
    if (!(cfg.eig_tol >= 1e-14)) fail("eig_tol", "must be >= 1e-14");
  }
  if (doc.contains("sweep_cap")) {
    const std::int64_t c = get_int(doc.at("sweep_cap"), "sweep_cap");
    if (c < 1) fail("sweep_cap", "must be >= 1");
    cfg.sweep_cap = static_cast<int>(c);
  }
  if (doc.contains("eigenvectors")) cfg.eigenvectors = get_bool(doc.at("eigenvectors"), "eigenvectors");

  if (cfg.command == Command::Compare || cfg.command == Command::Sweep) {
    if (!doc.contains("selection")) fail("selection", "required");
    const json& sel = doc.at("selection");
    if (!sel.is_object()) fail("selection", "expected an object {k1, k2}");
    check_known_keys(sel, {"k1", "k2"});
    if (!sel.contains("k1") || !sel.contains("k2")) fail("selection", "needs 'k1' and 'k2'");
    const std::int64_t n = cfg.grid->n();
    const std::int64_t k1 = get_int(sel.at("k1"), "selection.k1");
    const std::int64_t k2 = get_int(sel.at("k2"), "selection.k2");
    if (k1 < 1 || k1 > n) fail("selection.k1", "must lie in [1, " + std::to_string(n) + "]");
    if (k2 < 1 || k2 > n) fail("selection.k2", "must lie in [1, " + std::to_string(n) + "]");
    cfg.k1 = static_cast<int>(k1);
    cfg.k2 = static_cast<int>(k2);
  }
  return cfg;
}

}  // namespace dfsl

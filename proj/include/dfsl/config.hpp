#pragma once

#include "dfsl/comparison.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfsl {

enum class Command { Kernels, Opmat, Verify, Eig, Compare, Sweep };

const char* command_name(Command c);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coefficient function: either a constant or an explicit per-point value list.
struct CoeffSpec {
  bool is_constant = true;
  Rational constant = Rational(0);
  std::vector<Rational> values;

  template <class Scalar>
  GridFunction<Scalar> expand(const GridSpec& grid) const;
};

template <>
inline GridFunction<Rational> CoeffSpec::expand<Rational>(const GridSpec& grid) const {
  if (is_constant) return constant_function(grid, constant);
  DenseVector<Rational> v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return GridFunction<Rational>(grid, std::move(v));
}

template <>
inline GridFunction<double> CoeffSpec::expand<double>(const GridSpec& grid) const {
  if (is_constant) return constant_function(grid, constant.to_double());
  DenseVector<double> v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = values[i].to_double();
  return GridFunction<double>(grid, std::move(v));
}

struct RunConfig {
  Command command = Command::Kernels;
  Backend backend = Backend::ExactRational;

  KernelKind kernel = KernelKind::GL;  // kernels
  std::size_t len = 16;                // kernels
  OperatorKind op_kind = OperatorKind::NablaLeftDiff;  // opmat

  std::vector<FracOrder> mu;
  std::optional<GridSpec> grid;
  DfslVariant variant = DfslVariant::GL;
  CoeffSpec p;   // defaults to 1
  CoeffSpec q;   // defaults to 0
  CoeffSpec q1;  // defaults to 0
  CoeffSpec q2;  // defaults to 0
  CoeffSpec r;   // defaults to 1
  int k1 = 0;
  int k2 = 0;
  double tol = 1e-10;
  double eig_tol = 1e-13;
  int sweep_cap = 100;
  int trials = 20;
  std::uint64_t seed = 0;
  bool eigenvectors = false;
};

// Parses and validates the JSON configuration document; diagnostics carry the
// offending key path, or line/column for malformed JSON.
RunConfig parse_config(const std::string& text);

}  // namespace dfsl

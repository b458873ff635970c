#pragma once

#include "dfsl/frac_order.hpp"
#include "dfsl/grid.hpp"
#include "dfsl/kernels.hpp"
#include "dfsl/prng.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dfsl {

enum class OperatorKind {
  NablaLeftSum,
  NablaRightSum,
  NablaLeftDiff,
  NablaRightDiff,
  DeltaLeftDiff,
  DeltaRightDiff
};

inline const char* operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::NablaLeftSum: return "NablaLeftSum";
    case OperatorKind::NablaRightSum: return "NablaRightSum";
    case OperatorKind::NablaLeftDiff: return "NablaLeftDiff";
    case OperatorKind::NablaRightDiff: return "NablaRightDiff";
    case OperatorKind::DeltaLeftDiff: return "DeltaLeftDiff";
    case OperatorKind::DeltaRightDiff: return "DeltaRightDiff";
  }
  return "?";
}

inline bool is_left_kind(OperatorKind k) {
  return k == OperatorKind::NablaLeftSum || k == OperatorKind::NablaLeftDiff ||
         k == OperatorKind::DeltaLeftDiff;
}

inline bool is_delta_kind(OperatorKind k) {
  return k == OperatorKind::DeltaLeftDiff || k == OperatorKind::DeltaRightDiff;
}

inline OperatorKind left_counterpart(OperatorKind k) {
  switch (k) {
    case OperatorKind::NablaRightSum: return OperatorKind::NablaLeftSum;
    case OperatorKind::NablaRightDiff: return OperatorKind::NablaLeftDiff;
    case OperatorKind::DeltaRightDiff: return OperatorKind::DeltaLeftDiff;
    default: return k;
  }
}

template <class Scalar>
struct OperatorMatrix {
  OperatorKind kind;
  FracOrder mu;
  GridSpec grid;
  DenseMatrix<Scalar> entries;
};

namespace detail {

// h^{-mu} for the delta kinds. Exactly 1 at h = 1; exactly 1/h at mu = 1;
// irrational otherwise, so the exact backend refuses it.
template <class Scalar>
Scalar step_scale(const Rational& h, const FracOrder& mu);

template <>
inline double step_scale<double>(const Rational& h, const FracOrder& mu) {
  if (h == Rational(1)) return 1.0;
  return std::pow(h.to_double(), -mu.as_double());
}

template <>
inline Rational step_scale<Rational>(const Rational& h, const FracOrder& mu) {
  if (h == Rational(1)) return Rational(1);
  if (mu.is_one()) return Rational(1) / h;
  throw std::domain_error(
      "exact backend requires h = 1 for fractional order (h^mu is irrational); use the float backend");
}

template <class Scalar>
DenseMatrix<Scalar> lower_toeplitz(const std::vector<Scalar>& column) {
  const Eigen::Index n = static_cast<Eigen::Index>(column.size());
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = column[static_cast<std::size_t>(i - j)];
  return m;
}

}  // namespace detail

template <class Scalar>
OperatorMatrix<Scalar> build_operator(OperatorKind kind, const FracOrder& mu,
                                      const GridSpec& grid) {
  const std::int64_t n = grid.n();
  if (n > 4096) throw std::length_error("dense operator storage is capped at n <= 4096");

  const std::size_t len = static_cast<std::size_t>(n);
  const OperatorKind base = left_counterpart(kind);
  std::vector<Scalar> column;
  switch (base) {
    case OperatorKind::NablaLeftSum:
      column = rl_sum_kernel<Scalar>(mu, len).coeffs;
      break;
    case OperatorKind::NablaLeftDiff:
      column = rl_diff_kernel<Scalar>(mu, len).coeffs;
      break;
    default:
      column = gl_kernel<Scalar>(mu, len).coeffs;
      break;
  }
  if (is_delta_kind(kind)) {
    const Scalar scale = detail::step_scale<Scalar>(grid.h, mu);
    for (Scalar& c : column) c *= scale;
  }
  DenseMatrix<Scalar> entries = detail::lower_toeplitz(column);
  if (!is_left_kind(kind)) entries = entries.transpose().eval();
  return {kind, mu, grid, std::move(entries)};
}

template <class Scalar>
GridFunction<Scalar> apply(const OperatorMatrix<Scalar>& m, const GridFunction<Scalar>& x) {
  if (m.grid != x.grid) throw std::invalid_argument("apply: operator and function grids differ");
  return GridFunction<Scalar>(x.grid, m.entries * x.values);
}

// Max over seeded integer-valued trial pairs (u, v) of
// |sum_s u(s) (left v)(s) - sum_s v(s) (right u)(s)|.
template <class Scalar>
Scalar verify_by_parts(const OperatorMatrix<Scalar>& left, const OperatorMatrix<Scalar>& right,
                       int trials, std::uint64_t seed) {
  const bool rl_pair = left.kind == OperatorKind::NablaLeftDiff &&
                       right.kind == OperatorKind::NablaRightDiff;
  const bool gl_pair = left.kind == OperatorKind::DeltaLeftDiff &&
                       right.kind == OperatorKind::DeltaRightDiff;
  if (!rl_pair && !gl_pair)
    throw std::invalid_argument(
        "verify_by_parts: expects (NablaLeftDiff, NablaRightDiff) or (DeltaLeftDiff, DeltaRightDiff)");
  if (left.mu != right.mu || left.grid != right.grid)
    throw std::invalid_argument("verify_by_parts: pair must share order and grid");
  if (trials < 1) throw std::invalid_argument("verify_by_parts: trials must be >= 1");

  const Eigen::Index n = left.entries.rows();
  std::mt19937_64 rng(seed);
  Scalar worst(0);
  for (int t = 0; t < trials; ++t) {
    DenseVector<Scalar> u(n), v(n);
    for (Eigen::Index i = 0; i < n; ++i) u(i) = Scalar(static_cast<long long>(int_in_range(rng, -3, 3)));
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(static_cast<long long>(int_in_range(rng, -3, 3)));
    const Scalar lhs = u.dot(left.entries * v);
    const Scalar rhs = v.dot(right.entries * u);
    using std::abs;
    const Scalar d = abs(Scalar(lhs - rhs));
    if (worst < d) worst = d;
  }
  return worst;
}

}  // namespace dfsl

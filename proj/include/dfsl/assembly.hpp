#pragma once

#include "dfsl/operators.hpp"

#include <stdexcept>
#include <utility>

namespace dfsl {

enum class DfslVariant { RL, GL };

inline const char* variant_name(DfslVariant v) { return v == DfslVariant::RL ? "RL" : "GL"; }

// L = M_left diag(p) M_right + diag(q). The weight r is not part of the
// operator itself; assemble stores the unit weight and eigensolve takes the
// actual weight explicitly.
template <class Scalar>
struct DfslOperator {
  DfslVariant variant;
  GridSpec grid;
  FracOrder mu;
  GridFunction<Scalar> p;
  GridFunction<Scalar> q;
  GridFunction<Scalar> r;
  DenseMatrix<Scalar> L;
};

template <class Scalar>
DfslOperator<Scalar> assemble(DfslVariant variant, const GridSpec& grid, const FracOrder& mu,
                              const GridFunction<Scalar>& p, const GridFunction<Scalar>& q) {
  if (p.grid != grid || q.grid != grid)
    throw std::invalid_argument("assemble: coefficient grids must match the operator grid");
  for (Eigen::Index i = 0; i < p.values.size(); ++i)
    if (!(p.values(i) > Scalar(0)))
      throw std::domain_error("assemble: leading coefficient p must be positive everywhere");

  const OperatorKind lk =
      variant == DfslVariant::RL ? OperatorKind::NablaLeftDiff : OperatorKind::DeltaLeftDiff;
  const OperatorKind rk =
      variant == DfslVariant::RL ? OperatorKind::NablaRightDiff : OperatorKind::DeltaRightDiff;
  const OperatorMatrix<Scalar> ml = build_operator<Scalar>(lk, mu, grid);
  const OperatorMatrix<Scalar> mr = build_operator<Scalar>(rk, mu, grid);

  DenseMatrix<Scalar> L = ml.entries * p.values.asDiagonal() * mr.entries;
  L += DenseMatrix<Scalar>(q.values.asDiagonal());
  return {variant, grid, mu, p, q, constant_function(grid, Scalar(1)), std::move(L)};
}

// sum_s [ v(s) (L0 u)(s) - u(s) (L0 v)(s) ] with L0 the potential-free part;
// exactly zero for the rational backend since L0 is symmetric.
template <class Scalar>
Scalar lagrange_sum(const DfslOperator<Scalar>& op, const GridFunction<Scalar>& u,
                    const GridFunction<Scalar>& v) {
  if (u.grid != op.grid || v.grid != op.grid)
    throw std::invalid_argument("lagrange_sum: function grids must match the operator grid");
  DenseMatrix<Scalar> L0 = op.L;
  L0 -= DenseMatrix<Scalar>(op.q.values.asDiagonal());
  return v.values.dot(L0 * u.values) - u.values.dot(L0 * v.values);
}

}  // namespace dfsl

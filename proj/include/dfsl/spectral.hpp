#pragma once

#include "dfsl/assembly.hpp"

#include <stdexcept>

namespace dfsl {

struct EigenSystem {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column k pairs with eigenvalues[k]; r-weighted orthonormal
  Eigen::VectorXd residuals;     // per pair, ||L u - lambda diag(r) u||_2
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves L u = lambda diag(r) u through the symmetric congruence
// diag(r)^{-1/2} L diag(r)^{-1/2}, diagonalized by cyclic Jacobi rotations
// until every off-diagonal magnitude is <= tol * ||matrix||_F.
EigenSystem eigensolve(const DfslOperator<double>& op, const GridFunction<double>& r,
                       double tol = 1e-13, int sweep_cap = 100);

double residual(const DfslOperator<double>& op, const GridFunction<double>& r, double lambda,
                const GridFunction<double>& u);

}  // namespace dfsl

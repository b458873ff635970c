#include "dfsl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace dfsl {

namespace {

double max_off_diagonal(const Eigen::MatrixXd& b) {
  const Eigen::Index n = b.rows();
  double m = 0.0;
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q) m = std::max(m, std::abs(b(p, q)));
  return m;
}

void rotate(Eigen::MatrixXd& b, Eigen::MatrixXd& j, Eigen::Index p, Eigen::Index q) {
  const double apq = b(p, q);
  if (apq == 0.0) return;
  const double theta = (b(q, q) - b(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Eigen::Index n = b.rows();
  const double bpp = b(p, p);
  const double bqq = b(q, q);
  b(p, p) = bpp - t * apq;
  b(q, q) = bqq + t * apq;
  b(p, q) = 0.0;
  b(q, p) = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double bip = b(i, p);
    const double biq = b(i, q);
    b(i, p) = c * bip - s * biq;
    b(p, i) = b(i, p);
    b(i, q) = s * bip + c * biq;
    b(q, i) = b(i, q);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double jip = j(i, p);
    const double jiq = j(i, q);
    j(i, p) = c * jip - s * jiq;
    j(i, q) = s * jip + c * jiq;
  }
}

}  // namespace

EigenSystem eigensolve(const DfslOperator<double>& op, const GridFunction<double>& r, double tol,
                       int sweep_cap) {
  if (r.grid != op.grid) throw std::invalid_argument("eigensolve: weight grid must match the operator grid");
  for (Eigen::Index i = 0; i < r.values.size(); ++i)
    if (!(r.values(i) > 0.0)) throw std::domain_error("eigensolve: weight r must be positive everywhere");
  if (!(tol >= 1e-14)) throw std::domain_error("eigensolve: tol must be >= 1e-14");
  if (sweep_cap < 0) throw std::invalid_argument("eigensolve: sweep cap must be >= 0");

  const Eigen::Index n = op.L.rows();
  const Eigen::VectorXd dinv = r.values.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd b = dinv.asDiagonal() * op.L * dinv.asDiagonal();
  b = 0.5 * (b + b.transpose().eval());
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n, n);

  const double threshold = tol * b.norm();
  int sweep = 0;
  while (max_off_diagonal(b) > threshold) {
    if (++sweep > sweep_cap)
      throw ConvergenceError("eigensolve: off-diagonal norm above threshold after " +
                             std::to_string(sweep_cap) + " sweeps");
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(b, j, p, q);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return b(x, x) < b(y, y); });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors.resize(n, n);
  es.residuals.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    es.eigenvalues(k) = b(src, src);
    Eigen::VectorXd u = dinv.cwiseProduct(j.col(src));
    Eigen::Index imax = 0;
    u.cwiseAbs().maxCoeff(&imax);
    if (u(imax) < 0) u = -u;
    es.eigenvectors.col(k) = u;
    es.residuals(k) = (op.L * u - es.eigenvalues(k) * r.values.cwiseProduct(u)).norm();
  }
  return es;
}

double residual(const DfslOperator<double>& op, const GridFunction<double>& r, double lambda,
                const GridFunction<double>& u) {
  if (r.grid != op.grid || u.grid != op.grid)
    throw std::invalid_argument("residual: grids must match the operator grid");
  return (op.L * u.values - lambda * r.values.cwiseProduct(u.values)).norm();
}

}  // namespace dfsl

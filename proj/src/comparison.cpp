#include "dfsl/comparison.hpp"

#include "dfsl/version.hpp"

#include <algorithm>
#include <chrono>

namespace dfsl {

Verdict check_first_comparison(const NodeSet& z_u, const NodeSet& z_v) {
  Verdict verdict;
  if (z_u.size() < 2) {
    verdict.status = VerdictStatus::VacuouslyHolds;
    return verdict;
  }
  for (std::size_t i = 0; i + 1 < z_u.size(); ++i) {
    const double lo = z_u.position(i);
    const double hi = z_u.position(i + 1);
    const bool covered = std::any_of(z_v.nodes.begin(), z_v.nodes.end(), [&](const Node& n) {
      return lo < n.position && n.position < hi;
    });
    if (!covered) {
      verdict.status = VerdictStatus::Violated;
      verdict.witness_kind = Verdict::WitnessKind::Gap;
      verdict.gap_lo = lo;
      verdict.gap_hi = hi;
      return verdict;
    }
  }
  verdict.status = VerdictStatus::Holds;
  return verdict;
}

Verdict check_second_comparison(const NodeSet& z_u, const NodeSet& z_v) {
  Verdict verdict;
  if (z_v.size() < z_u.size()) {
    verdict.status = VerdictStatus::Violated;
    verdict.witness_kind = Verdict::WitnessKind::CountDeficit;
    verdict.count_first = z_u.size();
    verdict.count_second = z_v.size();
    return verdict;
  }
  for (std::size_t k = 0; k < z_u.size(); ++k) {
    if (!(z_v.position(k) < z_u.position(k))) {
      verdict.status = VerdictStatus::Violated;
      verdict.witness_kind = Verdict::WitnessKind::OrderIndex;
      verdict.order_k = k + 1;
      verdict.order_first_pos = z_u.position(k);
      verdict.order_second_pos = z_v.position(k);
      return verdict;
    }
  }
  verdict.status = VerdictStatus::Holds;
  return verdict;
}

ComparisonPair build_comparison_pair(const ComparisonProblem& problem, double eig_tol,
                                     int sweep_cap) {
  const GridSpec& grid = problem.grid;
  const std::int64_t n = grid.n();
  if (problem.k1 < 1 || problem.k1 > n || problem.k2 < 1 || problem.k2 > n)
    throw std::invalid_argument("comparison: eigenpair selections must lie in [1, n]");

  const DfslOperator<double> op1 = assemble(problem.variant, grid, problem.mu, problem.p, problem.q1);
  const DfslOperator<double> op2 = assemble(problem.variant, grid, problem.mu, problem.p, problem.q2);
  const EigenSystem es1 = eigensolve(op1, problem.r, eig_tol, sweep_cap);
  const EigenSystem es2 = eigensolve(op2, problem.r, eig_tol, sweep_cap);

  const Eigen::Index i1 = problem.k1 - 1;
  const Eigen::Index i2 = problem.k2 - 1;
  const double lambda1 = es1.eigenvalues(i1);
  const double lambda2 = es2.eigenvalues(i2);

  const Eigen::VectorXd k_vals = problem.q1.values - lambda1 * problem.r.values;
  const Eigen::VectorXd m_vals = problem.q2.values - lambda2 * problem.r.values;
  for (Eigen::Index i = 0; i < k_vals.size(); ++i)
    if (!(k_vals(i) < m_vals(i)))
      throw HypothesisUnmetError(grid.a + 1 + i, k_vals(i), m_vals(i));

  return {GridFunction<double>(grid, es1.eigenvectors.col(i1)),
          GridFunction<double>(grid, es2.eigenvectors.col(i2)),
          GridFunction<double>(grid, k_vals),
          GridFunction<double>(grid, m_vals),
          lambda1,
          lambda2,
          es1.residuals(i1),
          es2.residuals(i2)};
}

ComparisonReport run_comparison(const ComparisonProblem& problem, double tol, std::uint64_t seed,
                                double eig_tol, int sweep_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const ComparisonPair pair = build_comparison_pair(problem, eig_tol, sweep_cap);
  const NodeSet zeros_u = find_generalized_zeros(pair.u, tol);
  const NodeSet zeros_v = find_generalized_zeros(pair.v, tol);

  // k < m makes u the faster-oscillating solution, so the interlacing
  // predicates partition by the slower solution's zeros: v's gaps must be
  // filled by u, and u must out-count and lead v.
  const Verdict first = check_first_comparison(zeros_v, zeros_u);
  const Verdict second = check_second_comparison(zeros_v, zeros_u);

  std::vector<bool> kth_order_ok;
  for (std::size_t k = 0; k < std::min(zeros_u.size(), zeros_v.size()); ++k)
    kth_order_ok.push_back(zeros_u.position(k) < zeros_v.position(k));

  ComparisonReport report{problem,
                          tol,
                          eig_tol,
                          zeros_u,
                          zeros_v,
                          zeros_u.size(),
                          zeros_v.size(),
                          std::move(kth_order_ok),
                          first,
                          second,
                          pair.k,
                          pair.m,
                          pair.lambda1,
                          pair.lambda2,
                          pair.residual_u,
                          pair.residual_v,
                          Backend::Float64,
                          seed,
                          kVersion,
                          0.0};
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace dfsl

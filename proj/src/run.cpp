#include "dfsl/run.hpp"

#include "dfsl/report_json.hpp"
#include "dfsl/serialize.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace dfsl {

namespace {

template <class Scalar>
std::string kernel_csv(const RunConfig& cfg) {
  KernelSeq<Scalar> seq{KernelKind::GL, cfg.mu[0], {}};
  switch (cfg.kernel) {
    case KernelKind::RLSum: seq = rl_sum_kernel<Scalar>(cfg.mu[0], cfg.len); break;
    case KernelKind::RLDiff: seq = rl_diff_kernel<Scalar>(cfg.mu[0], cfg.len); break;
    case KernelKind::GL: seq = gl_kernel<Scalar>(cfg.mu[0], cfg.len); break;
  }
  std::string out = csv_line({"j", "coefficient"});
  for (std::size_t j = 0; j < seq.coeffs.size(); ++j)
    out += csv_line({std::to_string(j), format_scalar(seq.coeffs[j])});
  return out;
}

template <class Scalar>
std::string matrix_csv(const DenseMatrix<Scalar>& m) {
  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < m.cols(); ++j) header.push_back("c" + std::to_string(j));
  std::string out = csv_line(header);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    out += csv_line(row);
  }
  return out;
}

template <class Scalar>
std::string opmat_csv(const RunConfig& cfg) {
  return matrix_csv(build_operator<Scalar>(cfg.op_kind, cfg.mu[0], *cfg.grid).entries);
}

template <class Scalar>
std::string verify_csv(const RunConfig& cfg) {
  const GridSpec& grid = *cfg.grid;
  const FracOrder& mu = cfg.mu[0];
  const OperatorKind lk = cfg.variant == DfslVariant::RL ? OperatorKind::NablaLeftDiff
                                                         : OperatorKind::DeltaLeftDiff;
  const OperatorKind rk = cfg.variant == DfslVariant::RL ? OperatorKind::NablaRightDiff
                                                         : OperatorKind::DeltaRightDiff;
  const OperatorMatrix<Scalar> left = build_operator<Scalar>(lk, mu, grid);
  const OperatorMatrix<Scalar> right = build_operator<Scalar>(rk, mu, grid);

  const Scalar by_parts = verify_by_parts(left, right, cfg.trials, cfg.seed);
  const Scalar transpose_defect =
      DenseMatrix<Scalar>(right.entries - left.entries.transpose()).cwiseAbs().maxCoeff();
  const DfslOperator<Scalar> op =
      assemble(cfg.variant, grid, mu, cfg.p.expand<Scalar>(grid), cfg.q.expand<Scalar>(grid));
  const Scalar symmetry_defect =
      DenseMatrix<Scalar>(op.L - op.L.transpose()).cwiseAbs().maxCoeff();

  std::string out = csv_line({"check", "discrepancy"});
  out += csv_line({"by_parts_max", format_scalar(by_parts)});
  out += csv_line({"transpose_identity_max", format_scalar(transpose_defect)});
  out += csv_line({"dfsl_symmetry_max", format_scalar(symmetry_defect)});
  return out;
}

std::string mu_slug(const FracOrder& mu) {
  return std::to_string(mu.num()) + "_" + std::to_string(mu.den());
}

ComparisonProblem make_problem(const RunConfig& cfg, const FracOrder& mu) {
  const GridSpec& grid = *cfg.grid;
  return ComparisonProblem{cfg.variant,
                           grid,
                           mu,
                           cfg.p.expand<double>(grid),
                           cfg.q1.expand<double>(grid),
                           cfg.q2.expand<double>(grid),
                           cfg.r.expand<double>(grid),
                           cfg.k1,
                           cfg.k2};
}

bool any_violated(const ComparisonReport& report) {
  return report.verdict_first.status == VerdictStatus::Violated ||
         report.verdict_second.status == VerdictStatus::Violated;
}

std::string report_text(const ComparisonReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

const char* summary_verdict(const Verdict& v) {
  return verdict_status_name(v.status == VerdictStatus::VacuouslyHolds ? VerdictStatus::Holds
                                                                       : v.status);
}

int run_compare(const RunConfig& cfg, const RunOptions& opt) {
  try {
    const ComparisonReport report = run_comparison(make_problem(cfg, cfg.mu[0]), cfg.tol,
                                                   cfg.seed, cfg.eig_tol, cfg.sweep_cap);
    atomic_write_file(opt.out_dir / "compare.json", report_text(report));
    return opt.strict && any_violated(report) ? 1 : 0;
  } catch (const HypothesisUnmetError& e) {
    std::cerr << "compare: " << e.what() << "; no report written\n";
    return opt.strict ? 1 : 0;
  }
}

int run_sweep(const RunConfig& cfg, const RunOptions& opt) {
  std::string summary = csv_line(
      {"mu", "lambda1", "lambda2", "n_zeros_u", "n_zeros_v", "verdict_first", "verdict_second"});
  bool strict_failure = false;
  for (const FracOrder& mu : cfg.mu) {
    try {
      const ComparisonReport report =
          run_comparison(make_problem(cfg, mu), cfg.tol, cfg.seed, cfg.eig_tol, cfg.sweep_cap);
      atomic_write_file(opt.out_dir / ("sweep_mu_" + mu_slug(mu) + ".json"), report_text(report));
      summary += csv_line({mu.str(), format_scalar(report.lambda1), format_scalar(report.lambda2),
                           std::to_string(report.n_u), std::to_string(report.n_v),
                           summary_verdict(report.verdict_first),
                           summary_verdict(report.verdict_second)});
      strict_failure = strict_failure || any_violated(report);
    } catch (const HypothesisUnmetError& e) {
      std::cerr << "sweep mu=" << mu.str() << ": " << e.what() << "; no report written\n";
      summary += csv_line({mu.str(), "", "", "", "", "hypothesis_unmet", "hypothesis_unmet"});
      strict_failure = true;
    }
  }
  atomic_write_file(opt.out_dir / "sweep_summary.csv", summary);
  return opt.strict && strict_failure ? 1 : 0;
}

int run_eig(const RunConfig& cfg, const RunOptions& opt) {
  const GridSpec& grid = *cfg.grid;
  const DfslOperator<double> op = assemble(cfg.variant, grid, cfg.mu[0],
                                           cfg.p.expand<double>(grid), cfg.q.expand<double>(grid));
  const GridFunction<double> r = cfg.r.expand<double>(grid);
  const EigenSystem es = eigensolve(op, r, cfg.eig_tol, cfg.sweep_cap);

  std::string out = csv_line({"index", "eigenvalue", "residual"});
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k)
    out += csv_line({std::to_string(k + 1), format_scalar(es.eigenvalues(k)),
                     format_scalar(es.residuals(k))});
  atomic_write_file(opt.out_dir / "eig.csv", out);
  if (cfg.eigenvectors)
    atomic_write_file(opt.out_dir / "eigvecs.csv", matrix_csv<double>(es.eigenvectors));
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, const RunOptions& opt) {
  std::filesystem::create_directories(opt.out_dir);
  const bool rational = cfg.backend == Backend::ExactRational;
  switch (cfg.command) {
    case Command::Kernels:
      atomic_write_file(opt.out_dir / "kernels.csv",
                        rational ? kernel_csv<Rational>(cfg) : kernel_csv<double>(cfg));
      return 0;
    case Command::Opmat:
      atomic_write_file(opt.out_dir / "opmat.csv",
                        rational ? opmat_csv<Rational>(cfg) : opmat_csv<double>(cfg));
      return 0;
    case Command::Verify:
      atomic_write_file(opt.out_dir / "verify.csv",
                        rational ? verify_csv<Rational>(cfg) : verify_csv<double>(cfg));
      return 0;
    case Command::Eig:
      return run_eig(cfg, opt);
    case Command::Compare:
      return run_compare(cfg, opt);
    case Command::Sweep:
      return run_sweep(cfg, opt);
  }
  return 2;
}

}  // namespace dfsl

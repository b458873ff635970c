#pragma once

#include "dfsl/spectral.hpp"
#include "dfsl/zeros.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfsl {

enum class VerdictStatus { Holds, VacuouslyHolds, Violated };

inline const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::VacuouslyHolds: return "vacuously_holds";
    case VerdictStatus::Violated: return "violated";
  }
  return "?";
}

// A Violated verdict carries a witness re-checkable from the two node sets
// alone: the uncovered gap, the count deficit, or the first ordering failure.
struct Verdict {
  enum class WitnessKind { None, Gap, CountDeficit, OrderIndex };

  VerdictStatus status = VerdictStatus::Holds;
  WitnessKind witness_kind = WitnessKind::None;
  double gap_lo = 0.0;
  double gap_hi = 0.0;
  std::size_t count_first = 0;   // nodes of the first (partitioning) set
  std::size_t count_second = 0;  // nodes of the second set
  std::size_t order_k = 0;       // 1-based index of the failing ordering clause
  double order_first_pos = 0.0;
  double order_second_pos = 0.0;
};

// Holds iff every open interval between consecutive nodes of z_u contains a
// node of z_v; fewer than two z_u nodes is vacuous.
Verdict check_first_comparison(const NodeSet& z_u, const NodeSet& z_v);

// Holds iff |z_v| >= |z_u| and the k-th node of z_v sits strictly left of the
// k-th node of z_u for every k <= |z_u| (ties violate).
Verdict check_second_comparison(const NodeSet& z_u, const NodeSet& z_v);

struct ComparisonProblem {
  DfslVariant variant;
  GridSpec grid;
  FracOrder mu;
  GridFunction<double> p;
  GridFunction<double> q1;
  GridFunction<double> q2;
  GridFunction<double> r;
  int k1;  // 1-based eigenpair selection for the q1 equation
  int k2;  // 1-based eigenpair selection for the q2 equation
};

class HypothesisUnmetError : public std::runtime_error {
 public:
  HypothesisUnmetError(std::int64_t t, double k, double m)
      : std::runtime_error("hypothesis k < m unmet at t = " + std::to_string(t) +
                           " (k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")"),
        grid_point(t),
        k_value(k),
        m_value(m) {}

  std::int64_t grid_point;
  double k_value;
  double m_value;
};

struct ComparisonPair {
  GridFunction<double> u;
  GridFunction<double> v;
  GridFunction<double> k;  // q1 - lambda1 r
  GridFunction<double> m;  // q2 - lambda2 r
  double lambda1;
  double lambda2;
  double residual_u;
  double residual_v;
};

// u is eigenpair k1 of the q1 operator, v is eigenpair k2 of the q2 operator.
// Throws HypothesisUnmetError if k(t) < m(t) fails at any interior point.
ComparisonPair build_comparison_pair(const ComparisonProblem& problem, double eig_tol = 1e-13,
                                     int sweep_cap = 100);

struct ComparisonReport {
  ComparisonProblem problem;
  double tol;
  double eig_tol;
  NodeSet zeros_u;
  NodeSet zeros_v;
  std::size_t n_u;
  std::size_t n_v;
  std::vector<bool> kth_order_ok;  // per shared index: u's k-th node left of v's
  Verdict verdict_first;
  Verdict verdict_second;
  GridFunction<double> effective_k;
  GridFunction<double> effective_m;
  double lambda1;
  double lambda2;
  double residual_u;
  double residual_v;
  Backend backend;
  std::uint64_t seed;
  std::string version;
  double runtime_seconds;  // informational; never serialized, reports stay byte-stable
};

ComparisonReport run_comparison(const ComparisonProblem& problem, double tol,
                                std::uint64_t seed = 0, double eig_tol = 1e-13,
                                int sweep_cap = 100);

}  // namespace dfsl

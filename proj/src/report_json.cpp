#include "dfsl/report_json.hpp"

namespace dfsl {

namespace {

using nlohmann::ordered_json;

ordered_json values_array(const GridFunction<double>& f) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < f.values.size(); ++i) arr.push_back(f.values(i));
  return arr;
}

ordered_json positions_array(const NodeSet& z) {
  ordered_json arr = ordered_json::array();
  for (const Node& n : z.nodes) arr.push_back(n.position);
  return arr;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  // A vacuous pass is still a pass; reports distinguish only holds/violated.
  out["status"] = verdict_status_name(
      v.status == VerdictStatus::VacuouslyHolds ? VerdictStatus::Holds : v.status);
  switch (v.witness_kind) {
    case Verdict::WitnessKind::None:
      break;
    case Verdict::WitnessKind::Gap:
      out["witness"] = {{"kind", "gap"}, {"x1", v.gap_lo}, {"x2", v.gap_hi}};
      break;
    case Verdict::WitnessKind::CountDeficit:
      out["witness"] = {{"kind", "count_deficit"},
                        {"n_first", v.count_first},
                        {"n_second", v.count_second}};
      break;
    case Verdict::WitnessKind::OrderIndex:
      out["witness"] = {{"kind", "order_index"},
                        {"k", v.order_k},
                        {"pos_first", v.order_first_pos},
                        {"pos_second", v.order_second_pos}};
      break;
  }
  return out;
}

}  // namespace

ordered_json report_to_json(const ComparisonReport& report) {
  const ComparisonProblem& pr = report.problem;
  ordered_json problem;
  problem["variant"] = variant_name(pr.variant);
  problem["a"] = pr.grid.a;
  problem["b"] = pr.grid.b;
  problem["h"] = pr.grid.h.str();
  problem["mu"] = pr.mu.str();
  problem["p"] = values_array(pr.p);
  problem["q1"] = values_array(pr.q1);
  problem["q2"] = values_array(pr.q2);
  problem["r"] = values_array(pr.r);
  problem["k1"] = pr.k1;
  problem["k2"] = pr.k2;
  problem["tol"] = report.tol;
  problem["eig_tol"] = report.eig_tol;

  ordered_json out;
  out["problem"] = std::move(problem);
  out["zeros_u"] = positions_array(report.zeros_u);
  out["zeros_v"] = positions_array(report.zeros_v);
  out["effective_k"] = values_array(report.effective_k);
  out["effective_m"] = values_array(report.effective_m);
  out["verdict_first"] = verdict_json(report.verdict_first);
  out["verdict_second"] = verdict_json(report.verdict_second);
  out["eigen"] = {{"lambda1", report.lambda1},
                  {"lambda2", report.lambda2},
                  {"residuals", {report.residual_u, report.residual_v}}};
  out["meta"] = {{"backend", backend_name(report.backend)},
                 {"seed", report.seed},
                 {"version", report.version}};
  return out;
}

}  // namespace dfsl

#pragma once

#include "dfsl/grid.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dfsl {

enum class NodeType { ExactZero, SignChange };

// A generalized zero: either the function vanishes at grid point t, or it
// changes sign between t-1 and t, in which case the node sits at t - 1/2.
struct Node {
  NodeType type;
  double position;
  std::int64_t t;  // the grid point (ExactZero) or the right end of the sign-change pair
};

struct NodeSet {
  std::vector<Node> nodes;
  double tolerance = 0.0;

  std::size_t size() const { return nodes.size(); }
  double position(std::size_t k) const { return nodes[k].position; }
};

// Scans interior points left to right. |u(t)| <= tol * ||u||_inf marks an
// exact zero and suppresses sign-change nodes on its flanks.
inline NodeSet find_generalized_zeros(const GridFunction<double>& u, double tol) {
  if (!(tol >= 0)) throw std::domain_error("find_generalized_zeros: tolerance must be >= 0");
  const Eigen::Index n = u.values.size();
  const double scale = u.values.cwiseAbs().maxCoeff();
  if (scale == 0.0)
    throw std::domain_error("find_generalized_zeros: identically zero (trivial) grid function");

  std::vector<bool> exact(static_cast<std::size_t>(n));
  bool all_exact = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    exact[static_cast<std::size_t>(i)] = std::abs(u.values(i)) <= tol * scale;
    all_exact = all_exact && exact[static_cast<std::size_t>(i)];
  }
  if (all_exact)
    throw std::domain_error("find_generalized_zeros: identically zero (trivial) grid function");

  NodeSet out;
  out.tolerance = tol;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::int64_t t = u.grid.a + 1 + i;
    if (i > 0 && !exact[static_cast<std::size_t>(i - 1)] && !exact[static_cast<std::size_t>(i)] &&
        u.values(i - 1) * u.values(i) < 0)
      out.nodes.push_back({NodeType::SignChange, static_cast<double>(t) - 0.5, t});
    if (exact[static_cast<std::size_t>(i)])
      out.nodes.push_back({NodeType::ExactZero, static_cast<double>(t), t});
  }
  return out;
}

}  // namespace dfsl

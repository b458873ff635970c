#pragma once

#include "dfsl/frac_order.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dfsl {

enum class KernelKind { RLSum, RLDiff, GL };

inline const char* kernel_kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::RLSum: return "rl_sum";
    case KernelKind::RLDiff: return "rl_diff";
    case KernelKind::GL: return "gl";
  }
  return "?";
}

template <class Scalar>
struct KernelSeq {
  KernelKind kind;
  FracOrder mu;
  std::vector<Scalar> coeffs;

  std::size_t len() const { return coeffs.size(); }
};

namespace detail {
inline void require_len(std::size_t len) {
  if (len < 1) throw std::invalid_argument("kernel length must be >= 1");
}
}  // namespace detail

// c_0 = 1, c_{j+1} = c_j (j + mu) / (j + 1); c_j = Gamma(j+mu) / (Gamma(mu) j!).
// The recurrence never evaluates Gamma itself, so it is exact for rationals.
template <class Scalar>
KernelSeq<Scalar> rl_sum_kernel(const FracOrder& mu, std::size_t len) {
  detail::require_len(len);
  const Scalar m = frac_value<Scalar>(mu);
  std::vector<Scalar> c;
  c.reserve(len);
  c.push_back(Scalar(1));
  for (std::size_t j = 0; j + 1 < len; ++j)
    c.push_back(c.back() * (Scalar(static_cast<long long>(j)) + m) /
                Scalar(static_cast<long long>(j + 1)));
  return {KernelKind::RLSum, mu, std::move(c)};
}

// b_0 = 1, b_{s+1} = b_s (s - mu) / (s + 1); b_s = (-1)^s binom(mu, s).
template <class Scalar>
KernelSeq<Scalar> gl_kernel(const FracOrder& mu, std::size_t len) {
  detail::require_len(len);
  const Scalar m = frac_value<Scalar>(mu);
  std::vector<Scalar> b;
  b.reserve(len);
  b.push_back(Scalar(1));
  for (std::size_t s = 0; s + 1 < len; ++s)
    b.push_back(b.back() * (Scalar(static_cast<long long>(s)) - m) /
                Scalar(static_cast<long long>(s + 1)));
  return {KernelKind::GL, mu, std::move(b)};
}

// First difference of the order-(1-mu) sum kernel: d_0 = 1,
// d_j = c_j(1-mu) - c_{j-1}(1-mu). mu = 1 degenerates to the backward
// difference [1, -1, 0, ...].
template <class Scalar>
KernelSeq<Scalar> rl_diff_kernel(const FracOrder& mu, std::size_t len) {
  detail::require_len(len);
  std::vector<Scalar> d;
  d.reserve(len);
  if (mu.is_one()) {
    d.push_back(Scalar(1));
    if (len > 1) d.push_back(Scalar(-1));
    while (d.size() < len) d.push_back(Scalar(0));
    return {KernelKind::RLDiff, mu, std::move(d)};
  }
  const FracOrder comp(mu.den() - mu.num(), mu.den(), mu.backend());
  const KernelSeq<Scalar> c = rl_sum_kernel<Scalar>(comp, len);
  d.push_back(Scalar(1));
  for (std::size_t j = 1; j < len; ++j) d.push_back(c.coeffs[j] - c.coeffs[j - 1]);
  return {KernelKind::RLDiff, mu, std::move(d)};
}

}  // namespace dfsl

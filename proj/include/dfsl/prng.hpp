#pragma once

#include <cstdint>
#include <random>

namespace dfsl {

// Draw from [lo, hi] by modulo; unlike uniform_int_distribution the sequence
// is identical across standard libraries, which golden files rely on.
inline std::int64_t int_in_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace dfsl

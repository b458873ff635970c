#pragma once

#include "dfsl/config.hpp"

#include <filesystem>

namespace dfsl {

struct RunOptions {
  bool strict = false;
  std::filesystem::path out_dir = ".";
};

// Executes the configured command and writes its artifacts into out_dir.
// Returns 0 on success; 1 when --strict is set and the hypothesis is unmet or
// a verdict is violated.  Input and runtime errors propagate as exceptions.
int run(const RunConfig& config, const RunOptions& options);

}  // namespace dfsl

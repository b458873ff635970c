#pragma once

#include "dfsl/rational.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dfsl {

// Shortest round-trip decimal (to_chars); keeps dumps platform-stable.
std::string format_scalar(double x);
inline std::string format_scalar(const Rational& x) { return x.str(); }

std::string csv_line(const std::vector<std::string>& cells);

// Whole-file atomic write: temp file in the target directory, then rename.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace dfsl

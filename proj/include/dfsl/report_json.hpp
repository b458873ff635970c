#pragma once

#include "dfsl/comparison.hpp"

#include <json.hpp>

namespace dfsl {

// Fixed key order; the dump of this object is the golden-file surface.
nlohmann::ordered_json report_to_json(const ComparisonReport& report);

}  // namespace dfsl

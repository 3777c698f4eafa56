#pragma once

#include "arpt/classifier.hpp"

#include <json.hpp>

namespace arpt::detail {

nlohmann::json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

}  // namespace arpt::detail

#pragma once

#include <json.hpp>

#include "mono/catalog.hpp"
#include "mono/checkers.hpp"
#include "mono/paths.hpp"
#include "mono/varanalysis.hpp"

namespace mono {

/// Schema-stable JSON views of the report types: key order is fixed and the
/// content depends only on the inputs, so repeated runs serialize to
/// identical bytes.
nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const ModulusEstimate& estimate);
nlohmann::ordered_json to_json(const ProbeResult& result,
                               std::span<const GraphPoint> probes);
nlohmann::ordered_json to_json(const DirectionSet& directions);
nlohmann::ordered_json to_json(const PSDReport& report);
nlohmann::ordered_json to_json(const MaxMonoReport& report);
nlohmann::ordered_json to_json(const ComponentClasses& classes);
nlohmann::ordered_json to_json(const GraphPoint& point);
nlohmann::ordered_json cone_params_json(const ConeParams& params);

}  // namespace mono

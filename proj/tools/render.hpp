#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "stabent/graph_state.hpp"
#include "stabent/report.hpp"

namespace stabent::cli {

nlohmann::ordered_json report_to_json(const EntanglementReport& report, double timing_ms);
std::string report_to_text(const EntanglementReport& report, double timing_ms);

nlohmann::ordered_json graph_to_json(const GraphStateForm& graph, const GraphBounds& bounds);
std::string graph_to_text(const GraphStateForm& graph, const GraphBounds& bounds);

}  // namespace stabent::cli

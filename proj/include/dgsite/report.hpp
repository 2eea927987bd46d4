#pragma once

#include <string>
#include <vector>

#include "dgsite/metrics.hpp"
#include "dgsite/network.hpp"
#include "dgsite/objective.hpp"
#include "dgsite/powerflow.hpp"
#include "dgsite/scenario.hpp"

namespace dgsite {

// Fixed-decimal formatting with the C locale ('.' separator). Reports use
// kW to 2 decimals, per-unit to 4 decimals and whole USD so rows diff
// directly against published tables; JSON files carry full-precision values.
std::string fixed(double value, int decimals);

std::string timestamp_utc();

void write_voltage_profile_csv(const std::string& path, const PowerFlowSolution& sol);

void write_loadflow_json(const std::string& path, const NetworkModel& net,
                         const PowerFlowSolution& sol, const VoltageLimits& limits);

void write_ga_convergence_csv(const std::string& path, const std::vector<double>& history);

void write_scenario_result_json(const std::string& path, const ScenarioResult& result,
                                const ObjectiveBreakdown& breakdown, long evaluations);

void write_scenarios_csv(const std::string& path, const MetricSet& base,
                         const std::vector<ScenarioResult>& scenarios, const FinalDesign& final);

void write_scenarios_json(const std::string& path, const MetricSet& base,
                          const std::vector<ScenarioResult>& scenarios, const FinalDesign& final,
                          int s_max, std::uint64_t master_seed);

void write_final_design_json(const std::string& path, const FinalDesign& final,
                             const MetricSet& base);

} // namespace dgsite

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgsite/ga.hpp"
#include "dgsite/objective.hpp"
#include "dgsite/rng.hpp"

namespace dgsite {

// Best design found by one weighted GA run. The stored metrics are exactly
// what re-evaluating (bus, p_dg_kw) through the objective reproduces.
struct ScenarioResult {
    std::string label;
    WeightVector weights;
    std::uint64_t ga_seed = 0;
    int bus = 0;
    double p_dg_kw = 0.0;
    double cost_usd = 0.0;
    double p_loss_kw = 0.0;
    double vdi = 0.0;
    double min_v = 0.0;
    std::vector<double> ga_history;
};

struct FinalDesign {
    int bus = 0;
    double p_dg_kw = 0.0; // arithmetic mean of the contributing sizes
    std::vector<ScenarioResult> contributing;
    ObjectiveBreakdown breakdown; // re-evaluated under balanced weights
    bool converged = false;
    int scenarios_run = 0;
};

struct MultiScenarioOutcome {
    FinalDesign final;
    std::vector<ScenarioResult> scenarios;
};

// The three stakeholder scenarios: loss priority, voltage priority,
// techno-economic balance.
std::array<WeightVector, 3> base_scenarios();

WeightVector balanced_weights(); // (1/3, 1/3, 1/3)

// Balanced weights plus a per-component perturbation of magnitude <= 0.05,
// clamped nonnegative and renormalized.
WeightVector adaptive_weights(Rng& rng);

// Balanced-weight objective value of a (bus, size) pair; used to break ties
// between equally frequent buses.
using BalancedEvaluator = std::function<double(int bus, double p_dg_kw)>;

// Modal bus across the results when its count reaches 2, otherwise nullopt.
// Count ties break to the bus with the lowest mean balanced objective.
std::optional<int> check_convergence(std::span<const ScenarioResult> results,
                                     const BalancedEvaluator& balanced_f);

using ScenarioRunner = std::function<ScenarioResult(int index, const std::string& label,
                                                    const WeightVector& weights,
                                                    std::uint64_t ga_seed)>;
using DesignEvaluator = std::function<ObjectiveBreakdown(const CandidateSolution& cand)>;

// The scenario loop with the optimizer injected, so tests can drive it with
// deterministic stubs. Runs A, B, C then adaptive scenarios, checking
// convergence after every run; never exceeds s_max runs. On exhaustion the
// final design falls back to the modal bus over everything (count >= 1).
MultiScenarioOutcome run_scenario_loop(int s_max, std::uint64_t master_seed,
                                       const ScenarioRunner& runner,
                                       const BalancedEvaluator& balanced_f,
                                       const DesignEvaluator& design_eval);

// Production entry point: each scenario runs the GA with seed
// derive_seed(master_seed, scenario_index).
MultiScenarioOutcome run_multi_scenario(const ObjectiveContext& ctx, const GaConfig& ga_template,
                                        int s_max, std::uint64_t master_seed);

} // namespace dgsite

#include "dgsite/scenario.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "dgsite/common.hpp"

namespace dgsite {

namespace {

// Sub-stream selector so the adaptive-weight draw of a scenario never
// overlaps its GA seed (which is pinned to derive_seed(master, index)).
constexpr std::uint64_t kWeightStream = 1;

// Most frequent bus once its count reaches min_count; count ties break to
// the lowest mean balanced objective, then to the lowest bus id.
std::optional<int> modal_bus(std::span<const ScenarioResult> results, int min_count,
                             const BalancedEvaluator& balanced_f) {
    std::map<int, int> counts;
    for (const auto& r : results) ++counts[r.bus];
    int max_count = 0;
    for (const auto& [bus, count] : counts) max_count = std::max(max_count, count);
    if (max_count < min_count) return std::nullopt;

    std::vector<int> tied;
    for (const auto& [bus, count] : counts)
        if (count == max_count) tied.push_back(bus);
    if (tied.size() == 1) return tied.front();

    int best_bus = tied.front();
    double best_mean = std::numeric_limits<double>::infinity();
    for (int bus : tied) {
        double sum = 0.0;
        int n = 0;
        for (const auto& r : results) {
            if (r.bus != bus) continue;
            sum += balanced_f(r.bus, r.p_dg_kw);
            ++n;
        }
        double mean = sum / n;
        if (mean < best_mean) {
            best_mean = mean;
            best_bus = bus;
        }
    }
    return best_bus;
}

} // namespace

std::array<WeightVector, 3> base_scenarios() {
    return {WeightVector{0.80, 0.10, 0.10}, WeightVector{0.10, 0.80, 0.10},
            WeightVector{0.40, 0.20, 0.40}};
}

WeightVector balanced_weights() { return make_weights(1.0, 1.0, 1.0); }

WeightVector adaptive_weights(Rng& rng) {
    double w[3];
    for (double& component : w)
        component = std::max(0.0, 1.0 / 3.0 + rng.uniform(-0.05, 0.05));
    return make_weights(w[0], w[1], w[2]);
}

std::optional<int> check_convergence(std::span<const ScenarioResult> results,
                                     const BalancedEvaluator& balanced_f) {
    if (results.empty()) throw ValidationError("no scenario results to check");
    return modal_bus(results, 2, balanced_f);
}

MultiScenarioOutcome run_scenario_loop(int s_max, std::uint64_t master_seed,
                                       const ScenarioRunner& runner,
                                       const BalancedEvaluator& balanced_f,
                                       const DesignEvaluator& design_eval) {
    if (s_max < 3) throw ValidationError("s_max must be at least 3");

    const auto bases = base_scenarios();
    MultiScenarioOutcome out;
    std::optional<int> winner;
    for (int s = 1; s <= s_max; ++s) {
        WeightVector weights;
        std::string label;
        if (s <= 3) {
            weights = bases[s - 1];
            label = std::string(1, static_cast<char>('A' + s - 1));
        } else {
            Rng weight_rng(derive_seed(derive_seed(master_seed, s), kWeightStream));
            weights = adaptive_weights(weight_rng);
            label = "Adaptive-" + std::to_string(s);
        }
        out.scenarios.push_back(runner(s, label, weights, derive_seed(master_seed, s)));
        winner = check_convergence(out.scenarios, balanced_f);
        if (winner) break;
    }

    FinalDesign design;
    design.converged = winner.has_value();
    if (!winner) winner = modal_bus(out.scenarios, 1, balanced_f);
    design.bus = *winner;
    design.scenarios_run = static_cast<int>(out.scenarios.size());

    double size_sum = 0.0;
    for (const auto& r : out.scenarios) {
        if (r.bus != design.bus) continue;
        design.contributing.push_back(r);
        size_sum += r.p_dg_kw;
    }
    design.p_dg_kw = size_sum / static_cast<double>(design.contributing.size());
    design.breakdown = design_eval({design.bus, design.p_dg_kw});
    out.final = std::move(design);
    return out;
}

MultiScenarioOutcome run_multi_scenario(const ObjectiveContext& ctx, const GaConfig& ga_template,
                                        int s_max, std::uint64_t master_seed) {
    const auto& candidates = ctx.candidate_buses();
    const WeightVector balanced = balanced_weights();

    ScenarioRunner runner = [&](int, const std::string& label, const WeightVector& weights,
                                std::uint64_t ga_seed) {
        GaConfig cfg = ga_template;
        cfg.seed = ga_seed;
        GaRun run = run_ga(cfg, ctx, weights, candidates);
        ScenarioResult result;
        result.label = label;
        result.weights = weights;
        result.ga_seed = ga_seed;
        result.bus = run.best.bus;
        result.p_dg_kw = run.best.p_dg_kw;
        result.cost_usd = run.best_breakdown.cost_usd;
        result.p_loss_kw = run.best_breakdown.metrics.p_loss_kw;
        result.vdi = run.best_breakdown.metrics.vdi;
        result.min_v = run.best_breakdown.metrics.min_v;
        result.ga_history = run.history;
        return result;
    };
    BalancedEvaluator balanced_f = [&](int bus, double p_dg_kw) {
        return evaluate(ctx, {bus, p_dg_kw}, balanced).f;
    };
    DesignEvaluator design_eval = [&](const CandidateSolution& cand) {
        return evaluate(ctx, cand, balanced);
    };
    return run_scenario_loop(s_max, master_seed, runner, balanced_f, design_eval);
}

} // namespace dgsite

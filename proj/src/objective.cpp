#include "dgsite/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dgsite/common.hpp"

namespace dgsite {

WeightVector make_weights(double w1, double w2, double w3) {
    if (w1 < 0.0 || w2 < 0.0 || w3 < 0.0) throw ValidationError("weights must be nonnegative");
    double sum = w1 + w2 + w3;
    if (!(sum > 0.0)) throw ValidationError("weights must not all be zero");
    return {w1 / sum, w2 / sum, w3 / sum};
}

Baselines compute_baselines(const NetworkModel& net, const EconomicData& econ,
                            double p_dg_max_kw, const SolverSettings& settings) {
    auto sol = solve(net, settings);
    if (!sol.converged) throw ValidationError("base-case power flow did not converge");
    Baselines base;
    base.p_loss0_kw = sol.total_loss_kw;
    base.vdi0 = vdi(sol);
    base.c_max_usd = c_max(econ, p_dg_max_kw);
    if (!(base.p_loss0_kw > 0.0) || !(base.vdi0 > 0.0))
        throw ValidationError("degenerate base case: zero losses or a flat profile cannot "
                              "normalize the objective");
    return base;
}

ObjectiveContext::ObjectiveContext(const NetworkModel& net, const EconomicData& econ,
                                   VoltageLimits limits, SizeBounds bounds,
                                   SolverSettings settings)
    : net_(&net), econ_(&econ), limits_(limits), bounds_(bounds), settings_(settings) {
    if (!(limits_.v_min > 0.0) || !(limits_.v_min < limits_.v_max))
        throw ValidationError("voltage limits must satisfy 0 < v_min < v_max");
    if (bounds_.min_kw < 0.0 || bounds_.min_kw > bounds_.max_kw)
        throw ValidationError("DG size bounds must satisfy 0 <= min <= max");

    for (const auto& bus : net.buses())
        if (bus.id != net.slack_bus()) candidates_.push_back(bus.id);
    std::sort(candidates_.begin(), candidates_.end());
    if (candidates_.empty()) throw ValidationError("network has no candidate buses");
    for (int bus : candidates_)
        if (!econ.land_cost_usd.count(bus))
            throw ValidationError("no land cost for candidate bus " + std::to_string(bus));

    baselines_ = compute_baselines(net, econ, bounds_.max_kw, settings_);
}

ObjectiveBreakdown evaluate(const ObjectiveContext& ctx, const CandidateSolution& cand,
                            const WeightVector& w) {
    if (cand.p_dg_kw < ctx.bounds().min_kw || cand.p_dg_kw > ctx.bounds().max_kw)
        throw std::invalid_argument("DG size " + std::to_string(cand.p_dg_kw) +
                                    " outside the configured bounds");

    auto modified = apply_dg(ctx.net(), cand.bus, cand.p_dg_kw);
    auto sol = solve(modified, ctx.solver());

    ObjectiveBreakdown out;
    out.metrics = collect_metrics(sol, ctx.limits());
    out.cost_usd = investment_cost(ctx.econ(), cand.bus, cand.p_dg_kw);
    out.loss_term = out.metrics.p_loss_kw / ctx.baselines().p_loss0_kw;
    out.vdi_term = out.metrics.vdi / ctx.baselines().vdi0;
    out.cost_term = out.cost_usd / ctx.baselines().c_max_usd;
    out.penalty = out.metrics.penalty;
    out.f = w.w1 * out.loss_term + w.w2 * out.vdi_term + w.w3 * out.cost_term + out.penalty;
    // A diverged solve can produce non-finite terms; the penalty alone is
    // already large enough to order such candidates last.
    if (!std::isfinite(out.f)) out.f = out.penalty;
    return out;
}

} // namespace dgsite

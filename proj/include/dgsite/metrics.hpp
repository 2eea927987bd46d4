#pragma once

#include "dgsite/powerflow.hpp"

namespace dgsite {

struct VoltageLimits {
    double v_min = 0.90; // p.u.
    double v_max = 1.05; // p.u.
};

struct MetricSet {
    double p_loss_kw = 0.0;
    double vdi = 0.0;   // p.u.^2
    double min_v = 0.0; // p.u.
    double penalty = 0.0;
};

// Penalty constants: the offset exceeds any feasible objective value (the
// normalized terms are O(1)); the graded gain orders infeasible candidates
// by total violation.
inline constexpr double kPenaltyOffset = 1e6;
inline constexpr double kPenaltyGain = 1e6;

// Sum of (1 - |V_i|)^2 over all buses, slack included.
double vdi(const PowerFlowSolution& sol);

// 0 when the solve converged and every magnitude is inside the limits;
// otherwise kPenaltyOffset + kPenaltyGain * (total limit violation).
double voltage_penalty(const PowerFlowSolution& sol, const VoltageLimits& limits);

MetricSet collect_metrics(const PowerFlowSolution& sol, const VoltageLimits& limits);

} // namespace dgsite

#include "dgsite/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dgsite {

double vdi(const PowerFlowSolution& sol) {
    double sum = 0.0;
    for (const auto& v : sol.voltages) {
        double dev = 1.0 - std::abs(v);
        sum += dev * dev;
    }
    return sum;
}

double voltage_penalty(const PowerFlowSolution& sol, const VoltageLimits& limits) {
    // Violations over finite magnitudes only; a diverged solve is already
    // penalized through the converged flag.
    double violation = 0.0;
    bool in_limits = true;
    for (const auto& v : sol.voltages) {
        double mag = std::abs(v);
        if (!std::isfinite(mag)) {
            in_limits = false;
            continue;
        }
        double below = limits.v_min - mag;
        double above = mag - limits.v_max;
        double worst = std::max({0.0, below, above});
        if (worst > 0.0) in_limits = false;
        violation += worst;
    }
    if (sol.converged && in_limits) return 0.0;
    return kPenaltyOffset + kPenaltyGain * violation;
}

MetricSet collect_metrics(const PowerFlowSolution& sol, const VoltageLimits& limits) {
    MetricSet m;
    m.p_loss_kw = sol.total_loss_kw;
    m.vdi = vdi(sol);
    double min_v = std::numeric_limits<double>::infinity();
    for (const auto& v : sol.voltages) {
        double mag = std::abs(v);
        if (std::isfinite(mag) && mag < min_v) min_v = mag;
    }
    m.min_v = std::isfinite(min_v) ? min_v : 0.0;
    m.penalty = voltage_penalty(sol, limits);
    return m;
}

} // namespace dgsite

#pragma once

#include <vector>

#include "dgsite/economics.hpp"
#include "dgsite/metrics.hpp"
#include "dgsite/network.hpp"
#include "dgsite/powerflow.hpp"

namespace dgsite {

// Decision vector: connection bus and injection size.
struct CandidateSolution {
    int bus = 0;
    double p_dg_kw = 0.0;
};

struct SizeBounds {
    double min_kw = 0.0;
    double max_kw = 3609.0;
};

// Objective weights for losses, voltage deviation and investment cost.
struct WeightVector {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
};

// Validates nonnegativity and rescales so the components sum to 1.
WeightVector make_weights(double w1, double w2, double w3);

struct Baselines {
    double p_loss0_kw = 0.0;
    double vdi0 = 0.0;
    double c_max_usd = 0.0;
};

struct ObjectiveBreakdown {
    double f = 0.0;
    double loss_term = 0.0;
    double vdi_term = 0.0;
    double cost_term = 0.0;
    double penalty = 0.0;
    MetricSet metrics;
    double cost_usd = 0.0;
};

// No-DG load flow plus the cost normalizer. Rejects degenerate base cases
// (zero losses or a flat profile cannot normalize the objective).
Baselines compute_baselines(const NetworkModel& net, const EconomicData& econ,
                            double p_dg_max_kw, const SolverSettings& settings = {});

// Everything one fitness evaluation needs. Holds non-owning pointers: the
// network and economic data must outlive the context and are never mutated,
// so any number of evaluations may run concurrently.
class ObjectiveContext {
public:
    ObjectiveContext(const NetworkModel& net, const EconomicData& econ, VoltageLimits limits,
                     SizeBounds bounds, SolverSettings settings = {});

    const NetworkModel& net() const { return *net_; }
    const EconomicData& econ() const { return *econ_; }
    const VoltageLimits& limits() const { return limits_; }
    const SizeBounds& bounds() const { return bounds_; }
    const SolverSettings& solver() const { return settings_; }
    const Baselines& baselines() const { return baselines_; }

    // Non-slack bus ids, ascending. All carry a land cost (checked on build).
    const std::vector<int>& candidate_buses() const { return candidates_; }

private:
    const NetworkModel* net_;
    const EconomicData* econ_;
    VoltageLimits limits_;
    SizeBounds bounds_;
    SolverSettings settings_;
    Baselines baselines_;
    std::vector<int> candidates_;
};

// F = w1*(P_loss/P_loss0) + w2*(VDI/VDI0) + w3*(C/C_max) + penalty.
// Infeasible voltages and non-convergence surface through the penalty term.
// Out-of-bounds sizes are a caller bug and throw std::invalid_argument;
// unknown or slack buses throw ValidationError.
ObjectiveBreakdown evaluate(const ObjectiveContext& ctx, const CandidateSolution& cand,
                            const WeightVector& w);

} // namespace dgsite

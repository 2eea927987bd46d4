#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "dgsite/network.hpp"

namespace dgsite {

struct SolverSettings {
    double tolerance = 1e-6; // max per-iteration voltage change, p.u.
    int max_iterations = 100;
};

struct PowerFlowSolution {
    std::vector<int> bus_ids;                           // mirrors NetworkModel::buses()
    std::vector<std::complex<double>> voltages;         // p.u.
    std::vector<std::complex<double>> branch_currents;  // p.u., in the branch from->to direction
    std::vector<double> branch_losses_kw;
    double total_loss_kw = 0.0;
    bool converged = false;
    int iterations = 0;
    double max_mismatch = 0.0; // final voltage-update norm, p.u.
};

// Backward/forward sweep for radial feeders with constant-power loads and a
// flat 1.0 p.u. start. Non-convergence is reported through the flag, not an
// exception. Pure function of its inputs; safe to call concurrently.
PowerFlowSolution solve(const NetworkModel& net, const SolverSettings& settings = {});

// Bus with the lowest voltage magnitude; ties break to the lowest bus id.
std::pair<int, double> min_voltage(const PowerFlowSolution& sol);

// Active power entering the feeder at the slack bus, in kW.
double slack_injection_kw(const NetworkModel& net, const PowerFlowSolution& sol);

} // namespace dgsite

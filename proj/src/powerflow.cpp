#include "dgsite/powerflow.hpp"

#include <cmath>
#include <complex>

#include "dgsite/common.hpp"

namespace dgsite {

namespace {

using Complex = std::complex<double>;

// Load currents for constant-power demands at the present voltages.
void load_currents(const std::vector<Complex>& s_pu, const std::vector<Complex>& voltages,
                   std::vector<Complex>& out) {
    for (std::size_t i = 0; i < s_pu.size(); ++i) out[i] = std::conj(s_pu[i] / voltages[i]);
}

// Aggregate branch currents from the leaves toward the root. `scratch` holds
// the running per-bus sums and is consumed.
void backward_sweep(const TraversalOrder& order, std::vector<Complex>& scratch,
                    std::vector<Complex>& branch_current) {
    for (auto it = order.branches.rbegin(); it != order.branches.rend(); ++it) {
        branch_current[it->branch] = scratch[it->child];
        scratch[it->parent] += scratch[it->child];
    }
}

void forward_sweep(const TraversalOrder& order, const std::vector<Complex>& z_pu,
                   const std::vector<Complex>& branch_current, std::vector<Complex>& voltages) {
    for (const auto& ob : order.branches)
        voltages[ob.child] = voltages[ob.parent] - z_pu[ob.branch] * branch_current[ob.branch];
}

} // namespace

PowerFlowSolution solve(const NetworkModel& net, const SolverSettings& settings) {
    if (settings.tolerance <= 0.0) throw ValidationError("solver tolerance must be positive");
    if (settings.max_iterations < 1) throw ValidationError("max_iterations must be at least 1");

    const auto order = orient_radial(net);
    const auto& buses = net.buses();
    const auto& branches = net.branches();
    const std::size_t n = buses.size();
    const std::size_t m = branches.size();

    const double z_base = net.base_kv() * net.base_kv() / net.base_mva();
    std::vector<Complex> z_pu(m);
    for (std::size_t b = 0; b < m; ++b)
        z_pu[b] = {branches[b].r_ohm / z_base, branches[b].x_ohm / z_base};

    std::vector<Complex> s_pu(n);
    for (std::size_t i = 0; i < n; ++i)
        s_pu[i] = {buses[i].p_load_kw / 1000.0 / net.base_mva(),
                   buses[i].q_load_kvar / 1000.0 / net.base_mva()};

    // Flat start.
    std::vector<Complex> voltages(n, Complex{1.0, 0.0});
    std::vector<Complex> previous(n);
    std::vector<Complex> scratch(n);
    std::vector<Complex> oriented_current(m);

    PowerFlowSolution sol;
    sol.bus_ids.reserve(n);
    for (const auto& bus : buses) sol.bus_ids.push_back(bus.id);

    double mismatch = 0.0;
    for (int iter = 1; iter <= settings.max_iterations; ++iter) {
        previous = voltages;
        load_currents(s_pu, voltages, scratch);
        backward_sweep(order, scratch, oriented_current);
        forward_sweep(order, z_pu, oriented_current, voltages);

        mismatch = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = std::abs(voltages[i] - previous[i]);
            if (!(d <= mismatch)) mismatch = d; // picks up NaN as well
        }
        sol.iterations = iter;
        if (std::isfinite(mismatch) && mismatch < settings.tolerance) {
            sol.converged = true;
            break;
        }
    }
    sol.max_mismatch = mismatch;

    // One extra backward pass so the reported currents are consistent with
    // the final voltages.
    load_currents(s_pu, voltages, scratch);
    backward_sweep(order, scratch, oriented_current);

    sol.voltages = std::move(voltages);
    sol.branch_currents.assign(m, Complex{0.0, 0.0});
    sol.branch_losses_kw.assign(m, 0.0);
    for (const auto& ob : order.branches) {
        // Report the current in the stored from->to direction.
        bool aligned = net.buses()[ob.parent].id == branches[ob.branch].from_bus;
        sol.branch_currents[ob.branch] =
            aligned ? oriented_current[ob.branch] : -oriented_current[ob.branch];
    }
    for (std::size_t b = 0; b < m; ++b) {
        double loss = z_pu[b].real() * std::norm(sol.branch_currents[b]);
        sol.branch_losses_kw[b] = loss * net.base_mva() * 1000.0;
        sol.total_loss_kw += sol.branch_losses_kw[b];
    }
    return sol;
}

std::pair<int, double> min_voltage(const PowerFlowSolution& sol) {
    int best_bus = sol.bus_ids.front();
    double best_v = std::abs(sol.voltages.front());
    for (std::size_t i = 1; i < sol.voltages.size(); ++i) {
        double v = std::abs(sol.voltages[i]);
        if (v < best_v || (v == best_v && sol.bus_ids[i] < best_bus)) {
            best_v = v;
            best_bus = sol.bus_ids[i];
        }
    }
    return {best_bus, best_v};
}

double slack_injection_kw(const NetworkModel& net, const PowerFlowSolution& sol) {
    const int slack_id = net.slack_bus();
    std::complex<double> current{0.0, 0.0};
    for (std::size_t b = 0; b < net.branches().size(); ++b) {
        if (net.branches()[b].from_bus == slack_id) current += sol.branch_currents[b];
        else if (net.branches()[b].to_bus == slack_id) current -= sol.branch_currents[b];
    }
    const auto v_slack = sol.voltages[net.slack_index()];
    return (v_slack * std::conj(current)).real() * net.base_mva() * 1000.0;
}

} // namespace dgsite

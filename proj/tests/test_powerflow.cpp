#include <cmath>
#include <complex>

#include "doctest.h"

#include "dgsite/network.hpp"
#include "dgsite/powerflow.hpp"
#include "dgsite/rng.hpp"
#include "support/reference_solver.hpp"
#include "support/reference_values.hpp"

using namespace dgsite;
namespace ref = testsupport::ref33;

namespace {

NetworkModel two_bus(double p_kw, double q_kvar = 0.0, double r = 0.1, double x = 0.1) {
    return NetworkModel({{1, 0.0, 0.0}, {2, p_kw, q_kvar}}, {{1, 2, r, x}}, 12.66, 100.0, 1);
}

} // namespace

TEST_CASE("base-case 33-bus solution") {
    auto net = builtin_ieee33();
    auto sol = solve(net);
    REQUIRE(sol.converged);
    CHECK(sol.iterations >= 1);
    CHECK(sol.max_mismatch < SolverSettings{}.tolerance);
    CHECK(std::abs(sol.voltages[net.slack_index()]) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(sol.total_loss_kw == doctest::Approx(ref::kBaseLossKw).epsilon(1e-4));

    auto [bus, v] = min_voltage(sol);
    CHECK(bus == ref::kBaseMinBus);
    CHECK(v == doctest::Approx(ref::kBaseMinV).epsilon(1e-5));
    CHECK(v < 0.93);

    double branch_sum = 0.0;
    for (double loss : sol.branch_losses_kw) {
        CHECK(loss >= 0.0);
        branch_sum += loss;
    }
    CHECK(std::abs(branch_sum - sol.total_loss_kw) < 1e-6);
}

TEST_CASE("no-load network stays flat") {
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    auto base = builtin_ieee33();
    for (const auto& bus : base.buses()) buses.push_back({bus.id, 0.0, 0.0});
    branches = base.branches();
    NetworkModel net(std::move(buses), std::move(branches), 12.66, 100.0, 1);

    auto sol = solve(net);
    REQUIRE(sol.converged);
    CHECK(sol.iterations == 1);
    CHECK(sol.total_loss_kw == 0.0);
    for (const auto& v : sol.voltages) CHECK(std::abs(v) == 1.0);
    auto [bus, vmin] = min_voltage(sol);
    CHECK(bus == 1); // exact tie everywhere resolves to the lowest id
    CHECK(vmin == 1.0);
}

TEST_CASE("single-line solution matches the closed form") {
    auto net = two_bus(100.0);
    auto sol = solve(net, {1e-9, 100});
    REQUIRE(sol.converged);

    // independent route: receiving-end magnitude from the biquadratic
    //   v^4 + (2(Pr+Qx) - 1)v^2 + (P^2+Q^2)(r^2+x^2) = 0   (per unit)
    const double z_base = 12.66 * 12.66 / 100.0;
    const double r = 0.1 / z_base, x = 0.1 / z_base;
    const double p = 0.1 / 100.0, q = 0.0;
    const double b = 2.0 * (p * r + q * x) - 1.0;
    const double c = (p * p + q * q) * (r * r + x * x);
    const double v2 = std::sqrt((-b + std::sqrt(b * b - 4.0 * c)) / 2.0);

    CHECK(std::abs(sol.voltages[1]) == doctest::Approx(v2).epsilon(1e-10));
    CHECK(std::abs(sol.voltages[1] - std::complex<double>{ref::kTwoBusVreal, ref::kTwoBusVimag}) <
          1e-6);
    CHECK(std::abs(sol.voltages[1]) == doctest::Approx(ref::kTwoBusVmag).epsilon(1e-9));
    CHECK(sol.total_loss_kw == doctest::Approx(ref::kTwoBusLossKw).epsilon(1e-6));
}

TEST_CASE("power balance at the slack bus") {
    auto net = builtin_ieee33();
    SUBCASE("base case") {
        auto sol = solve(net);
        REQUIRE(sol.converged);
        CHECK(std::abs(slack_injection_kw(net, sol) - (net.total_p_load_kw() + sol.total_loss_kw)) <
              0.01);
    }
    SUBCASE("with reverse flow at the DG bus") {
        for (auto [bus, kw] : {std::pair{14, 1097.7}, {30, 3609.0}, {18, 2500.0}}) {
            auto modified = apply_dg(net, bus, kw);
            auto sol = solve(modified);
            REQUIRE(sol.converged);
            CHECK(std::abs(slack_injection_kw(modified, sol) -
                           (modified.total_p_load_kw() + sol.total_loss_kw)) < 0.01);
        }
    }
}

TEST_CASE("sweep agrees with the admittance reference on random feeders") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        auto net = testsupport::random_radial_feeder(rng);
        auto sweep = solve(net, {1e-12, 500});
        REQUIRE(sweep.converged);
        auto reference = testsupport::solve_ybus_reference(net);
        for (std::size_t i = 0; i < reference.size(); ++i)
            CHECK(std::abs(sweep.voltages[i] - reference[i]) <= 1e-6);
    }
}

TEST_CASE("identical inputs give bit-identical solutions") {
    auto net = builtin_ieee33();
    auto a = solve(net);
    auto b = solve(net);
    REQUIRE(a.voltages.size() == b.voltages.size());
    for (std::size_t i = 0; i < a.voltages.size(); ++i) CHECK(a.voltages[i] == b.voltages[i]);
    CHECK(a.total_loss_kw == b.total_loss_kw);
    CHECK(a.iterations == b.iterations);
    CHECK(a.max_mismatch == b.max_mismatch);
}

TEST_CASE("overload is reported as non-convergence") {
    auto net = two_bus(500000.0, 200000.0); // far beyond the line's deliverable power
    auto sol = solve(net);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == SolverSettings{}.max_iterations);
}

TEST_CASE("min_voltage breaks ties toward the lowest id") {
    PowerFlowSolution sol;
    sol.bus_ids = {3, 1, 2};
    sol.voltages = {{0.95, 0.0}, {0.97, 0.0}, {0.95, 0.0}};
    auto [bus, v] = min_voltage(sol);
    CHECK(bus == 2);
    CHECK(v == doctest::Approx(0.95));
}

TEST_CASE("solver settings are validated") {
    auto net = builtin_ieee33();
    CHECK_THROWS(solve(net, {0.0, 100}));
    CHECK_THROWS(solve(net, {1e-6, 0}));
}

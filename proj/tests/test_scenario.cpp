#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "dgsite/common.hpp"
#include "dgsite/scenario.hpp"

using namespace dgsite;

namespace {

std::vector<ScenarioResult> results_with_buses(const std::vector<int>& buses) {
    std::vector<ScenarioResult> results;
    for (std::size_t i = 0; i < buses.size(); ++i) {
        ScenarioResult r;
        r.label = "S" + std::to_string(i + 1);
        r.bus = buses[i];
        r.p_dg_kw = 1000.0 + static_cast<double>(i);
        results.push_back(r);
    }
    return results;
}

double no_ties_expected(int, double) {
    throw std::logic_error("tie-break evaluator must not be called");
}

} // namespace

TEST_CASE("base_scenarios carry the three stakeholder weightings") {
    auto bases = base_scenarios();
    CHECK(bases[0].w1 == 0.80);
    CHECK(bases[0].w2 == 0.10);
    CHECK(bases[0].w3 == 0.10);
    CHECK(bases[1].w1 == 0.10);
    CHECK(bases[1].w2 == 0.80);
    CHECK(bases[1].w3 == 0.10);
    CHECK(bases[2].w1 == 0.40);
    CHECK(bases[2].w2 == 0.20);
    CHECK(bases[2].w3 == 0.40);
    for (const auto& w : bases) CHECK(std::abs(w.w1 + w.w2 + w.w3 - 1.0) < 1e-12);
}

TEST_CASE("adaptive_weights") {
    SUBCASE("seeded draws are reproducible") {
        Rng a(99), b(99);
        for (int trial = 0; trial < 5; ++trial) {
            auto wa = adaptive_weights(a);
            auto wb = adaptive_weights(b);
            CHECK(wa.w1 == wb.w1);
            CHECK(wa.w2 == wb.w2);
            CHECK(wa.w3 == wb.w3);
        }
    }
    SUBCASE("perturbation stays near balanced") {
        Rng rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            auto w = adaptive_weights(rng);
            for (double component : {w.w1, w.w2, w.w3}) {
                CHECK(component >= (1.0 / 3.0 - 0.05) / 1.15);
                CHECK(component <= (1.0 / 3.0 + 0.05) / 0.85);
            }
            CHECK(std::abs(w.w1 + w.w2 + w.w3 - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("check_convergence") {
    SUBCASE("mode of two fires") {
        auto results = results_with_buses({7, 11, 15, 14, 14});
        auto winner = check_convergence(results, no_ties_expected);
        REQUIRE(winner.has_value());
        CHECK(*winner == 14);
    }
    SUBCASE("all distinct does not fire") {
        auto results = results_with_buses({7, 11, 15});
        CHECK_FALSE(check_convergence(results, no_ties_expected).has_value());
    }
    SUBCASE("an immediate repeat fires") {
        auto results = results_with_buses({7, 7});
        auto winner = check_convergence(results, no_ties_expected);
        REQUIRE(winner.has_value());
        CHECK(*winner == 7);
    }
    SUBCASE("count ties break to the lowest mean balanced objective") {
        auto results = results_with_buses({7, 7, 11, 11});
        auto favors_11 = [](int bus, double) { return bus == 11 ? 0.5 : 0.9; };
        auto favors_7 = [](int bus, double) { return bus == 7 ? 0.5 : 0.9; };
        CHECK(*check_convergence(results, favors_11) == 11);
        CHECK(*check_convergence(results, favors_7) == 7);
    }
    SUBCASE("empty input is rejected") {
        std::vector<ScenarioResult> none;
        CHECK_THROWS_AS(check_convergence(none, no_ties_expected), ValidationError);
    }
}

TEST_CASE("run_scenario_loop with stubbed optimizers") {
    auto design_stub = [](const CandidateSolution& cand) {
        ObjectiveBreakdown b;
        b.f = 0.1;
        b.cost_usd = cand.p_dg_kw; // traceable
        return b;
    };

    SUBCASE("stops as soon as a bus repeats") {
        auto runner = [](int, const std::string& label, const WeightVector& w, std::uint64_t) {
            ScenarioResult r;
            r.label = label;
            r.weights = w;
            r.bus = 5;
            r.p_dg_kw = 1000.0;
            return r;
        };
        auto outcome = run_scenario_loop(10, 1, runner, no_ties_expected, design_stub);
        CHECK(outcome.final.converged);
        CHECK(outcome.final.scenarios_run == 2);
        CHECK(outcome.scenarios.size() == 2);
        CHECK(outcome.final.bus == 5);
        CHECK(outcome.final.contributing.size() == 2);
        CHECK(outcome.scenarios[0].label == "A");
        CHECK(outcome.scenarios[1].label == "B");
    }

    SUBCASE("published sequence: convergence on the fifth scenario") {
        const std::vector<int> buses{7, 11, 15, 14, 14};
        const std::vector<double> sizes{2229.0, 2229.0, 755.9, 1082.1, 1113.2};
        auto runner = [&](int index, const std::string& label, const WeightVector& w,
                          std::uint64_t) {
            ScenarioResult r;
            r.label = label;
            r.weights = w;
            r.bus = buses[index - 1];
            r.p_dg_kw = sizes[index - 1];
            return r;
        };
        auto outcome = run_scenario_loop(10, 1, runner, no_ties_expected, design_stub);
        CHECK(outcome.final.converged);
        CHECK(outcome.final.scenarios_run == 5);
        CHECK(outcome.final.bus == 14);
        REQUIRE(outcome.final.contributing.size() == 2);
        CHECK(outcome.final.p_dg_kw ==
              doctest::Approx((1082.1 + 1113.2) / 2.0).epsilon(1e-12));
        CHECK(std::abs(outcome.final.p_dg_kw - 1097.65) < 1097.65 * 1e-9);
        CHECK(outcome.scenarios[3].label == "Adaptive-4");
        CHECK(outcome.scenarios[4].label == "Adaptive-5");
        // rows 1-3 always carry the stakeholder weights
        auto bases = base_scenarios();
        for (int s = 0; s < 3; ++s) {
            CHECK(outcome.scenarios[s].weights.w1 == bases[s].w1);
            CHECK(outcome.scenarios[s].weights.w2 == bases[s].w2);
            CHECK(outcome.scenarios[s].weights.w3 == bases[s].w3);
        }
    }

    SUBCASE("exhaustion returns the tie-broken mode and converged=false") {
        auto runner = [](int index, const std::string& label, const WeightVector& w,
                         std::uint64_t) {
            ScenarioResult r;
            r.label = label;
            r.weights = w;
            r.bus = 100 + index; // never repeats
            r.p_dg_kw = 10.0 * index;
            return r;
        };
        auto pick_lowest_f = [](int bus, double) { return bus == 102 ? 0.0 : 1.0; };
        auto outcome = run_scenario_loop(3, 1, runner, pick_lowest_f, design_stub);
        CHECK_FALSE(outcome.final.converged);
        CHECK(outcome.final.scenarios_run == 3);
        CHECK(outcome.scenarios.size() == 3);
        CHECK(outcome.final.bus == 102);
        CHECK(outcome.final.contributing.size() == 1);
    }

    SUBCASE("never exceeds s_max") {
        for (int s_max = 3; s_max <= 8; ++s_max) {
            int runs = 0;
            auto runner = [&](int index, const std::string& label, const WeightVector& w,
                              std::uint64_t) {
                ++runs;
                ScenarioResult r;
                r.label = label;
                r.weights = w;
                r.bus = 100 + index;
                return r;
            };
            auto balanced = [](int, double) { return 1.0; };
            auto outcome = run_scenario_loop(s_max, 1, runner, balanced, design_stub);
            CHECK(runs == s_max);
            CHECK(outcome.final.scenarios_run == s_max);
        }
    }

    SUBCASE("s_max below the three base scenarios is rejected") {
        auto runner = [](int, const std::string& label, const WeightVector& w, std::uint64_t) {
            ScenarioResult r;
            r.label = label;
            r.weights = w;
            r.bus = 2;
            return r;
        };
        CHECK_THROWS_AS(run_scenario_loop(2, 1, runner, no_ties_expected, design_stub),
                        ValidationError);
    }

    SUBCASE("ga seeds derive from the master seed and the scenario index") {
        std::vector<std::uint64_t> seeds;
        auto runner = [&](int, const std::string& label, const WeightVector& w,
                          std::uint64_t seed) {
            seeds.push_back(seed);
            ScenarioResult r;
            r.label = label;
            r.weights = w;
            r.bus = 100 + static_cast<int>(seeds.size()); // never converges
            return r;
        };
        auto balanced = [](int, double) { return 1.0; };
        run_scenario_loop(4, 42, runner, balanced, design_stub);
        REQUIRE(seeds.size() == 4);
        for (int s = 1; s <= 4; ++s) CHECK(seeds[s - 1] == derive_seed(42, s));
    }
}

TEST_CASE("run_multi_scenario on the embedded feeder") {
    auto net = builtin_ieee33();
    auto econ = default_land_costs(1);
    ObjectiveContext ctx(net, econ, VoltageLimits{}, SizeBounds{});
    GaConfig ga;
    ga.population_size = 10;
    ga.iterations = 5;

    auto a = run_multi_scenario(ctx, ga, 6, 2024);
    auto b = run_multi_scenario(ctx, ga, 6, 2024);

    SUBCASE("fixed master seed reproduces the whole table") {
        REQUIRE(a.scenarios.size() == b.scenarios.size());
        for (std::size_t s = 0; s < a.scenarios.size(); ++s) {
            CHECK(a.scenarios[s].label == b.scenarios[s].label);
            CHECK(a.scenarios[s].bus == b.scenarios[s].bus);
            CHECK(a.scenarios[s].p_dg_kw == b.scenarios[s].p_dg_kw);
            CHECK(a.scenarios[s].cost_usd == b.scenarios[s].cost_usd);
            CHECK(a.scenarios[s].ga_history == b.scenarios[s].ga_history);
        }
        CHECK(a.final.bus == b.final.bus);
        CHECK(a.final.p_dg_kw == b.final.p_dg_kw);
        CHECK(a.final.converged == b.final.converged);
    }

    SUBCASE("stored metrics re-derive exactly through the objective") {
        for (const auto& r : a.scenarios) {
            auto again = evaluate(ctx, {r.bus, r.p_dg_kw}, r.weights);
            CHECK(again.metrics.p_loss_kw == r.p_loss_kw);
            CHECK(again.metrics.vdi == r.vdi);
            CHECK(again.metrics.min_v == r.min_v);
            CHECK(again.cost_usd == r.cost_usd);
        }
    }

    SUBCASE("final design mean rule and feasibility") {
        double sum = 0.0;
        for (const auto& r : a.final.contributing) sum += r.p_dg_kw;
        CHECK(a.final.p_dg_kw ==
              doctest::Approx(sum / a.final.contributing.size()).epsilon(1e-12));
        CHECK(a.final.breakdown.penalty == 0.0);
        if (a.final.converged) CHECK(a.final.contributing.size() >= 2);
        CHECK(a.final.scenarios_run <= 6);
    }
}

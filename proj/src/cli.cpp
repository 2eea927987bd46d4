#include "dgsite/cli.hpp"

#include <filesystem>
#include <iostream>

#include "dgsite/common.hpp"
#include "dgsite/network.hpp"
#include "dgsite/powerflow.hpp"
#include "dgsite/report.hpp"
#include "dgsite/scenario.hpp"

namespace dgsite {

namespace {

NetworkModel load_configured_network(const RunConfig& cfg) {
    if (!cfg.builtin.empty()) {
        if (cfg.builtin != "ieee33")
            throw ValidationError("unknown builtin network '" + cfg.builtin + "'");
        return builtin_ieee33();
    }
    if (cfg.buses_path.empty() || cfg.branches_path.empty())
        throw ValidationError("either --builtin ieee33 or both --buses and --branches are required");
    std::optional<int> slack;
    if (cfg.slack_bus != 0) slack = cfg.slack_bus;
    return load_network(cfg.buses_path, cfg.branches_path, cfg.base_kv, cfg.base_mva, slack);
}

EconomicData load_configured_economics(const RunConfig& cfg) {
    if (!cfg.economics_path.empty()) return load_economics(cfg.economics_path, cfg.unit_dg_cost);
    auto econ = default_land_costs(cfg.econ_seed);
    econ.unit_dg_cost_usd_per_kw = cfg.unit_dg_cost;
    return econ;
}

std::filesystem::path prepare_out_dir(const RunConfig& cfg) {
    std::filesystem::path dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
    std::filesystem::create_directories(dir);
    return dir;
}

int config_error(const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
}

} // namespace

int cmd_loadflow(const RunConfig& cfg) {
    try {
        auto net = load_configured_network(cfg);
        if (cfg.dg_bus != 0) {
            net = apply_dg(net, cfg.dg_bus, cfg.dg_kw);
        } else if (cfg.dg_kw != 0.0) {
            throw ValidationError("--dg-kw requires --dg-bus");
        }
        auto sol = solve(net);
        auto dir = prepare_out_dir(cfg);
        write_loadflow_json((dir / "loadflow.json").string(), net, sol, cfg.limits);
        write_voltage_profile_csv((dir / "voltage_profile.csv").string(), sol);

        auto [min_bus, min_v] = min_voltage(sol);
        std::cout << "converged: " << (sol.converged ? "yes" : "no")
                  << "  iterations: " << sol.iterations << '\n'
                  << "total losses: " << fixed(sol.total_loss_kw, 2) << " kW\n"
                  << "vdi: " << fixed(vdi(sol), 4) << '\n'
                  << "min voltage: " << fixed(min_v, 4) << " p.u. at bus " << min_bus << '\n';
        return sol.converged ? kExitOk : kExitNoConvergence;
    } catch (const std::exception& e) {
        return config_error(e);
    }
}

int cmd_optimize(const RunConfig& cfg) {
    try {
        if (cfg.weights.size() != 3)
            throw ValidationError("--weights requires exactly three comma-separated values");
        auto weights = make_weights(cfg.weights[0], cfg.weights[1], cfg.weights[2]);

        auto net = load_configured_network(cfg);
        auto econ = load_configured_economics(cfg);
        ObjectiveContext ctx(net, econ, cfg.limits, cfg.dg_bounds);

        GaConfig ga = cfg.ga;
        ga.seed = cfg.seed;
        auto run = run_ga(ga, ctx, weights, ctx.candidate_buses());

        ScenarioResult result;
        result.label = "custom";
        result.weights = weights;
        result.ga_seed = ga.seed;
        result.bus = run.best.bus;
        result.p_dg_kw = run.best.p_dg_kw;
        result.cost_usd = run.best_breakdown.cost_usd;
        result.p_loss_kw = run.best_breakdown.metrics.p_loss_kw;
        result.vdi = run.best_breakdown.metrics.vdi;
        result.min_v = run.best_breakdown.metrics.min_v;
        result.ga_history = run.history;

        auto dir = prepare_out_dir(cfg);
        write_scenario_result_json((dir / "scenario_result.json").string(), result,
                                   run.best_breakdown, run.evaluations);
        write_ga_convergence_csv((dir / "ga_convergence.csv").string(), run.history);

        std::cout << "weights: [" << fixed(weights.w1, 4) << ", " << fixed(weights.w2, 4) << ", "
                  << fixed(weights.w3, 4) << "]\n"
                  << "best: bus " << run.best.bus << ", " << fixed(run.best.p_dg_kw, 2) << " kW, "
                  << fixed(run.best_breakdown.cost_usd, 0) << " USD\n"
                  << "loss: " << fixed(run.best_breakdown.metrics.p_loss_kw, 2)
                  << " kW  vdi: " << fixed(run.best_breakdown.metrics.vdi, 4)
                  << "  min V: " << fixed(run.best_breakdown.metrics.min_v, 4) << " p.u.\n"
                  << "f: " << fixed(run.best_breakdown.f, 6) << "  evaluations: " << run.evaluations
                  << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        return config_error(e);
    }
}

int cmd_scenario(const RunConfig& cfg) {
    try {
        auto net = load_configured_network(cfg);
        auto econ = load_configured_economics(cfg);
        ObjectiveContext ctx(net, econ, cfg.limits, cfg.dg_bounds);

        auto outcome = run_multi_scenario(ctx, cfg.ga, cfg.s_max, cfg.seed);

        auto base_sol = solve(net, ctx.solver());
        auto base = collect_metrics(base_sol, cfg.limits);

        auto dir = prepare_out_dir(cfg);
        write_scenarios_csv((dir / "scenarios.csv").string(), base, outcome.scenarios,
                            outcome.final);
        write_scenarios_json((dir / "scenarios.json").string(), base, outcome.scenarios,
                             outcome.final, cfg.s_max, cfg.seed);
        write_final_design_json((dir / "final_design.json").string(), outcome.final, base);
        for (const auto& r : outcome.scenarios) {
            write_ga_convergence_csv((dir / ("ga_convergence_" + r.label + ".csv")).string(),
                                     r.ga_history);
            auto sol = solve(apply_dg(net, r.bus, r.p_dg_kw), ctx.solver());
            write_voltage_profile_csv((dir / ("voltage_profile_" + r.label + ".csv")).string(),
                                      sol);
        }
        auto final_sol = solve(apply_dg(net, outcome.final.bus, outcome.final.p_dg_kw),
                               ctx.solver());
        write_voltage_profile_csv((dir / "voltage_profile_final.csv").string(), final_sol);

        std::cout << "label  bus  dg_kw    investment  loss_kw  vdi     min_v\n";
        std::cout << "base   -    0.00     0           " << fixed(base.p_loss_kw, 2) << "   "
                  << fixed(base.vdi, 4) << "  " << fixed(base.min_v, 4) << '\n';
        for (const auto& r : outcome.scenarios) {
            std::cout << r.label << "  " << r.bus << "  " << fixed(r.p_dg_kw, 2) << "  "
                      << fixed(r.cost_usd, 0) << "  " << fixed(r.p_loss_kw, 2) << "  "
                      << fixed(r.vdi, 4) << "  " << fixed(r.min_v, 4) << '\n';
        }
        const auto& f = outcome.final;
        std::cout << "final  " << f.bus << "  " << fixed(f.p_dg_kw, 2) << "  "
                  << fixed(f.breakdown.cost_usd, 0) << "  "
                  << fixed(f.breakdown.metrics.p_loss_kw, 2) << "  "
                  << fixed(f.breakdown.metrics.vdi, 4) << "  "
                  << fixed(f.breakdown.metrics.min_v, 4) << '\n';
        std::cout << (f.converged ? "converged" : "not converged") << " after "
                  << f.scenarios_run << " scenario(s)\n";
        return f.converged ? kExitOk : kExitExhausted;
    } catch (const std::exception& e) {
        return config_error(e);
    }
}

} // namespace dgsite

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dgsite/cli.hpp"

namespace {

// Shared flags for every subcommand. The config file uses the same names
// (without the leading dashes) as flat key=value pairs.
void add_common_options(CLI::App* cmd, dgsite::RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path,
                    "Key-value run configuration file; explicit flags win");
    cmd->add_option("--builtin", cfg.builtin, "Embedded network to use (ieee33)");
    cmd->add_option("--buses", cfg.buses_path, "Bus table CSV: bus,p_kw,q_kvar");
    cmd->add_option("--branches", cfg.branches_path, "Branch table CSV: from,to,r_ohm,x_ohm");
    cmd->add_option("--economics", cfg.economics_path, "Land-cost CSV: bus,land_cost_usd");
    cmd->add_option("--base-kv", cfg.base_kv, "Line-to-line base voltage, kV");
    cmd->add_option("--base-mva", cfg.base_mva, "Power base, MVA");
    cmd->add_option("--slack", cfg.slack_bus, "Slack bus id (default: first bus listed)");
    cmd->add_option("--vmin", cfg.limits.v_min, "Lower voltage limit, p.u.");
    cmd->add_option("--vmax", cfg.limits.v_max, "Upper voltage limit, p.u.");
    cmd->add_option("--seed", cfg.seed, "Master seed");
    cmd->add_option("--out", cfg.out_dir, "Output directory for report files");
}

void add_optimizer_options(CLI::App* cmd, dgsite::RunConfig& cfg) {
    cmd->add_option("--dg-min", cfg.dg_bounds.min_kw, "Minimum DG size, kW");
    cmd->add_option("--dg-max", cfg.dg_bounds.max_kw, "Maximum DG size, kW");
    cmd->add_option("--unit-dg-cost", cfg.unit_dg_cost, "Unit DG cost, USD/kW");
    cmd->add_option("--econ-seed", cfg.econ_seed, "Seed for the default land-cost table");
    cmd->add_option("--population", cfg.ga.population_size, "GA population size");
    cmd->add_option("--iterations", cfg.ga.iterations, "GA generations");
    cmd->add_option("--crossover-rate", cfg.ga.crossover_rate, "GA crossover probability");
    cmd->add_option("--mutation-rate", cfg.ga.mutation_rate, "GA mutation probability");
    cmd->add_option("--elites", cfg.ga.elite_count, "GA elite count");
    cmd->add_option("--tournament", cfg.ga.tournament_size, "GA tournament size");
}

std::string trim(const std::string& s) {
    const char* ws = " \t\r";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

bool flag_present(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& arg) {
        return arg == flag || arg.rfind(flag + "=", 0) == 0;
    });
}

// Injects config-file pairs as trailing "--key value" arguments, skipping
// keys the user already passed (flags win) and keys the chosen subcommand
// does not know (one file can serve every subcommand).
std::vector<std::string> apply_config_file(const CLI::App& app, std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;

    const CLI::App* sub = nullptr;
    for (const auto& arg : args) {
        if (arg.empty() || arg.front() == '-') continue;
        for (const auto* candidate : app.get_subcommands({}))
            if (candidate->get_name() == arg) sub = candidate;
        break;
    }
    if (sub == nullptr) return args; // let the parser report the usage error

    std::ifstream file(path);
    if (!file) throw CLI::FileError::Missing(path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::FileError(path + ":" + std::to_string(line_no) + ": expected key=value");
        std::string key = "--" + trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "--config") continue;
        if (sub->get_option_no_throw(key) == nullptr) continue;
        if (flag_present(args, key)) continue;
        args.push_back(key);
        args.push_back(value);
    }
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siting and sizing of a DG-equivalent data-center injection on a radial feeder"};
    app.require_subcommand(1);

    dgsite::RunConfig cfg;
    std::string config_path;

    auto* loadflow = app.add_subcommand("loadflow", "Solve the load flow and report the solution");
    add_common_options(loadflow, cfg, config_path);
    loadflow->add_option("--dg-bus", cfg.dg_bus, "Apply a DG injection at this bus");
    loadflow->add_option("--dg-kw", cfg.dg_kw, "DG injection size, kW");

    auto* optimize = app.add_subcommand("optimize", "Run one GA under a fixed weight vector");
    add_common_options(optimize, cfg, config_path);
    add_optimizer_options(optimize, cfg);
    optimize->add_option("--weights", cfg.weights, "Objective weights w1,w2,w3")
        ->delimiter(',')
        ->expected(3);

    auto* scenario = app.add_subcommand("scenario",
                                        "Multi-scenario run with adaptive weight convergence");
    add_common_options(scenario, cfg, config_path);
    add_optimizer_options(scenario, cfg);
    scenario->add_option("--s-max", cfg.s_max, "Maximum number of scenarios");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config_file(app, std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return dgsite::kExitConfigError;
    }

    if (loadflow->parsed()) return dgsite::cmd_loadflow(cfg);
    if (optimize->parsed()) return dgsite::cmd_optimize(cfg);
    return dgsite::cmd_scenario(cfg);
}

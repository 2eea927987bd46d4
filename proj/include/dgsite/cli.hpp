#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgsite/ga.hpp"
#include "dgsite/metrics.hpp"
#include "dgsite/objective.hpp"

namespace dgsite {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitExhausted = 3;

// One artifact capturing a whole run; populated from the config file plus
// command-line flags (flags win).
struct RunConfig {
    std::string builtin;        // "ieee33" selects the embedded feeder
    std::string buses_path;     // used when builtin is empty
    std::string branches_path;
    std::string economics_path; // empty -> seeded default table
    double base_kv = 12.66;
    double base_mva = 100.0;
    int slack_bus = 0; // 0 = first bus listed (the embedded feeder uses bus 1)
    double unit_dg_cost = 1200.0;
    std::uint64_t econ_seed = 33; // land-cost sampling; independent of `seed`
    VoltageLimits limits;
    SizeBounds dg_bounds;
    GaConfig ga;
    int s_max = 10;
    std::uint64_t seed = 1; // master seed (optimize: the GA seed itself)
    std::string out_dir = ".";

    int dg_bus = 0;   // loadflow: optional injection to apply
    double dg_kw = 0.0;
    std::vector<double> weights; // optimize: w1,w2,w3 before normalization
};

// Solves the configured network (optionally with a DG injection applied) and
// writes loadflow.json plus voltage_profile.csv.
int cmd_loadflow(const RunConfig& cfg);

// One GA run under the given weights; writes scenario_result.json and
// ga_convergence.csv.
int cmd_optimize(const RunConfig& cfg);

// The multi-scenario procedure; writes scenarios.csv/.json,
// final_design.json and per-scenario convergence/voltage-profile CSVs.
int cmd_scenario(const RunConfig& cfg);

} // namespace dgsite

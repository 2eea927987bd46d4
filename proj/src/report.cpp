#include "dgsite/report.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include "json.hpp"

#include "dgsite/common.hpp"

namespace dgsite {

using json = nlohmann::ordered_json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    return out;
}

json breakdown_json(const ObjectiveBreakdown& b) {
    return json{{"f", b.f},
                {"loss_term", b.loss_term},
                {"vdi_term", b.vdi_term},
                {"cost_term", b.cost_term},
                {"penalty", b.penalty}};
}

json scenario_json(const ScenarioResult& r) {
    return json{{"label", r.label},
                {"weights", {r.weights.w1, r.weights.w2, r.weights.w3}},
                {"ga_seed", r.ga_seed},
                {"bus", r.bus},
                {"dg_kw", r.p_dg_kw},
                {"investment_usd", r.cost_usd},
                {"loss_kw", r.p_loss_kw},
                {"vdi", r.vdi},
                {"min_v", r.min_v}};
}

json base_json(const MetricSet& base) {
    return json{{"loss_kw", base.p_loss_kw}, {"vdi", base.vdi}, {"min_v", base.min_v}};
}

json final_json(const FinalDesign& final) {
    json contributing = json::array();
    for (const auto& r : final.contributing) contributing.push_back(r.label);
    return json{{"bus", final.bus},
                {"p_dg_kw", final.p_dg_kw},
                {"converged", final.converged},
                {"scenarios_run", final.scenarios_run},
                {"contributing", contributing},
                {"investment_usd", final.breakdown.cost_usd},
                {"loss_kw", final.breakdown.metrics.p_loss_kw},
                {"vdi", final.breakdown.metrics.vdi},
                {"min_v", final.breakdown.metrics.min_v},
                {"breakdown", breakdown_json(final.breakdown)}};
}

void csv_scenario_row(std::ofstream& out, const ScenarioResult& r) {
    out << r.label << ',' << fixed(r.weights.w1, 4) << ',' << fixed(r.weights.w2, 4) << ','
        << fixed(r.weights.w3, 4) << ',' << r.bus << ',' << fixed(r.p_dg_kw, 2) << ','
        << fixed(r.cost_usd, 0) << ',' << fixed(r.p_loss_kw, 2) << ',' << fixed(r.vdi, 4) << ','
        << fixed(r.min_v, 4) << '\n';
}

} // namespace

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

void write_voltage_profile_csv(const std::string& path, const PowerFlowSolution& sol) {
    auto out = open_out(path);
    out << "bus,v_pu\n";
    for (std::size_t i = 0; i < sol.bus_ids.size(); ++i)
        out << sol.bus_ids[i] << ',' << fixed(std::abs(sol.voltages[i]), 4) << '\n';
}

void write_loadflow_json(const std::string& path, const NetworkModel& net,
                         const PowerFlowSolution& sol, const VoltageLimits& limits) {
    json j;
    j["generated_at"] = timestamp_utc();
    j["base_kv"] = net.base_kv();
    j["base_mva"] = net.base_mva();
    j["slack_bus"] = net.slack_bus();
    j["converged"] = sol.converged;
    j["iterations"] = sol.iterations;
    j["max_mismatch_pu"] = sol.max_mismatch;
    j["total_loss_kw"] = sol.total_loss_kw;
    j["slack_injection_kw"] = slack_injection_kw(net, sol);
    j["vdi"] = vdi(sol);
    auto [min_bus, min_v] = min_voltage(sol);
    j["min_voltage"] = {{"bus", min_bus}, {"v_pu", min_v}};
    j["limits"] = {{"v_min", limits.v_min}, {"v_max", limits.v_max}};

    json buses = json::array();
    for (std::size_t i = 0; i < sol.bus_ids.size(); ++i) {
        buses.push_back({{"bus", sol.bus_ids[i]},
                         {"v_pu", std::abs(sol.voltages[i])},
                         {"angle_deg", std::arg(sol.voltages[i]) * 180.0 / 3.14159265358979323846}});
    }
    j["buses"] = std::move(buses);

    json branches = json::array();
    for (std::size_t b = 0; b < net.branches().size(); ++b) {
        branches.push_back({{"from", net.branches()[b].from_bus},
                            {"to", net.branches()[b].to_bus},
                            {"current_pu", std::abs(sol.branch_currents[b])},
                            {"loss_kw", sol.branch_losses_kw[b]}});
    }
    j["branches"] = std::move(branches);

    open_out(path) << j.dump(2) << '\n';
}

void write_ga_convergence_csv(const std::string& path, const std::vector<double>& history) {
    auto out = open_out(path);
    out << "generation,best_f\n";
    for (std::size_t g = 0; g < history.size(); ++g)
        out << (g + 1) << ',' << fixed(history[g], 6) << '\n';
}

void write_scenario_result_json(const std::string& path, const ScenarioResult& result,
                                const ObjectiveBreakdown& breakdown, long evaluations) {
    json j;
    j["generated_at"] = timestamp_utc();
    j["result"] = scenario_json(result);
    j["breakdown"] = breakdown_json(breakdown);
    j["evaluations"] = evaluations;
    open_out(path) << j.dump(2) << '\n';
}

void write_scenarios_csv(const std::string& path, const MetricSet& base,
                         const std::vector<ScenarioResult>& scenarios, const FinalDesign& final) {
    auto out = open_out(path);
    out << "label,w1,w2,w3,bus,dg_kw,investment_usd,loss_kw,vdi,min_v\n";
    out << "base,,,,-,0.00,0," << fixed(base.p_loss_kw, 2) << ',' << fixed(base.vdi, 4) << ','
        << fixed(base.min_v, 4) << '\n';
    for (const auto& r : scenarios) csv_scenario_row(out, r);
    out << "final,,,," << final.bus << ',' << fixed(final.p_dg_kw, 2) << ','
        << fixed(final.breakdown.cost_usd, 0) << ',' << fixed(final.breakdown.metrics.p_loss_kw, 2)
        << ',' << fixed(final.breakdown.metrics.vdi, 4) << ','
        << fixed(final.breakdown.metrics.min_v, 4) << '\n';
}

void write_scenarios_json(const std::string& path, const MetricSet& base,
                          const std::vector<ScenarioResult>& scenarios, const FinalDesign& final,
                          int s_max, std::uint64_t master_seed) {
    json j;
    j["generated_at"] = timestamp_utc();
    j["master_seed"] = master_seed;
    j["s_max"] = s_max;
    j["converged"] = final.converged;
    j["scenarios_run"] = final.scenarios_run;
    j["base"] = base_json(base);
    json rows = json::array();
    for (const auto& r : scenarios) rows.push_back(scenario_json(r));
    j["scenarios"] = std::move(rows);
    j["final"] = final_json(final);
    open_out(path) << j.dump(2) << '\n';
}

void write_final_design_json(const std::string& path, const FinalDesign& final,
                             const MetricSet& base) {
    json j;
    j["generated_at"] = timestamp_utc();
    j.update(final_json(final));
    j["base"] = base_json(base);
    j["improvement"] = {
        {"loss_reduction_pct",
         100.0 * (base.p_loss_kw - final.breakdown.metrics.p_loss_kw) / base.p_loss_kw},
        {"min_v_before", base.min_v},
        {"min_v_after", final.breakdown.metrics.min_v}};
    open_out(path) << j.dump(2) << '\n';
}

} // namespace dgsite

#include "dgsite/network.hpp"

#include <cstdio>
#include <fstream>
#include <queue>
#include <set>
#include <utility>

#include "dgsite/common.hpp"
#include "dgsite/csv.hpp"

namespace dgsite {

namespace {

// BFS from the slack; throws when the branch graph is not a tree covering
// every bus. Shared by the constructor and orient_radial.
TraversalOrder build_traversal(const std::vector<Bus>& buses, const std::vector<Branch>& branches,
                               const std::unordered_map<int, int>& index, int slack_index) {
    const int n = static_cast<int>(buses.size());
    std::vector<std::vector<std::pair<int, int>>> adjacency(n); // (neighbor bus idx, branch idx)
    for (int b = 0; b < static_cast<int>(branches.size()); ++b) {
        int f = index.at(branches[b].from_bus);
        int t = index.at(branches[b].to_bus);
        adjacency[f].emplace_back(t, b);
        adjacency[t].emplace_back(f, b);
    }

    TraversalOrder order;
    order.parent_bus.assign(n, -1);
    order.parent_branch.assign(n, -1);
    std::vector<bool> visited(n, false);

    std::queue<int> queue;
    queue.push(slack_index);
    visited[slack_index] = true;
    while (!queue.empty()) {
        int bus = queue.front();
        queue.pop();
        order.bus_order.push_back(bus);
        for (auto [next, branch] : adjacency[bus]) {
            if (branch == order.parent_branch[bus]) continue;
            if (visited[next])
                throw ValidationError("network is not radial: bus " +
                                      std::to_string(buses[next].id) + " is reachable twice");
            visited[next] = true;
            order.parent_bus[next] = bus;
            order.parent_branch[next] = branch;
            order.branches.push_back({branch, bus, next});
            queue.push(next);
        }
    }
    if (order.bus_order.size() != buses.size())
        throw ValidationError("network is disconnected: " +
                              std::to_string(buses.size() - order.bus_order.size()) +
                              " bus(es) unreachable from the slack");
    return order;
}

} // namespace

NetworkModel::NetworkModel(std::vector<Bus> buses, std::vector<Branch> branches, double base_kv,
                           double base_mva, int slack_bus)
    : buses_(std::move(buses)),
      branches_(std::move(branches)),
      base_kv_(base_kv),
      base_mva_(base_mva),
      slack_bus_(slack_bus) {
    if (base_kv_ <= 0.0) throw ValidationError("base_kV must be positive");
    if (base_mva_ <= 0.0) throw ValidationError("base_MVA must be positive");
    if (buses_.empty()) throw ValidationError("network has no buses");

    index_.reserve(buses_.size());
    for (int i = 0; i < static_cast<int>(buses_.size()); ++i) {
        if (!index_.emplace(buses_[i].id, i).second)
            throw ValidationError("duplicate bus id " + std::to_string(buses_[i].id));
    }
    auto slack_it = index_.find(slack_bus_);
    if (slack_it == index_.end())
        throw ValidationError("slack bus " + std::to_string(slack_bus_) + " is not in the bus table");
    slack_index_ = slack_it->second;

    if (branches_.size() != buses_.size() - 1)
        throw ValidationError("radial network needs exactly " +
                              std::to_string(buses_.size() - 1) + " branches, got " +
                              std::to_string(branches_.size()));

    std::set<std::pair<int, int>> seen;
    for (const auto& br : branches_) {
        if (br.from_bus == br.to_bus)
            throw ValidationError("branch connects bus " + std::to_string(br.from_bus) +
                                  " to itself");
        if (!index_.count(br.from_bus))
            throw ValidationError("branch references unknown bus " + std::to_string(br.from_bus));
        if (!index_.count(br.to_bus))
            throw ValidationError("branch references unknown bus " + std::to_string(br.to_bus));
        if (br.r_ohm < 0.0 || br.x_ohm < 0.0)
            throw ValidationError("branch " + std::to_string(br.from_bus) + "-" +
                                  std::to_string(br.to_bus) + " has negative impedance");
        if (br.r_ohm == 0.0 && br.x_ohm == 0.0)
            throw ValidationError("branch " + std::to_string(br.from_bus) + "-" +
                                  std::to_string(br.to_bus) + " has zero impedance");
        auto key = std::minmax(br.from_bus, br.to_bus);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate branch " + std::to_string(key.first) + "-" +
                                  std::to_string(key.second));
    }

    build_traversal(buses_, branches_, index_, slack_index_);
}

int NetworkModel::index_of(int bus_id) const {
    auto it = index_.find(bus_id);
    if (it == index_.end()) throw ValidationError("unknown bus " + std::to_string(bus_id));
    return it->second;
}

double NetworkModel::total_p_load_kw() const {
    double total = 0.0;
    for (const auto& bus : buses_) total += bus.p_load_kw;
    return total;
}

double NetworkModel::total_q_load_kvar() const {
    double total = 0.0;
    for (const auto& bus : buses_) total += bus.q_load_kvar;
    return total;
}

TraversalOrder orient_radial(const NetworkModel& net) {
    std::unordered_map<int, int> index;
    for (int i = 0; i < static_cast<int>(net.buses().size()); ++i)
        index.emplace(net.buses()[i].id, i);
    return build_traversal(net.buses(), net.branches(), index, net.slack_index());
}

NetworkModel load_network(const std::string& buses_csv, const std::string& branches_csv,
                          double base_kv, double base_mva, std::optional<int> slack_bus) {
    auto bus_table = csv::read_file(buses_csv, {"bus", "p_kw", "q_kvar"});
    std::vector<Bus> buses;
    buses.reserve(bus_table.rows.size());
    for (std::size_t r = 0; r < bus_table.rows.size(); ++r) {
        const auto& row = bus_table.rows[r];
        auto line = bus_table.line_numbers[r];
        Bus bus;
        bus.id = csv::to_int(row[0], buses_csv, line);
        bus.p_load_kw = csv::to_double(row[1], buses_csv, line);
        bus.q_load_kvar = csv::to_double(row[2], buses_csv, line);
        if (bus.p_load_kw < 0.0 || bus.q_load_kvar < 0.0)
            throw ValidationError(buses_csv + ":" + std::to_string(line) +
                                  ": negative load at bus " + std::to_string(bus.id));
        buses.push_back(bus);
    }
    if (buses.empty()) throw ValidationError(buses_csv + ": no bus rows");

    auto branch_table = csv::read_file(branches_csv, {"from", "to", "r_ohm", "x_ohm"});
    std::vector<Branch> branches;
    branches.reserve(branch_table.rows.size());
    for (std::size_t r = 0; r < branch_table.rows.size(); ++r) {
        const auto& row = branch_table.rows[r];
        auto line = branch_table.line_numbers[r];
        Branch br;
        br.from_bus = csv::to_int(row[0], branches_csv, line);
        br.to_bus = csv::to_int(row[1], branches_csv, line);
        br.r_ohm = csv::to_double(row[2], branches_csv, line);
        br.x_ohm = csv::to_double(row[3], branches_csv, line);
        branches.push_back(br);
    }

    int slack = slack_bus.value_or(buses.front().id);
    NetworkModel net(std::move(buses), std::move(branches), base_kv, base_mva, slack);
    const auto& slack_data = net.buses()[net.slack_index()];
    if (slack_data.p_load_kw != 0.0 || slack_data.q_load_kvar != 0.0)
        throw ValidationError(buses_csv + ": slack bus " + std::to_string(slack) +
                              " must carry zero load");
    return net;
}

void save_network(const NetworkModel& net, const std::string& buses_csv,
                  const std::string& branches_csv) {
    std::ofstream buses(buses_csv);
    if (!buses) throw ParseError(buses_csv + ": cannot open for writing");
    buses << "bus,p_kw,q_kvar\n";
    char line[128];
    for (const auto& bus : net.buses()) {
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n", bus.id, bus.p_load_kw,
                      bus.q_load_kvar);
        buses << line;
    }

    std::ofstream branches(branches_csv);
    if (!branches) throw ParseError(branches_csv + ": cannot open for writing");
    branches << "from,to,r_ohm,x_ohm\n";
    for (const auto& br : net.branches()) {
        std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g\n", br.from_bus, br.to_bus, br.r_ohm,
                      br.x_ohm);
        branches << line;
    }
}

NetworkModel apply_dg(const NetworkModel& net, int bus_id, double p_dg_kw) {
    if (p_dg_kw < 0.0) throw ValidationError("DG size must be nonnegative");
    if (bus_id == net.slack_bus())
        throw ValidationError("DG cannot be placed at the slack bus");
    int idx = net.index_of(bus_id);
    auto buses = net.buses();
    buses[idx].p_load_kw -= p_dg_kw;
    return NetworkModel(std::move(buses), net.branches(), net.base_kv(), net.base_mva(),
                        net.slack_bus());
}

} // namespace dgsite

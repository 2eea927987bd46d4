#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgsite {

struct Bus {
    int id = 0;
    double p_load_kw = 0.0;
    double q_load_kvar = 0.0;
};

struct Branch {
    int from_bus = 0;
    int to_bus = 0;
    double r_ohm = 0.0;
    double x_ohm = 0.0;
};

// Radial feeder model. Immutable after construction and safe to share across
// concurrent evaluations. The constructor validates the structural
// invariants: positive bases, unique bus ids, branch count = bus count - 1,
// no dangling or duplicate branches, and connectivity as a tree rooted at
// the slack bus. Load signs are a data-entry concern checked by the loaders;
// a DG injection may legitimately drive a net load negative.
class NetworkModel {
public:
    NetworkModel(std::vector<Bus> buses, std::vector<Branch> branches,
                 double base_kv, double base_mva, int slack_bus);

    const std::vector<Bus>& buses() const { return buses_; }
    const std::vector<Branch>& branches() const { return branches_; }
    double base_kv() const { return base_kv_; }
    double base_mva() const { return base_mva_; }
    int slack_bus() const { return slack_bus_; }

    // Position of a bus id within buses(); throws ValidationError if unknown.
    int index_of(int bus_id) const;
    int slack_index() const { return slack_index_; }

    double total_p_load_kw() const;
    double total_q_load_kvar() const;

private:
    std::vector<Bus> buses_;
    std::vector<Branch> branches_;
    std::unordered_map<int, int> index_;
    double base_kv_ = 0.0;
    double base_mva_ = 0.0;
    int slack_bus_ = 0;
    int slack_index_ = 0;
};

struct OrientedBranch {
    int branch = 0; // index into NetworkModel::branches()
    int parent = 0; // bus index nearer the slack
    int child = 0;  // bus index farther from the slack
};

// Branches oriented away from the slack in breadth-first order plus per-bus
// parent links (-1 at the slack). Every non-slack bus has exactly one parent.
struct TraversalOrder {
    std::vector<int> bus_order;      // bus indices, slack first
    std::vector<int> parent_bus;     // per bus index
    std::vector<int> parent_branch;  // per bus index
    std::vector<OrientedBranch> branches;
};

TraversalOrder orient_radial(const NetworkModel& net);

// CSV pair: buses.csv (bus,p_kw,q_kvar) and branches.csv (from,to,r_ohm,x_ohm).
// When slack_bus is not given the first listed bus is the slack.
NetworkModel load_network(const std::string& buses_csv, const std::string& branches_csv,
                          double base_kv, double base_mva,
                          std::optional<int> slack_bus = std::nullopt);

void save_network(const NetworkModel& net, const std::string& buses_csv,
                  const std::string& branches_csv);

// The embedded 33-bus test feeder (12.66 kV, slack = bus 1).
NetworkModel builtin_ieee33();

// Unity-power-factor injection modeled as a negative active load at `bus_id`.
// The result may carry a negative net load there (reverse flow); reactive
// load is unchanged.
NetworkModel apply_dg(const NetworkModel& net, int bus_id, double p_dg_kw);

} // namespace dgsite

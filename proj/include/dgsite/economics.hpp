#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace dgsite {

struct EconomicData {
    std::map<int, double> land_cost_usd; // bus id -> site cost
    double unit_dg_cost_usd_per_kw = 1200.0;
};

// C = C_land(bus) + unit cost * size. Throws ValidationError for a bus
// without a land cost entry.
double investment_cost(const EconomicData& econ, int bus_id, double p_dg_kw);

// Seeded land-cost table for buses 2..33 in the 10-40 kUSD range, with the
// urban buses 6 and 30 drawn from the top quartile and the rural bus 18 from
// the bottom quartile. Buses 7, 11, 14 and 15 carry fixed site costs
// (11742, 10617, 16420, 15488 USD) recovered from published investment
// figures, so those cost columns stay reproducible under any seed.
EconomicData default_land_costs(std::uint64_t seed);

// economics.csv with header bus,land_cost_usd.
EconomicData load_economics(const std::string& path, double unit_dg_cost_usd_per_kw = 1200.0);

// Largest attainable investment over the table; normalizes the cost term.
double c_max(const EconomicData& econ, double p_dg_max_kw);

} // namespace dgsite

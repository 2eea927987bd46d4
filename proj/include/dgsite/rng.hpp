#pragma once

#include <cstdint>
#include <random>

namespace dgsite {

// Uniform draws built on the raw mt19937_64 output stream. The standard pins
// the engine output bit-for-bit but not std::uniform_*_distribution, so the
// conversions are done here to keep seeded runs reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [lo, hi], inclusive bounds
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stable sub-seed for a numbered stream, e.g. one GA seed per scenario index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

} // namespace dgsite

#pragma once
#include <cstdint>
#include <random>

namespace cbal {

// Deterministic generator used everywhere in the simulator. Doubles are
// derived from the raw 64-bit stream with the 53-bit ldexp trick so the
// sequence does not depend on libstdc++ distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace cbal

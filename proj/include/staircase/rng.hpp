#pragma once

#include <cstdint>
#include <random>

namespace staircase {

// Deterministic random source. mt19937_64 has a standardized output sequence;
// the bounded draw uses plain modulo instead of std::uniform_int_distribution,
// whose mapping is implementation-defined. Cross-platform reproducibility
// matters here and the modulo bias at these tiny ranges does not.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

    double unit_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace staircase

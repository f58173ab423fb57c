#pragma once

#include <cstdint>
#include <random>

namespace rcw {

/// Seeded generator used by every randomized routine. std::mt19937_64 has a
/// standardized output sequence, and the bounded mapping below is fixed-width
/// multiply-shift, so identical seeds reproduce identical streams on every
/// platform and standard library. Reports name this generator "mt19937_64".
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform value in [0, bound). bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        // Multiply-shift; bias is < 2^-64 per draw, irrelevant at desk scale
        // and, unlike std::uniform_int_distribution, identical everywhere.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    bool coin() { return next() & 1ULL; }

    static constexpr const char* name() { return "mt19937_64"; }

private:
    std::mt19937_64 engine_;
};

}  // namespace rcw

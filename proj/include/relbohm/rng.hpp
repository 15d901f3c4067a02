#pragma once

#include <cstdint>

namespace relbohm {

// splitmix64; used both as a stream-key mixer and as the generator core.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-record random stream. Streams are keyed by
// (seed, tag, a, b) so every (site, plate) pair gets an independent
// generator and parallel evaluation order cannot change any draw.
// Satisfies UniformRandomBitGenerator, so std:: distributions apply.
class StreamRng {
public:
    using result_type = uint64_t;

    StreamRng(uint64_t seed, uint64_t tag, uint64_t a = 0, uint64_t b = 0) {
        uint64_t s = seed;
        state_ = splitmix64(s);
        s = state_ ^ (0x517cc1b727220a95ULL * (tag + 1));
        state_ = splitmix64(s);
        s = state_ ^ (0x2545f4914f6cdd1dULL * (a + 1));
        state_ = splitmix64(s);
        s = state_ ^ (0x9e3779b97f4a7c15ULL * (b + 1));
        state_ = splitmix64(s);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return splitmix64(state_); }

private:
    uint64_t state_;
};

// Stream tags; one per independent noise purpose.
enum class RngTag : uint64_t {
    kPhaseWalk = 1,
    kShotNoise = 2,
    kCalibration = 3,
};

}  // namespace relbohm

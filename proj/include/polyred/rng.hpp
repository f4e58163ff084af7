#pragma once

#include <cstdint>

namespace polyred {

// SplitMix64 finalizer. Used both as the per-trial key derivation and as the
// step function of TrialRng, so a (seed, trial index) pair fully determines
// the trial's random stream independent of scheduling or worker count.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: state derived from (seed, stream) only.
// Not cryptographic; statistical quality is SplitMix64's, which is plenty
// for coefficient sampling.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t stream)
        : state_(mix64(seed ^ mix64(stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL))) {}

    explicit TrialRng(uint64_t seed) : TrialRng(seed, 0) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n), n >= 1 (Lemire rejection).
    // Exact law, platform-independent.
    uint64_t below(uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            const uint64_t t = (0 - n) % n; // 2^64 mod n
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    // Fair coin.
    bool coin() { return (next() & 1) != 0; }

    // Bernoulli with probability 1/n, exact.
    bool one_in(uint64_t n) { return below(n) == 0; }

private:
    uint64_t state_;
};

} // namespace polyred

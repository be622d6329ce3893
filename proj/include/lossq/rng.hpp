#pragma once

#include <cstdint>
#include <random>

namespace lossq {

// splitmix64 finalizer; used to turn (seed, index...) tuples into
// statistically independent stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Reproducible source of uniform variates. All randomness in the library
// flows through explicitly passed RandomStream handles; concurrent code
// derives one stream per replication so results do not depend on the
// number of worker threads.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    static RandomStream derive(std::uint64_t seed, std::uint64_t a) {
        return RandomStream(mix64(seed) ^ mix64(a ^ 0x517cc1b727220a95ULL));
    }
    static RandomStream derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        return RandomStream(mix64(mix64(seed) ^ mix64(a ^ 0x517cc1b727220a95ULL)) ^
                            mix64(b ^ 0x2545f4914f6cdd1dULL));
    }

    // Uniform on the open interval (0,1); never returns 0 or 1, so logs
    // and inversions are always finite.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace lossq

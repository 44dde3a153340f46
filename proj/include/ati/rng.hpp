#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ati {

// Seeded random stream with portable derived draws. The std:: distribution
// objects are implementation-defined, so every transform lives here; identical
// seeds then give identical draw sequences on any standard mt19937_64.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform in [0,1) with 53-bit resolution
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), n >= 1
    uint64_t uniform_int(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    // standard normal, Box-Muller cosine branch (two uniforms per draw)
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent per-stream seeds from one
// master seed so the capture, oracle and bandit streams cannot desynchronize
// each other across run modes.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ati

#pragma once

#include <cstdint>
#include <random>

namespace spc {

/// Independent stream identifiers mixed into derived seeds.
enum class Stream : std::uint64_t {
    brownian = 0x42726f776e69616eULL,
    noise = 0x4e6f697365000000ULL,
    bridge = 0x4272696467650000ULL,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the `index`-th member of a stream. Pure in its arguments, so ensemble
/// members can be generated in any order.
std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index);

/// 64-bit Mersenne Twister with portable uniform/normal transforms. The standard
/// distributions are implementation-defined, so they are not used here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform on [-1, 1].
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
    /// Standard normal via Box-Muller; the second variate is cached.
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace spc

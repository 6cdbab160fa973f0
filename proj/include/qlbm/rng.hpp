#pragma once

#include <cstdint>
#include <limits>

namespace qlbm {

// SplitMix64 finalizer. Counter-mode use (mix64 of base + k*GOLDEN) is the
// standard SplitMix64 stream starting at `base`.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stateless keyed stream: every (seed, stream id) pair addresses an
// independent sequence, so results do not depend on thread scheduling.
// Satisfies UniformRandomBitGenerator for use with std:: distributions.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) : state_(key) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += kGolden;
        return mix64(state_);
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Domain-separated stream keys. Tags keep the per-shot, per-node, and
// presampling streams disjoint for any one seed.
namespace stream {
constexpr std::uint64_t kShot = 0x73686F74ull;        // per-shot sampling
constexpr std::uint64_t kTree = 0x74726565ull;        // ensemble branch tree
constexpr std::uint64_t kInstructions = 0x696E7374ull; // hybrid presampling
constexpr std::uint64_t kHybrid = 0x68796272ull;      // hybrid in-circuit draws
} // namespace stream

inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t tag,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t k = mix64(seed + kGolden * tag);
    k = mix64(k + kGolden * a);
    return mix64(k + kGolden * b);
}

// Child key for branch-tree nodes; `code` encodes the branch taken.
inline std::uint64_t child_key(std::uint64_t parent, std::uint64_t code) {
    return mix64(parent + kGolden * (code + 1));
}

} // namespace qlbm

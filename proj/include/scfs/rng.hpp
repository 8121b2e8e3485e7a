#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace scfs {

// Counter-free splittable RNG. Every consumer derives its own stream from
// (seed, path...) so work can be reordered or parallelized without changing
// any draw. One u64 of state keeps checkpoints trivial.
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(uint64_t state) : state_(state) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97f4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // One draw per call (Box-Muller, cosine branch; the sine mate is dropped
    // so the stream position does not depend on call parity).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Integer in [0, n).
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    uint64_t state() const { return state_; }

private:
    uint64_t state_ = 0;
};

inline uint64_t mix_key(uint64_t a, uint64_t b) {
    uint64_t z = a ^ (b + 0x9E3779B97f4A7C15ull + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stream for (seed, path...). Identical paths give identical streams.
inline RngStream derive_stream(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t s = mix_key(seed, 0x5CF5C5F5u);
    for (uint64_t k : path) s = mix_key(s, k);
    return RngStream(s);
}

// Tags for common stream families, so call sites don't collide by accident.
namespace stream_tag {
constexpr uint64_t init = 0x11u;
constexpr uint64_t view = 0x22u;
constexpr uint64_t shuffle = 0x33u;
constexpr uint64_t dataset = 0x44u;
constexpr uint64_t probe = 0x55u;
} // namespace stream_tag

} // namespace scfs

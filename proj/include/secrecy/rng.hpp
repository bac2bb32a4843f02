#pragma once

#include <cstdint>
#include <random>

namespace secrecy {

// Seed + substream selector. Identical (seed, stream_id) pairs reproduce
// identical draws bit-for-bit on every platform (mt19937_64 output is
// specified by the standard; doubles are derived from raw 64-bit words).
struct RandomStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    RandomStream with_stream(std::uint64_t id) const { return {seed, id}; }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

class Engine {
  public:
    explicit Engine(RandomStream s) {
        std::uint64_t st = s.seed;
        std::uint64_t a = detail::splitmix64(st);
        st ^= 0xA3EC647659359ACDULL * (s.stream_id + 1);
        std::uint64_t b = detail::splitmix64(st);
        gen_.seed(a ^ (b + 0x9E3779B97F4A7C15ULL));
    }

    // uniform on [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace secrecy

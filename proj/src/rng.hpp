#ifndef NETPERTURB_RNG_HPP
#define NETPERTURB_RNG_HPP

#include <cstdint>
#include <random>

namespace netperturb {

// splitmix64 step (Vigna's public-domain mixer). Used both to expand seeds
// and to derive independent per-task seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed derivation: hash of (master, stream, a, b). Every
// realization / grid cell gets its own stream so results do not depend on
// scheduling order or worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= stream + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= a + 0xbf58476d1ce4e5b9ULL;
    h ^= splitmix64(s);
    s ^= b + 0x94d049bb133111ebULL;
    h ^= splitmix64(s);
    return h;
}

// mt19937_64 engine plus hand-rolled distributions. The engine's output
// sequence is pinned by the standard; the std distributions are not, so
// bounded draws are implemented here to keep runs byte-reproducible across
// toolchains.
class rng {
  public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound) via masked rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ULL;
        std::uint64_t range = bound - 1;
        mask >>= __builtin_clzll(range | 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace netperturb

#endif

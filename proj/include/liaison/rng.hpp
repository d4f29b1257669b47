#ifndef LIAISON_RNG_HPP
#define LIAISON_RNG_HPP

#include <cstdint>

namespace liaison {

/// Deterministic 64-bit generator (splitmix64).  Used for every random
/// choice in the library so that a single root seed reproduces a run
/// bit-exactly on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).  n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the distribution exactly uniform
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    /// Child generator for step k of a multi-step process; children of
    /// distinct steps are independent streams of the same root seed.
    Rng child(std::uint64_t k) const {
        Rng mix(state_ ^ (0xa0761d6478bd642fULL * (k + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

} // namespace liaison

#endif

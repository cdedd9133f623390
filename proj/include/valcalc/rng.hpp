#ifndef VALCALC_RNG_HPP
#define VALCALC_RNG_HPP

#include <cstdint>

#include "linalg.hpp"

namespace valcalc {

// splitmix64; self-contained so that streams are identical across standard
// libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar rational(long max_num, long max_den) {
        return Scalar(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Scalar positive_rational(long max_num, long max_den) {
        return Scalar(uniform(1, max_num), uniform(1, max_den));
    }

    Vec point(int dim, long max_num, long max_den) {
        Vec v(dim);
        for (auto& x : v) x = rational(max_num, max_den);
        return v;
    }

    // A substream decorrelated from this one; used to keep concurrent
    // checks deterministic independently of scheduling.
    Rng fork(std::uint64_t salt) const {
        return Rng(state_ ^ (0x9e3779b97f4a7c15ULL * (salt + 0x51ED2701ULL)));
    }

private:
    std::uint64_t state_;
};

} // namespace valcalc

#endif

#include "reconlab/rng.hpp"

#include <gmp.h>

#include "reconlab/error.hpp"

namespace reconlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    require(bound > 0, "empty sampling range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

BigCount Rng::below(const BigCount& bound) {
    require(bound > 0, "empty sampling range");
    if (bound.fits_ulong_p()) return BigCount(static_cast<unsigned long>(below(std::uint64_t{bound.get_ui()})));
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t limbs = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (limbs - 1);
    for (;;) {
        BigCount x = 0;
        for (std::size_t i = 0; i < limbs; ++i) {
            std::uint64_t limb = engine_();
            if (i == 0 && top_bits < 64) limb >>= (64 - top_bits);
            x <<= 64;
            BigCount part;
            mpz_import(part.get_mpz_t(), 1, 1, sizeof(limb), 0, 0, &limb);
            x += part;
        }
        if (x < bound) return x;
    }
}

}  // namespace reconlab

#pragma once

#include <cstdint>
#include <random>

#include "reconlab/numeric.hpp"

namespace reconlab {

/// splitmix64 finalizer. Used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic generator for one (seed, stream) pair. Trial i of an experiment
/// always uses stream i, so results do not depend on how trials are split
/// across worker threads.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) by plain rejection, so the sequence does not
    /// depend on the standard library's distribution classes.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [0, bound) for arbitrary-size bounds.
    BigCount below(const BigCount& bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace reconlab

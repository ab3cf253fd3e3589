#pragma once

#include <cstddef>
#include <cstdint>

namespace reconlab {

/// Enumeration caps. Every exhaustive routine checks its working size against
/// one of these before materializing anything.
struct Limits {
    std::uint64_t ball_words = 10'000'000;      // enumerate_ball / sampling regime switch
    std::uint64_t code_search_words = 1'000'000; // q^n for the A_q(n,d) clique oracle
    std::uint64_t completions = 1'000'000;       // q^|S| in the majority decoders
    std::uint64_t exact_batches = 10'000'000;    // |ball|^N in exact probability mode
    std::uint64_t adversarial_batches = 10'000'000;

    /// Defaults, with every cap replaced by RECONLAB_CAP when that variable is set.
    static Limits from_env();
};

}  // namespace reconlab

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reconlab/limits.hpp"
#include "reconlab/model.hpp"
#include "reconlab/numeric.hpp"
#include "reconlab/rng.hpp"
#include "reconlab/word.hpp"

namespace reconlab {

/// Draws words from the error ball around a fixed center. When the ball fits
/// under the cap it is enumerated once and draws are uniform over its words;
/// otherwise an error pattern is drawn (number of errors weighted by pattern
/// count), which is uniform over patterns but not over words for deletion and
/// insertion.
class BallSampler {
public:
    BallSampler(Word center, ErrorModel model, const Limits& limits = Limits::from_env());

    Word draw(Rng& rng) const;

    SamplingRegime regime() const noexcept { return regime_; }
    const Word& center() const noexcept { return center_; }
    const ErrorModel& model() const noexcept { return model_; }

    /// Sorted ball contents; empty in the pattern regime.
    const std::vector<Word>& ball() const noexcept { return ball_; }

    /// Exact ball size in the enumerated regime, the pattern count otherwise.
    const BigCount& volume() const noexcept { return volume_; }

private:
    Word draw_pattern(Rng& rng) const;

    Word center_;
    ErrorModel model_;
    SamplingRegime regime_;
    std::vector<Word> ball_;
    BigCount volume_;
    // Pattern classes: (erasures or deletions or insertions, substitutions) with
    // the number of patterns in each class.
    std::vector<std::pair<std::size_t, std::size_t>> levels_;
    std::vector<BigCount> level_weights_;
};

/// N channel outputs of x. Multiset draws are i.i.d.; set draws are distinct,
/// obtained by rejection with at most 10^4 retries per slot. The stream index
/// lets trial i of an experiment use its own independent generator.
OutputBatch transmit(const Word& x, const ErrorModel& model, std::size_t N, bool multiset, std::uint64_t seed,
                     std::uint64_t stream = 0, const Limits& limits = Limits::from_env());

/// Same, drawing from a prepared sampler.
OutputBatch transmit(const BallSampler& sampler, std::size_t N, bool multiset, Rng& rng);

/// Every N-subset of the ball around x, in lexicographic order of ball indices.
class AdversarialBatches {
public:
    AdversarialBatches(const Word& x, const ErrorModel& model, std::size_t N,
                       const Limits& limits = Limits::from_env());

    /// Writes the next batch into `out`; false once every subset has been produced.
    bool next(OutputBatch& out);

    const BigCount& count() const noexcept { return count_; }
    const std::vector<Word>& ball() const noexcept { return ball_; }

private:
    ErrorModel model_;
    std::size_t n_;
    unsigned q_;
    std::vector<Word> ball_;
    std::vector<std::size_t> index_;
    BigCount count_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace reconlab

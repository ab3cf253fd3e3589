#include "reconlab/channels.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "reconlab/balls.hpp"
#include "reconlab/error.hpp"

namespace reconlab {

namespace {

constexpr std::size_t kRetriesPerSlot = 10'000;

// k distinct indices from [0, m), ascending.
std::vector<std::size_t> choose_positions(std::size_t m, std::size_t k, Rng& rng) {
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(std::uint64_t{m - i}));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

Symbol other_symbol(Symbol s, unsigned q, Rng& rng) {
    const auto shift = static_cast<Symbol>(1 + rng.below(std::uint64_t{q - 1}));
    return (s + shift) % q;
}

}  // namespace

BallSampler::BallSampler(Word center, ErrorModel model, const Limits& limits)
    : center_(std::move(center)), model_(model) {
    model_.validate();
    require(center_.is_plain_word(), "the transmitted word must be plain");
    require(model_.kind != ErrorKind::Deletion || model_.deletions <= center_.size(),
            "deletion budget exceeds the word length");
    const BigCount bound = ball_size_bound(model_, center_.q(), center_.size());
    if (bound <= BigCount(std::to_string(limits.ball_words))) {
        ball_ = enumerate_ball(BallSpec{model_, center_}, limits.ball_words);
        volume_ = BigCount(static_cast<unsigned long>(ball_.size()));
        regime_ = SamplingRegime::UniformOverBall;
        return;
    }
    regime_ = SamplingRegime::UniformOverPatterns;
    const auto n = static_cast<long long>(center_.size());
    const long long q = center_.q();
    auto add = [&](std::size_t a, std::size_t b, BigCount w) {
        if (w == 0) return;
        levels_.emplace_back(a, b);
        volume_ += w;
        level_weights_.push_back(std::move(w));
    };
    switch (model_.kind) {
        case ErrorKind::Substitution:
            for (std::size_t k = 0; k <= model_.substitutions; ++k) {
                const auto lk = static_cast<long long>(k);
                add(0, k, binom(n, lk) * ipow(q - 1, lk));
            }
            break;
        case ErrorKind::Erasure:
            for (std::size_t k = 0; k <= model_.erasures; ++k) add(k, 0, binom(n, static_cast<long long>(k)));
            break;
        case ErrorKind::ErasureSubstitution:
            for (std::size_t i = 0; i <= model_.erasures; ++i) {
                for (std::size_t j = 0; j <= model_.substitutions; ++j) {
                    const auto li = static_cast<long long>(i);
                    const auto lj = static_cast<long long>(j);
                    add(i, j, binom(n, li) * binom(n - li, lj) * ipow(q - 1, lj));
                }
            }
            break;
        case ErrorKind::Deletion:
            for (std::size_t k = 0; k <= model_.deletions; ++k) add(k, 0, binom(n, static_cast<long long>(k)));
            break;
        case ErrorKind::Insertion:
            for (std::size_t k = 0; k <= model_.insertions; ++k) {
                const auto lk = static_cast<long long>(k);
                add(k, 0, binom(n + lk, lk) * ipow(q, lk));
            }
            break;
    }
}

Word BallSampler::draw(Rng& rng) const {
    if (regime_ == SamplingRegime::UniformOverBall) {
        return ball_[static_cast<std::size_t>(rng.below(std::uint64_t{ball_.size()}))];
    }
    return draw_pattern(rng);
}

Word BallSampler::draw_pattern(Rng& rng) const {
    BigCount pick = rng.below(volume_);
    std::size_t level = 0;
    while (pick >= level_weights_[level]) {
        pick -= level_weights_[level];
        ++level;
    }
    const auto [a, b] = levels_[level];
    const unsigned q = center_.q();
    const std::size_t n = center_.size();
    switch (model_.kind) {
        case ErrorKind::Substitution: {
            Word y = center_;
            for (std::size_t i : choose_positions(n, b, rng)) y.set(i, other_symbol(y[i], q, rng));
            return y;
        }
        case ErrorKind::Erasure:
        case ErrorKind::ErasureSubstitution: {
            Word y = center_;
            const auto erased = choose_positions(n, a, rng);
            std::vector<std::size_t> rest;
            for (std::size_t i = 0, k = 0; i < n; ++i) {
                if (k < erased.size() && erased[k] == i) {
                    ++k;
                } else {
                    rest.push_back(i);
                }
            }
            for (std::size_t k : choose_positions(rest.size(), b, rng)) {
                y.set(rest[k], other_symbol(y[rest[k]], q, rng));
            }
            for (std::size_t i : erased) y.set(i, y.erased());
            return y;
        }
        case ErrorKind::Deletion: {
            const auto gone = choose_positions(n, a, rng);
            std::vector<Symbol> out;
            for (std::size_t i = 0, k = 0; i < n; ++i) {
                if (k < gone.size() && gone[k] == i) {
                    ++k;
                } else {
                    out.push_back(center_[i]);
                }
            }
            return Word(q, std::move(out));
        }
        case ErrorKind::Insertion: {
            const auto slots = choose_positions(n + a, a, rng);
            std::vector<Symbol> out;
            std::size_t src = 0;
            for (std::size_t i = 0, k = 0; i < n + a; ++i) {
                if (k < slots.size() && slots[k] == i) {
                    ++k;
                    out.push_back(static_cast<Symbol>(rng.below(std::uint64_t{q})));
                } else {
                    out.push_back(center_[src++]);
                }
            }
            return Word(q, std::move(out));
        }
    }
    throw InternalError("unhandled error kind");
}

OutputBatch transmit(const BallSampler& sampler, std::size_t N, bool multiset, Rng& rng) {
    OutputBatch batch;
    batch.q = sampler.center().q();
    batch.n = sampler.center().size();
    batch.model = sampler.model();
    batch.multiset = multiset;
    batch.regime = sampler.regime();
    batch.outputs.reserve(N);
    if (multiset) {
        for (std::size_t k = 0; k < N; ++k) batch.outputs.push_back(sampler.draw(rng));
        return batch;
    }
    if (sampler.regime() == SamplingRegime::UniformOverBall) {
        require(N <= sampler.ball().size(), "set semantics need N <= ball volume (" +
                                                std::to_string(sampler.ball().size()) + "), got N = " +
                                                std::to_string(N));
    }
    std::unordered_set<Word, WordHash> seen;
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t tries = 0;
        for (;;) {
            Word y = sampler.draw(rng);
            if (seen.insert(y).second) {
                batch.outputs.push_back(std::move(y));
                break;
            }
            if (++tries == kRetriesPerSlot) {
                throw PreconditionError("could not draw " + std::to_string(N) + " distinct outputs after " +
                                        std::to_string(kRetriesPerSlot) + " retries for slot " +
                                        std::to_string(k + 1));
            }
        }
    }
    return batch;
}

OutputBatch transmit(const Word& x, const ErrorModel& model, std::size_t N, bool multiset, std::uint64_t seed,
                     std::uint64_t stream, const Limits& limits) {
    const BallSampler sampler(x, model, limits);
    Rng rng(seed, stream);
    return transmit(sampler, N, multiset, rng);
}

AdversarialBatches::AdversarialBatches(const Word& x, const ErrorModel& model, std::size_t N, const Limits& limits)
    : model_(model), n_(x.size()), q_(x.q()) {
    model_.validate();
    require(N >= 1, "batches need at least one output");
    ball_ = enumerate_ball(BallSpec{model_, x}, limits.ball_words);
    require(N <= ball_.size(), "N = " + std::to_string(N) + " exceeds the ball volume " +
                                   std::to_string(ball_.size()));
    count_ = binom(static_cast<long long>(ball_.size()), static_cast<long long>(N));
    if (count_ > BigCount(std::to_string(limits.adversarial_batches))) {
        throw CapExceeded("there are " + count_.get_str() + " output sets, above the cap " +
                          std::to_string(limits.adversarial_batches));
    }
    index_.resize(N);
    std::iota(index_.begin(), index_.end(), std::size_t{0});
}

bool AdversarialBatches::next(OutputBatch& out) {
    if (done_) return false;
    if (started_) {
        const std::size_t N = index_.size();
        const std::size_t V = ball_.size();
        std::size_t k = N;
        while (k > 0 && index_[k - 1] == V - N + k - 1) --k;
        if (k == 0) {
            done_ = true;
            return false;
        }
        ++index_[k - 1];
        for (std::size_t j = k; j < N; ++j) index_[j] = index_[j - 1] + 1;
    }
    started_ = true;
    out.q = q_;
    out.n = n_;
    out.model = model_;
    out.multiset = false;
    out.regime = SamplingRegime::Exhaustive;
    out.outputs.clear();
    for (std::size_t i : index_) out.outputs.push_back(ball_[i]);
    return true;
}

}  // namespace reconlab

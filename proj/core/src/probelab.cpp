#include "reconlab/probelab.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "reconlab/balls.hpp"
#include "reconlab/channels.hpp"
#include "reconlab/decoders.hpp"
#include "reconlab/error.hpp"
#include "reconlab/rng.hpp"

namespace reconlab {

namespace {

// Runs body(i) for i in [0, trials) over `jobs` threads, each owning one
// contiguous block, and sums the per-trial counters.
template <typename Counts, typename Body>
Counts run_trials(std::uint64_t trials, unsigned jobs, Body&& body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(trials, 1))));
    std::vector<Counts> partial(jobs);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const std::uint64_t block = (trials + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                const std::uint64_t lo = w * block;
                const std::uint64_t hi = std::min(trials, lo + block);
                for (std::uint64_t i = lo; i < hi; ++i) body(i, partial[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Counts total{};
    for (const Counts& c : partial) total += c;
    return total;
}

struct Tally {
    std::uint64_t hits = 0;
    Tally& operator+=(const Tally& o) {
        hits += o.hits;
        return *this;
    }
};

bool recovers(const OutputBatch& batch, const CodeRef& code, const Word& x, std::uint64_t cap) {
    const DecodeOutcome out = reconstruction_list(batch, code, cap);
    return out.status == DecodeStatus::Unique && out.candidates.front() == x;
}

OutputBatch empty_batch(const Word& x, const ErrorModel& model, SamplingRegime regime) {
    OutputBatch b;
    b.q = x.q();
    b.n = x.size();
    b.model = model;
    b.multiset = true;
    b.regime = regime;
    return b;
}

}  // namespace

ProbEstimate ProbEstimate::from_counts(std::uint64_t successes, std::uint64_t trials) {
    ProbEstimate p;
    p.successes = successes;
    p.trials = trials;
    if (trials > 0) {
        p.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
        p.ci95_halfwidth = 1.96 * std::sqrt(p.p_hat * (1 - p.p_hat) / static_cast<double>(trials));
    }
    return p;
}

ProbEstimate unique_recovery_prob(const Word& x, const ErrorModel& model, std::size_t N, std::uint64_t trials,
                                  std::uint64_t seed, ProbMode mode, const std::optional<CodeRef>& code, unsigned jobs,
                                  const Limits& limits) {
    require(N >= 1, "N must be at least 1");
    const CodeRef c = code.value_or(CodeRef{FullSpace{x.q(), x.size()}});
    require(contains(c, x), "the transmitted word must belong to the code");
    const BallSampler sampler(x, model, limits);

    if (mode == ProbMode::Exact) {
        require(sampler.regime() == SamplingRegime::UniformOverBall, "exact mode needs an enumerable ball");
        const auto& ball = sampler.ball();
        const BigCount total = ipow(static_cast<long long>(ball.size()), static_cast<long long>(N));
        if (total > BigCount(std::to_string(limits.exact_batches))) {
            throw CapExceeded("exact mode needs " + total.get_str() + " ordered batches, above the cap " +
                              std::to_string(limits.exact_batches));
        }
        const std::uint64_t count = to_u64(total);
        const auto V = static_cast<std::uint64_t>(ball.size());
        const Tally hits = run_trials<Tally>(count, jobs, [&](std::uint64_t index, Tally& acc) {
            OutputBatch batch = empty_batch(x, model, SamplingRegime::Exhaustive);
            for (std::size_t k = 0; k < N; ++k) {
                batch.outputs.push_back(ball[static_cast<std::size_t>(index % V)]);
                index /= V;
            }
            if (recovers(batch, c, x, limits.ball_words)) ++acc.hits;
        });
        ProbEstimate p = ProbEstimate::from_counts(hits.hits, count);
        p.exact = Rational(BigCount(std::to_string(hits.hits)), total);
        p.exact->canonicalize();
        p.regime = SamplingRegime::Exhaustive;
        return p;
    }

    require(trials >= 1, "Monte Carlo needs at least one trial");
    const Tally hits = run_trials<Tally>(trials, jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng(seed, i);
        const OutputBatch batch = transmit(sampler, N, true, rng);
        if (recovers(batch, c, x, limits.ball_words)) ++acc.hits;
    });
    ProbEstimate p = ProbEstimate::from_counts(hits.hits, trials);
    p.regime = sampler.regime();
    return p;
}

Rational worked_example_Pprime(unsigned q) {
    require(q >= 2, "alphabet size must be at least 2");
    Rational r(6 * ipow(q - 1, 3), ipow(2 * static_cast<long long>(q) - 1, 3));
    r.canonicalize();
    return r;
}

Rational substitution_pin_prob(std::size_t n, std::size_t t, std::size_t N) {
    require(t >= 1 && t <= n, "pin probability needs 1 <= t <= n");
    require(N >= 1, "N must be at least 1");
    const auto ln = static_cast<long long>(n);
    const auto lt = static_cast<long long>(t);
    const auto lN = static_cast<long long>(N);
    Rational r(binom(ln - 1, lt - 1), binom(ln, lt));
    r.canonicalize();
    Rational out(1);
    for (long long k = 0; k < lN; ++k) out *= r;
    return out;
}

std::vector<QSweepRow> insertion_qsweep(std::size_t n, std::size_t t, std::size_t N, const std::vector<unsigned>& q_list,
                                        std::uint64_t trials, std::uint64_t seed, unsigned jobs, const Limits& limits) {
    require(N >= 2, "the insertion sweep needs N >= 2");
    require(n >= 1 && t >= 1, "the insertion sweep needs n, t >= 1");
    require(trials >= 1, "the insertion sweep needs at least one trial");
    std::vector<QSweepRow> rows;
    for (unsigned q : q_list) {
        require(q >= 2, "alphabet size must be at least 2");
        std::vector<Symbol> xs(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<Symbol>(i % q);
        const Word x(q, std::move(xs));
        const ErrorModel model = ErrorModel::insertion(t);
        const BallSampler sampler(x, model, limits);
        require(sampler.regime() == SamplingRegime::UniformOverBall,
                "the insertion ball at q = " + std::to_string(q) + " exceeds the enumeration cap");
        struct Counts {
            std::uint64_t unique = 0, pair_ok = 0, pair_wrong = 0;
            Counts& operator+=(const Counts& o) {
                unique += o.unique;
                pair_ok += o.pair_ok;
                pair_wrong += o.pair_wrong;
                return *this;
            }
        };
        const FullSpace space{q, n};
        const Counts c = run_trials<Counts>(trials, jobs, [&](std::uint64_t i, Counts& acc) {
            Rng rng(seed, i);
            const OutputBatch batch = transmit(sampler, N, true, rng);
            if (reconstruction_list(batch, space, limits.ball_words).status == DecodeStatus::Unique) ++acc.unique;
            const DecodeOutcome pair = insertion_pair_decode(batch.outputs[0], batch.outputs[1], n);
            if (pair.status == DecodeStatus::Unique) {
                ++(pair.candidates.front() == x ? acc.pair_ok : acc.pair_wrong);
            }
        });
        QSweepRow row;
        row.q = q;
        row.unique = ProbEstimate::from_counts(c.unique, trials);
        row.pair_success = ProbEstimate::from_counts(c.pair_ok, trials);
        row.pair_wrong = c.pair_wrong;
        const double base = 1.0 - static_cast<double>(n + 2 * t - 1) / q;
        row.lower_bound = base <= 0 ? 0.0 : std::pow(base, static_cast<double>(t));
        rows.push_back(row);
    }
    return rows;
}

QInvarianceResult deletion_q_invariance(const Word& x, unsigned q_prime, const ErrorModel& model, std::size_t N,
                                        std::uint64_t trials, std::uint64_t seed, unsigned jobs,
                                        const Limits& limits) {
    require(model.kind == ErrorKind::Deletion || model.kind == ErrorKind::Erasure,
            "q-invariance holds for deletion and erasure models");
    const unsigned q = x.q();
    require(q > x.size(), "q-invariance needs q > n");
    require(q_prime > q, "q-invariance needs q' > q");
    for (Symbol s : x.symbols()) require(s < x.size(), "x must use symbols below n");
    require(trials >= 1, "q-invariance needs at least one trial");

    const Word xp = reinterpret(x, q_prime);
    const BallSampler small(x, model, limits);
    const BallSampler large(xp, model, limits);
    require(small.regime() == SamplingRegime::UniformOverBall && large.regime() == SamplingRegime::UniformOverBall,
            "q-invariance needs enumerable balls");

    QInvarianceResult res;
    res.balls_identical = small.ball().size() == large.ball().size() &&
                          std::equal(small.ball().begin(), small.ball().end(), large.ball().begin(),
                                     [](const Word& a, const Word& b) { return identical(a, b); });

    struct Pair {
        std::uint64_t a = 0, b = 0;
        Pair& operator+=(const Pair& o) {
            a += o.a;
            b += o.b;
            return *this;
        }
    };
    const FullSpace s1{q, x.size()};
    const FullSpace s2{q_prime, x.size()};
    const Pair hits = run_trials<Pair>(trials, jobs, [&](std::uint64_t i, Pair& acc) {
        Rng r1(seed, i);
        Rng r2(seed, i);
        if (recovers(transmit(small, N, true, r1), s1, x, limits.ball_words)) ++acc.a;
        if (recovers(transmit(large, N, true, r2), s2, xp, limits.ball_words)) ++acc.b;
    });
    res.p_q = ProbEstimate::from_counts(hits.a, trials);
    res.p_q_prime = ProbEstimate::from_counts(hits.b, trials);
    return res;
}

}  // namespace reconlab

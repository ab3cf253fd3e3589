#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reconlab/code.hpp"
#include "reconlab/limits.hpp"
#include "reconlab/model.hpp"
#include "reconlab/numeric.hpp"
#include "reconlab/word.hpp"

namespace reconlab {

struct ProbEstimate {
    double p_hat = 0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double ci95_halfwidth = 0;        // 1.96 sqrt(p(1-p)/trials)
    std::optional<Rational> exact;    // set when every ordered batch was enumerated
    SamplingRegime regime = SamplingRegime::UniformOverBall;

    /// Builds an estimate with the Wald half-width.
    static ProbEstimate from_counts(std::uint64_t successes, std::uint64_t trials);
};

enum class ProbMode { MonteCarlo, Exact };

/// P(T(Y) = {x}) for Y made of N i.i.d. uniform draws from the ball around x.
/// Exact mode enumerates all |ball|^N ordered batches. `code` defaults to the
/// whole space. Trial i always uses stream i, so `jobs` does not change results.
ProbEstimate unique_recovery_prob(const Word& x, const ErrorModel& model, std::size_t N, std::uint64_t trials,
                                  std::uint64_t seed, ProbMode mode, const std::optional<CodeRef>& code = std::nullopt,
                                  unsigned jobs = 1, const Limits& limits = Limits::from_env());

/// 6(q-1)^3 / (2q-1)^3.
Rational worked_example_Pprime(unsigned q);

/// (C(n-1, t-1) / C(n, t))^N.
Rational substitution_pin_prob(std::size_t n, std::size_t t, std::size_t N);

struct QSweepRow {
    unsigned q = 0;
    ProbEstimate unique;          // P(|T(Y)| = 1)
    ProbEstimate pair_success;    // insertion_pair_decode on the first two outputs returns x
    std::uint64_t pair_wrong = 0; // Unique answers different from x (must stay 0)
    double lower_bound = 0;       // (1 - (n+2t-1)/q)^t
};

/// Insertion experiments across alphabets. The transmitted word defaults to
/// x_i = i mod q.
std::vector<QSweepRow> insertion_qsweep(std::size_t n, std::size_t t, std::size_t N, const std::vector<unsigned>& q_list,
                                        std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1,
                                        const Limits& limits = Limits::from_env());

struct QInvarianceResult {
    ProbEstimate p_q;
    ProbEstimate p_q_prime;
    bool balls_identical = false;
};

/// Runs the same seeded trials for x over Z_q and over Z_q' (q' > q > n) under a
/// deletion or erasure model, with the whole space as the code.
QInvarianceResult deletion_q_invariance(const Word& x, unsigned q_prime, const ErrorModel& model, std::size_t N,
                                        std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1,
                                        const Limits& limits = Limits::from_env());

}  // namespace reconlab

#pragma once

#include <cstdint>
#include <vector>

#include "reconlab/code.hpp"
#include "reconlab/limits.hpp"
#include "reconlab/model.hpp"
#include "reconlab/numeric.hpp"
#include "reconlab/word.hpp"

namespace reconlab {

struct BallSpec {
    ErrorModel model;
    Word center;
};

/// True when y can be produced from `center` within the model's budgets.
/// Deletion and insertion use subsequence tests; the others are coordinatewise.
/// For the mixed model y need only satisfy #erasures <= t_e and d_e <= t_s, which
/// is the same set whichever order the two error types are applied in.
bool reachable(const Word& center, const Word& y, const ErrorModel& model);

/// Upper bound on the ball size used for cap checks. Exact for substitution,
/// erasure and erasure+substitution; the error-pattern count for deletion and
/// insertion.
BigCount ball_size_bound(const ErrorModel& model, unsigned q, std::size_t n);

/// The ball as a sorted set of distinct words.
std::vector<Word> enumerate_ball(const BallSpec& spec, std::uint64_t cap = Limits{}.ball_words);

/// Words common to every ball; all specs must share the same model.
std::vector<Word> intersection(const std::vector<BallSpec>& specs, std::uint64_t cap = Limits{}.ball_words);
BigCount intersection_size(const std::vector<BallSpec>& specs, std::uint64_t cap = Limits{}.ball_words);

/// Every plain word c in Z_q^n with y in ball(c), sorted.
std::vector<Word> preimage_candidates(const Word& y, const ErrorModel& model, std::size_t n,
                                      std::uint64_t cap = Limits{}.ball_words);

/// T(Y): the codewords from which every output is reachable. For the full space
/// candidates are generated from the preimage of one output, then filtered.
DecodeOutcome reconstruction_list(const OutputBatch& batch, const CodeRef& code,
                                  std::uint64_t cap = Limits{}.ball_words);

/// Length-m supersequences of w (m >= |w|) in canonical leftmost-embedding order.
std::vector<Word> supersequences(const Word& w, std::size_t m, std::uint64_t cap = Limits{}.ball_words);

/// Distinct length-m subsequences of w (m <= |w|).
std::vector<Word> subsequences(const Word& w, std::size_t m);

/// True when `small` is a subsequence of `big` (same alphabet).
bool is_subsequence(const Word& small, const Word& big);

}  // namespace reconlab

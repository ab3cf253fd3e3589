#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reconlab/word.hpp"

namespace reconlab {

enum class ErrorKind { Substitution, Erasure, ErasureSubstitution, Deletion, Insertion };

std::string_view to_string(ErrorKind kind);
ErrorKind parse_error_kind(std::string_view text);

/// Error type plus per-type budgets. Only the budgets that belong to the kind
/// may be nonzero.
struct ErrorModel {
    ErrorKind kind = ErrorKind::Substitution;
    std::size_t substitutions = 0;
    std::size_t erasures = 0;
    std::size_t deletions = 0;
    std::size_t insertions = 0;

    static ErrorModel substitution(std::size_t t) { return {ErrorKind::Substitution, t, 0, 0, 0}; }
    static ErrorModel erasure(std::size_t t) { return {ErrorKind::Erasure, 0, t, 0, 0}; }
    static ErrorModel erasure_substitution(std::size_t t_e, std::size_t t_s) {
        return {ErrorKind::ErasureSubstitution, t_s, t_e, 0, 0};
    }
    static ErrorModel deletion(std::size_t t) { return {ErrorKind::Deletion, 0, 0, t, 0}; }
    static ErrorModel insertion(std::size_t t) { return {ErrorKind::Insertion, 0, 0, 0, t}; }

    /// Throws if a budget unrelated to the kind is set.
    void validate() const;

    /// Smallest and largest output length for a transmitted word of length n.
    std::size_t min_output_length(std::size_t n) const;
    std::size_t max_output_length(std::size_t n) const;

    friend bool operator==(const ErrorModel&, const ErrorModel&) = default;
};

/// Which distribution produced a sampled batch.
enum class SamplingRegime {
    Exhaustive,       // built by hand or by exhaustive enumeration
    UniformOverBall,  // index sampling from the enumerated ball
    UniformOverPatterns  // error-pattern sampling above the enumeration cap
};

std::string_view to_string(SamplingRegime regime);
SamplingRegime parse_sampling_regime(std::string_view text);

/// The channel outputs Y for a transmitted word of length n over Z_q.
struct OutputBatch {
    unsigned q = 2;
    std::size_t n = 0;
    ErrorModel model;
    bool multiset = false;
    std::vector<Word> outputs;
    SamplingRegime regime = SamplingRegime::Exhaustive;

    /// Checks alphabet, output lengths and erasure counts against the model and,
    /// for set semantics, pairwise distinctness.
    void validate() const;

    /// Distinct outputs in sorted order.
    std::vector<Word> distinct_outputs() const;
};

enum class DecodeStatus { Unique, List, Failure };

std::string_view to_string(DecodeStatus status);

/// A candidate list T(Y). Unique holds exactly one candidate; Failure carries a reason
/// and possibly no candidates.
struct DecodeOutcome {
    std::vector<Word> candidates;
    DecodeStatus status = DecodeStatus::Failure;
    std::string reason;

    /// Unique for one candidate, List for several, Failure("no consistent word") for none.
    static DecodeOutcome from_candidates(std::vector<Word> candidates);
    static DecodeOutcome failure(std::string reason);
};

}  // namespace reconlab

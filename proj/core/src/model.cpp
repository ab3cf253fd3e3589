#include "reconlab/model.hpp"

#include <algorithm>

#include "reconlab/error.hpp"

namespace reconlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Substitution: return "substitution";
        case ErrorKind::Erasure: return "erasure";
        case ErrorKind::ErasureSubstitution: return "erasure-substitution";
        case ErrorKind::Deletion: return "deletion";
        case ErrorKind::Insertion: return "insertion";
    }
    return "?";
}

ErrorKind parse_error_kind(std::string_view text) {
    for (auto k : {ErrorKind::Substitution, ErrorKind::Erasure, ErrorKind::ErasureSubstitution,
                   ErrorKind::Deletion, ErrorKind::Insertion}) {
        if (to_string(k) == text) return k;
    }
    throw PreconditionError("unknown error kind '" + std::string(text) + "'");
}

void ErrorModel::validate() const {
    const bool sub_ok = kind == ErrorKind::Substitution || kind == ErrorKind::ErasureSubstitution;
    const bool era_ok = kind == ErrorKind::Erasure || kind == ErrorKind::ErasureSubstitution;
    require(sub_ok || substitutions == 0, "substitution budget set for " + std::string(to_string(kind)));
    require(era_ok || erasures == 0, "erasure budget set for " + std::string(to_string(kind)));
    require(kind == ErrorKind::Deletion || deletions == 0, "deletion budget set for " + std::string(to_string(kind)));
    require(kind == ErrorKind::Insertion || insertions == 0, "insertion budget set for " + std::string(to_string(kind)));
}

std::size_t ErrorModel::min_output_length(std::size_t n) const {
    if (kind == ErrorKind::Deletion) return n - std::min(n, deletions);
    return n;
}

std::size_t ErrorModel::max_output_length(std::size_t n) const {
    if (kind == ErrorKind::Insertion) return n + insertions;
    return n;
}

std::string_view to_string(SamplingRegime regime) {
    switch (regime) {
        case SamplingRegime::Exhaustive: return "exhaustive";
        case SamplingRegime::UniformOverBall: return "uniform-over-ball";
        case SamplingRegime::UniformOverPatterns: return "uniform-over-patterns";
    }
    return "?";
}

SamplingRegime parse_sampling_regime(std::string_view text) {
    for (auto r : {SamplingRegime::Exhaustive, SamplingRegime::UniformOverBall, SamplingRegime::UniformOverPatterns}) {
        if (to_string(r) == text) return r;
    }
    throw PreconditionError("unknown sampling regime '" + std::string(text) + "'");
}

void OutputBatch::validate() const {
    model.validate();
    require(q >= 2, "alphabet size must be at least 2");
    const std::size_t lo = model.min_output_length(n);
    const std::size_t hi = model.max_output_length(n);
    const bool erasures_allowed = model.kind == ErrorKind::Erasure || model.kind == ErrorKind::ErasureSubstitution;
    for (const Word& y : outputs) {
        require(y.q() == q, "output " + to_string(y) + " has the wrong alphabet");
        require(y.size() >= lo && y.size() <= hi,
                "output " + to_string(y) + " has a length inconsistent with the error model");
        require(!y.has_unknown(), "channel outputs never contain unknown symbols");
        if (erasures_allowed) {
            require(y.erasure_count() <= model.erasures, "output " + to_string(y) + " exceeds the erasure budget");
        } else {
            require(!y.has_erasure(), "output " + to_string(y) + " contains erasures under a non-erasure model");
        }
    }
    if (!multiset) {
        auto sorted = outputs;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "set semantics require pairwise distinct outputs");
    }
}

std::vector<Word> OutputBatch::distinct_outputs() const {
    auto sorted = outputs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

std::string_view to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::Unique: return "unique";
        case DecodeStatus::List: return "list";
        case DecodeStatus::Failure: return "failure";
    }
    return "?";
}

DecodeOutcome DecodeOutcome::from_candidates(std::vector<Word> candidates) {
    DecodeOutcome out;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    out.candidates = std::move(candidates);
    if (out.candidates.empty()) {
        out.status = DecodeStatus::Failure;
        out.reason = "no consistent word";
    } else {
        out.status = out.candidates.size() == 1 ? DecodeStatus::Unique : DecodeStatus::List;
    }
    return out;
}

DecodeOutcome DecodeOutcome::failure(std::string reason) {
    DecodeOutcome out;
    out.status = DecodeStatus::Failure;
    out.reason = std::move(reason);
    return out;
}

}  // namespace reconlab

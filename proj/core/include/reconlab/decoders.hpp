#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reconlab/code.hpp"
#include "reconlab/limits.hpp"
#include "reconlab/model.hpp"
#include "reconlab/numeric.hpp"
#include "reconlab/word.hpp"

namespace reconlab {

/// Per-coordinate tallies of a batch and the thresholded majority word.
struct MajorityState {
    unsigned q = 2;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> counts;  // counts[i][j] = m_{i,j}, 0-based i
    std::vector<std::size_t> max_tally;             // M(i)
    Word z;                                         // may contain unknown symbols
    std::vector<std::size_t> unknown;               // S, 1-based coordinates
};

/// z_i = j when m_{i,j} > tau (strict, exact), otherwise unknown. Requires tau >= N/2.
MajorityState majority_word(const OutputBatch& batch, const Rational& tau);

/// Number of coordinates outside S where z differs from x.
std::size_t majority_errors(const MajorityState& state, const Word& x);

/// Substitution decoding over Z_q (q >= 3) with |Y| = N_{t,e}, t = e + ell.
/// Completions of the majority word are tried in lexicographic order; the first
/// code decoder output consistent with every output is returned. e = 0 is routed
/// to the brute-force list.
DecodeOutcome algorithm1_decode(const OutputBatch& batch, const Code& code, std::size_t e, std::size_t ell,
                                const Limits& limits = Limits::from_env());

struct ListDecodeParams {
    std::size_t e = 1;
    std::size_t ell = 1;
    std::size_t a = 0;
    Rational eps = 1;
    std::size_t max_list = 1;  // M, the declared cap on |B_{e+a}(u) ∩ C|
};

/// Binary list decoding with |Y| = N_{t,e,a}: returns every code decoder output
/// over the completions of the majority word that is consistent with every output.
DecodeOutcome algorithm2_list_decode(const OutputBatch& batch, const Code& code, const ListDecodeParams& params,
                                     const Limits& limits = Limits::from_env());

/// Resolves each coordinate from any output that is not erased there; the other
/// coordinates range freely (intersected with the code when one is given).
DecodeOutcome erasure_resolve(const OutputBatch& batch, const CodeRef& code,
                              const Limits& limits = Limits::from_env());

/// Deletes from y2 every symbol value absent from y1. Unique when the result has
/// length n, Failure("undetermined") otherwise.
DecodeOutcome insertion_pair_decode(const Word& y1, const Word& y2, std::size_t n);

}  // namespace reconlab

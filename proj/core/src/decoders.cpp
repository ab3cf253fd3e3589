#include "reconlab/decoders.hpp"

#include <algorithm>

#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/error.hpp"

namespace reconlab {

namespace {

void require_substitution_set(const OutputBatch& batch) {
    batch.validate();
    require(batch.model.kind == ErrorKind::Substitution, "majority decoding needs a substitution batch");
    require(!batch.multiset, "majority decoding needs set semantics (pairwise distinct outputs)");
}

BigCount big_size(std::size_t v) { return BigCount(static_cast<unsigned long>(v)); }

// Visits every completion of z over its unknown coordinates in lexicographic
// order until fn returns true.
template <typename Fn>
void for_each_completion(const MajorityState& state, std::uint64_t cap, const std::string& regime_note, Fn&& fn) {
    const BigCount total = ipow(state.q, static_cast<long long>(state.unknown.size()));
    if (total > BigCount(std::to_string(cap))) {
        throw CapExceeded("|S| = " + std::to_string(state.unknown.size()) + " gives " + total.get_str() +
                          " completions, above the cap " + std::to_string(cap) + "; " + regime_note);
    }
    Word u = state.z;
    std::vector<Symbol> digits(state.unknown.size(), 0);
    for (;;) {
        for (std::size_t k = 0; k < digits.size(); ++k) u.set(state.unknown[k] - 1, digits[k]);
        if (fn(u)) return;
        std::size_t k = digits.size();
        while (k > 0) {
            if (++digits[k - 1] < state.q) break;
            digits[k - 1] = 0;
            --k;
        }
        if (k == 0) return;
    }
}

bool consistent(const Word& c, const std::vector<Word>& outputs, const ErrorModel& model) {
    return std::all_of(outputs.begin(), outputs.end(), [&](const Word& y) { return reachable(c, y, model); });
}

}  // namespace

MajorityState majority_word(const OutputBatch& batch, const Rational& tau) {
    batch.validate();
    require(batch.model.kind == ErrorKind::Substitution, "majority voting needs plain outputs of length n");
    const auto N = batch.outputs.size();
    require(N >= 1, "majority voting needs at least one output");
    require(2 * tau >= Rational(big_size(N)), "tau must be at least N/2");

    MajorityState st;
    st.q = batch.q;
    st.n = batch.n;
    st.counts.assign(batch.n, std::vector<std::size_t>(batch.q, 0));
    for (const Word& y : batch.outputs) {
        for (std::size_t i = 0; i < batch.n; ++i) ++st.counts[i][y[i]];
    }
    std::vector<Symbol> z(batch.n);
    st.max_tally.resize(batch.n);
    for (std::size_t i = 0; i < batch.n; ++i) {
        const auto& row = st.counts[i];
        const auto best = std::max_element(row.begin(), row.end());
        st.max_tally[i] = *best;
        std::size_t above = 0;
        for (std::size_t c : row) above += Rational(big_size(c)) > tau ? 1 : 0;
        ensure(above <= 1, "two symbols exceed tau >= N/2 in coordinate " + std::to_string(i + 1));
        if (Rational(big_size(*best)) > tau) {
            z[i] = static_cast<Symbol>(best - row.begin());
        } else {
            z[i] = batch.q + 1;
            st.unknown.push_back(i + 1);
        }
    }
    st.z = Word(batch.q, std::move(z));
    return st;
}

std::size_t majority_errors(const MajorityState& state, const Word& x) {
    require(x.size() == state.n && x.q() == state.q, "word does not match the majority state");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < state.n; ++i) {
        if (!state.z.is_unknown(i) && state.z[i] != x[i]) ++errors;
    }
    return errors;
}

DecodeOutcome algorithm1_decode(const OutputBatch& batch, const Code& code, std::size_t e, std::size_t ell,
                                const Limits& limits) {
    require_substitution_set(batch);
    require(ell >= 1, "l must be at least 1");
    require(code.q() == batch.q && code.n() == batch.n, "code and outputs disagree on (q, n)");
    require(code.corrects(e), "the code is not " + std::to_string(e) + "-error-correcting");
    const std::size_t t = e + ell;
    require(batch.model.substitutions == t, "batch budget must equal t = e + l");
    if (e == 0) return reconstruction_list(batch, std::cref(code), limits.ball_words);
    require(batch.q >= 3, "the majority decoder needs q >= 3");

    const auto th = majority_thresholds(static_cast<long long>(batch.n), batch.q, static_cast<long long>(e),
                                        static_cast<long long>(ell));
    require(big_size(batch.outputs.size()) == th.channels,
            "the batch must hold exactly N_{t,e} = " + th.channels.get_str() + " outputs");
    const MajorityState st = majority_word(batch, th.tau);

    std::optional<Word> found;
    const std::string note = "n is below the regime where |S| < t(e+2) = " + std::to_string(t * (e + 2));
    for_each_completion(st, limits.completions, note, [&](const Word& u) {
        for (Word& c : code_decoder(code, u, e)) {
            if (consistent(c, batch.outputs, batch.model)) {
                found = std::move(c);
                return true;
            }
        }
        return false;
    });
    if (!found) return DecodeOutcome::failure("no completion decodes to a consistent codeword; Y is not within budget");
    return DecodeOutcome::from_candidates({*found});
}

DecodeOutcome algorithm2_list_decode(const OutputBatch& batch, const Code& code, const ListDecodeParams& p,
                                     const Limits& limits) {
    require_substitution_set(batch);
    require(batch.q == 2, "the list decoder is binary");
    require(code.q() == 2 && code.n() == batch.n, "code and outputs disagree on (q, n)");
    require(code.corrects(p.e), "the code is not " + std::to_string(p.e) + "-error-correcting");
    require(batch.model.substitutions == p.e + p.ell, "batch budget must equal t = e + l");
    const auto th = list_thresholds(static_cast<long long>(batch.n), static_cast<long long>(p.e),
                                    static_cast<long long>(p.ell), static_cast<long long>(p.a), p.eps);
    require(big_size(batch.outputs.size()) == th.channels,
            "the batch must hold exactly N_{t,e,a} = " + th.channels.get_str() + " outputs");
    const MajorityState st = majority_word(batch, th.tau);

    const Rational s_bound =
        Rational(big_size((p.e + p.ell) * (p.e + p.a + 1))) * (Rational(1) + p.eps) / p.eps;
    const std::string note = "expected |S| < t(e+a+1)(1+eps)/eps = " + to_string(s_bound);
    std::vector<Word> found;
    for_each_completion(st, limits.completions, note, [&](const Word& u) {
        for (Word& c : code_decoder(code, u, p.e + p.a, p.max_list)) {
            if (consistent(c, batch.outputs, batch.model)) found.push_back(std::move(c));
        }
        return false;
    });
    return DecodeOutcome::from_candidates(std::move(found));
}

DecodeOutcome erasure_resolve(const OutputBatch& batch, const CodeRef& code, const Limits& limits) {
    batch.validate();
    require(batch.model.kind == ErrorKind::Erasure, "erasure resolution needs an erasure batch");
    require(alphabet(code) == batch.q && length(code) == batch.n, "code and outputs disagree on (q, n)");
    require(!batch.outputs.empty(), "empty output batch");
    const Symbol erased = batch.q;
    std::vector<Symbol> fixed(batch.n, erased);
    for (const Word& y : batch.outputs) {
        for (std::size_t i = 0; i < batch.n; ++i) {
            if (y.is_erased(i)) continue;
            if (fixed[i] != erased && fixed[i] != y[i]) {
                throw PreconditionError("outputs disagree in coordinate " + std::to_string(i + 1) +
                                        "; pure erasure channels cannot change symbols");
            }
            fixed[i] = y[i];
        }
    }
    auto matches = [&](const Word& c) {
        for (std::size_t i = 0; i < batch.n; ++i) {
            if (fixed[i] != erased && c[i] != fixed[i]) return false;
        }
        return true;
    };
    std::vector<Word> out;
    if (const auto* ref = std::get_if<std::reference_wrapper<const Code>>(&code)) {
        for (const Word& c : ref->get().words()) {
            if (matches(c)) out.push_back(c);
        }
        return DecodeOutcome::from_candidates(std::move(out));
    }
    MajorityState free_coords;
    free_coords.q = batch.q;
    free_coords.n = batch.n;
    free_coords.z = Word(batch.q, fixed);
    for (std::size_t i = 0; i < batch.n; ++i) {
        if (fixed[i] == erased) free_coords.unknown.push_back(i + 1);
    }
    for_each_completion(free_coords, limits.completions, "too many unresolved coordinates", [&](const Word& u) {
        out.push_back(u);
        return false;
    });
    return DecodeOutcome::from_candidates(std::move(out));
}

DecodeOutcome insertion_pair_decode(const Word& y1, const Word& y2, std::size_t n) {
    require(y1.q() == y2.q(), "outputs use different alphabets");
    require(y1.is_plain_word() && y2.is_plain_word(), "insertion outputs are plain words");
    require(y1.size() >= n && y2.size() >= n, "insertion outputs are at least n symbols long");
    std::vector<bool> present(y1.q(), false);
    for (Symbol s : y1.symbols()) present[s] = true;
    std::vector<Symbol> kept;
    for (Symbol s : y2.symbols()) {
        if (present[s]) kept.push_back(s);
    }
    if (kept.size() != n) return DecodeOutcome::failure("undetermined");
    return DecodeOutcome::from_candidates({Word(y2.q(), std::move(kept))});
}

}  // namespace reconlab

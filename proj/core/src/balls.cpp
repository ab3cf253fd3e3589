#include "reconlab/balls.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "reconlab/bounds.hpp"
#include "reconlab/error.hpp"

namespace reconlab {

bool is_subsequence(const Word& small, const Word& big) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < big.size() && j < small.size(); ++i) {
        if (big[i] == small[j]) ++j;
    }
    return j == small.size();
}

bool reachable(const Word& center, const Word& y, const ErrorModel& model) {
    if (center.q() != y.q() || y.has_unknown()) return false;
    switch (model.kind) {
        case ErrorKind::Substitution:
            return y.size() == center.size() && !y.has_erasure() && hamming_distance(center, y) <= model.substitutions;
        case ErrorKind::Erasure: {
            if (y.size() != center.size() || y.erasure_count() > model.erasures) return false;
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (!y.is_erased(i) && y[i] != center[i]) return false;
            }
            return true;
        }
        case ErrorKind::ErasureSubstitution:
            return y.size() == center.size() && y.erasure_count() <= model.erasures &&
                   erasure_aware_distance(center, y) <= model.substitutions;
        case ErrorKind::Deletion:
            return !y.has_erasure() && y.size() <= center.size() && center.size() - y.size() <= model.deletions &&
                   is_subsequence(y, center);
        case ErrorKind::Insertion:
            return !y.has_erasure() && y.size() >= center.size() && y.size() - center.size() <= model.insertions &&
                   is_subsequence(center, y);
    }
    return false;
}

BigCount ball_size_bound(const ErrorModel& model, unsigned q, std::size_t n) {
    const auto ln = static_cast<long long>(n);
    switch (model.kind) {
        case ErrorKind::Substitution: return ball_volume(ln, q, static_cast<long long>(model.substitutions));
        case ErrorKind::Erasure: return ball_volume(ln, 2, static_cast<long long>(model.erasures));
        case ErrorKind::ErasureSubstitution:
            return mixed_volume(ln, q, static_cast<long long>(model.erasures), static_cast<long long>(model.substitutions));
        case ErrorKind::Deletion: return ball_volume(ln, 2, static_cast<long long>(model.deletions));
        case ErrorKind::Insertion: {
            BigCount total = 0;
            for (long long k = 0; k <= static_cast<long long>(model.insertions); ++k) {
                total += binom(ln + k, k) * ipow(q, k);
            }
            return total;
        }
    }
    return 0;
}

namespace {

void check_cap(const BigCount& size, std::uint64_t cap, const std::string& what) {
    if (size > BigCount(std::to_string(cap))) {
        throw CapExceeded(what + " has up to " + size.get_str() + " words, above the cap " + std::to_string(cap));
    }
}

// Substitutions on the positions in `allowed` (ascending), at most `budget` of them.
void substitute(Word& w, const std::vector<std::size_t>& allowed, std::size_t from, std::size_t budget,
                std::vector<Word>& out) {
    out.push_back(w);
    if (budget == 0) return;
    for (std::size_t k = from; k < allowed.size(); ++k) {
        const std::size_t pos = allowed[k];
        const Symbol original = w[pos];
        for (Symbol s = 0; s < w.q(); ++s) {
            if (s == original) continue;
            w.set(pos, s);
            substitute(w, allowed, k + 1, budget - 1, out);
        }
        w.set(pos, original);
    }
}

// Calls fn for every subset of {0..n-1} of size <= budget, as an ascending index list.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t budget, Fn&& fn) {
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        fn(chosen);
        if (chosen.size() == budget) return;
        for (std::size_t i = from; i < n; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& taken) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < taken.size() && taken[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

void sort_unique(std::vector<Word>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::vector<Word> deletion_ball(const Word& center, std::size_t budget) {
    std::vector<Word> out{center};
    std::vector<Word> frontier{center};
    for (std::size_t level = 0; level < budget && !frontier.empty(); ++level) {
        std::unordered_set<Word, WordHash> next;
        for (const Word& w : frontier) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::vector<Symbol> s = w.symbols();
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                next.emplace(w.q(), std::move(s));
            }
        }
        frontier.assign(next.begin(), next.end());
        out.insert(out.end(), frontier.begin(), frontier.end());
    }
    sort_unique(out);
    return out;
}

// Leftmost-embedding generation: an inserted symbol placed while x_j is the next
// unmatched symbol must differ from x_j, so each supersequence appears once.
void supersequence_rec(const Word& w, std::size_t m, std::size_t matched, std::vector<Symbol>& prefix,
                       std::vector<Word>& out) {
    const std::size_t remaining_inserts = m - prefix.size() - (w.size() - matched);
    if (prefix.size() == m) {
        out.emplace_back(w.q(), prefix);
        return;
    }
    if (matched < w.size()) {
        prefix.push_back(w[matched]);
        supersequence_rec(w, m, matched + 1, prefix, out);
        prefix.pop_back();
    }
    if (remaining_inserts > 0) {
        for (Symbol s = 0; s < w.q(); ++s) {
            if (matched < w.size() && s == w[matched]) continue;
            prefix.push_back(s);
            supersequence_rec(w, m, matched, prefix, out);
            prefix.pop_back();
        }
    }
}

std::vector<Word> insertion_ball(const Word& center, std::size_t budget, std::uint64_t cap) {
    std::vector<Word> out;
    for (std::size_t k = 0; k <= budget; ++k) {
        auto layer = supersequences(center, center.size() + k, cap);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Word> supersequences(const Word& w, std::size_t m, std::uint64_t cap) {
    require(m >= w.size(), "supersequence length below word length");
    require(w.is_plain_word(), "supersequences are defined for plain words");
    const auto k = static_cast<long long>(m - w.size());
    check_cap(binom(static_cast<long long>(m), k) * ipow(w.q(), k), cap, "supersequence set");
    std::vector<Word> out;
    std::vector<Symbol> prefix;
    prefix.reserve(m);
    supersequence_rec(w, m, 0, prefix, out);
    return out;
}

std::vector<Word> subsequences(const Word& w, std::size_t m) {
    require(m <= w.size(), "subsequence length above word length");
    std::vector<Word> out;
    std::vector<Symbol> picked;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (picked.size() == m) {
            out.emplace_back(w.q(), picked);
            return;
        }
        const std::size_t need = m - picked.size();
        for (std::size_t i = from; i + need <= w.size(); ++i) {
            picked.push_back(w[i]);
            self(self, i + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
    sort_unique(out);
    return out;
}

std::vector<Word> enumerate_ball(const BallSpec& spec, std::uint64_t cap) {
    const ErrorModel& model = spec.model;
    const Word& x = spec.center;
    model.validate();
    require(x.is_plain_word(), "ball centers must be plain words");
    const std::size_t n = x.size();
    if (model.kind == ErrorKind::Deletion) require(model.deletions <= n, "deletion budget exceeds word length");
    check_cap(ball_size_bound(model, x.q(), n), cap, "ball");

    std::vector<Word> out;
    switch (model.kind) {
        case ErrorKind::Substitution: {
            Word w = x;
            std::vector<std::size_t> all(n);
            for (std::size_t i = 0; i < n; ++i) all[i] = i;
            substitute(w, all, 0, model.substitutions, out);
            break;
        }
        case ErrorKind::Erasure:
            for_each_subset(n, model.erasures, [&](const std::vector<std::size_t>& erased) {
                Word w = x;
                for (std::size_t i : erased) w.set(i, w.erased());
                out.push_back(std::move(w));
            });
            break;
        case ErrorKind::ErasureSubstitution:
            // A word is determined by its erased set E and the substitutions outside E.
            for_each_subset(n, model.erasures, [&](const std::vector<std::size_t>& erased) {
                Word w = x;
                for (std::size_t i : erased) w.set(i, w.erased());
                substitute(w, complement(n, erased), 0, model.substitutions, out);
            });
            break;
        case ErrorKind::Deletion:
            return deletion_ball(x, model.deletions);
        case ErrorKind::Insertion:
            return insertion_ball(x, model.insertions, cap);
    }
    std::sort(out.begin(), out.end());
    ensure(std::adjacent_find(out.begin(), out.end()) == out.end(), "ball generation produced a duplicate");
    return out;
}

std::vector<Word> intersection(const std::vector<BallSpec>& specs, std::uint64_t cap) {
    require(!specs.empty(), "intersection of zero balls");
    for (const BallSpec& s : specs) {
        require(s.model == specs.front().model, "all balls must share kind and budgets");
        require(s.center.q() == specs.front().center.q(), "all centers must share the alphabet");
    }
    // Substitution-type balls have equal volume for equal lengths; deletion balls
    // vary with the center, so pick the smallest one explicitly.
    std::size_t pivot = 0;
    std::vector<Word> base = enumerate_ball(specs[0], cap);
    if (specs.front().model.kind == ErrorKind::Deletion) {
        for (std::size_t i = 1; i < specs.size(); ++i) {
            auto other = enumerate_ball(specs[i], cap);
            if (other.size() < base.size()) {
                base = std::move(other);
                pivot = i;
            }
        }
    }
    std::vector<Word> out;
    for (Word& y : base) {
        bool all = true;
        for (std::size_t i = 0; i < specs.size() && all; ++i) {
            if (i != pivot) all = reachable(specs[i].center, y, specs[i].model);
        }
        if (all) out.push_back(std::move(y));
    }
    return out;
}

BigCount intersection_size(const std::vector<BallSpec>& specs, std::uint64_t cap) {
    return BigCount(static_cast<unsigned long>(intersection(specs, cap).size()));
}

std::vector<Word> preimage_candidates(const Word& y, const ErrorModel& model, std::size_t n, std::uint64_t cap) {
    model.validate();
    require(!y.has_unknown(), "outputs cannot contain unknown symbols");
    const unsigned q = y.q();
    std::vector<Word> out;
    switch (model.kind) {
        case ErrorKind::Substitution:
            if (y.size() != n || y.has_erasure()) return {};
            return enumerate_ball(BallSpec{model, y}, cap);
        case ErrorKind::Erasure:
        case ErrorKind::ErasureSubstitution: {
            if (y.size() != n || y.erasure_count() > model.erasures) return {};
            std::vector<std::size_t> erased;
            std::vector<std::size_t> readable;
            for (std::size_t i = 0; i < n; ++i) (y.is_erased(i) ? erased : readable).push_back(i);
            const std::size_t t_s = model.kind == ErrorKind::Erasure ? 0 : model.substitutions;
            check_cap(ipow(q, static_cast<long long>(erased.size())) *
                          ball_volume(static_cast<long long>(readable.size()), q, static_cast<long long>(t_s)),
                      cap, "preimage");
            Word base = y;
            for (std::size_t i : erased) base.set(i, 0);
            std::vector<Word> substituted;
            substitute(base, readable, 0, t_s, substituted);
            for (Word& w : substituted) {
                std::vector<Symbol> digits(erased.size(), 0);
                while (true) {
                    for (std::size_t k = 0; k < erased.size(); ++k) w.set(erased[k], digits[k]);
                    out.push_back(w);
                    std::size_t k = erased.size();
                    while (k > 0) {
                        if (++digits[k - 1] < q) break;
                        digits[k - 1] = 0;
                        --k;
                    }
                    if (k == 0) break;
                }
            }
            break;
        }
        case ErrorKind::Deletion:
            if (y.size() > n || n - y.size() > model.deletions || y.has_erasure()) return {};
            out = supersequences(y, n, cap);
            break;
        case ErrorKind::Insertion:
            if (y.size() < n || y.size() - n > model.insertions || y.has_erasure()) return {};
            out = subsequences(y, n);
            break;
    }
    sort_unique(out);
    return out;
}

DecodeOutcome reconstruction_list(const OutputBatch& batch, const CodeRef& code, std::uint64_t cap) {
    batch.validate();
    require(alphabet(code) == batch.q, "code and outputs use different alphabets");
    require(length(code) == batch.n, "code length does not match the transmitted length");
    const auto outputs = batch.distinct_outputs();
    if (outputs.empty()) return DecodeOutcome::failure("empty output batch");

    std::vector<Word> candidates;
    if (const auto* full = std::get_if<FullSpace>(&code)) {
        // Outputs whose length is closest to n (and with fewest erasures) have
        // the fewest preimages.
        const Word* pivot = &outputs.front();
        for (const Word& y : outputs) {
            const auto dist = [&](const Word& w) { return w.size() > full->n ? w.size() - full->n : full->n - w.size(); };
            if (dist(y) < dist(*pivot) || (dist(y) == dist(*pivot) && y.erasure_count() < pivot->erasure_count())) {
                pivot = &y;
            }
        }
        candidates = preimage_candidates(*pivot, batch.model, full->n, cap);
    } else {
        candidates = std::get<std::reference_wrapper<const Code>>(code).get().words();
    }
    std::vector<Word> out;
    for (Word& c : candidates) {
        const bool ok = std::all_of(outputs.begin(), outputs.end(),
                                    [&](const Word& y) { return reachable(c, y, batch.model); });
        if (ok) out.push_back(std::move(c));
    }
    return DecodeOutcome::from_candidates(std::move(out));
}

}  // namespace reconlab

#include "reconlab/code.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "reconlab/balls.hpp"
#include "reconlab/error.hpp"

namespace reconlab {

Code::Code(unsigned q, std::size_t n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
    require(q >= 2, "alphabet size must be at least 2");
    require(n >= 1, "codewords must have positive length");
    require(!words_.empty(), "a code is a nonempty set of words");
    for (const Word& w : words_) {
        require(w.q() == q && w.size() == n, "codeword " + to_string(w) + " does not match (n, q)");
        require(w.is_plain_word(), "codewords cannot contain erased or unknown symbols");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::size_t j = i + 1; j < words_.size(); ++j) {
            const std::size_t d = hamming_distance(words_[i], words_[j]);
            if (!min_distance_ || d < *min_distance_) min_distance_ = d;
        }
    }
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::size_t Code::correction_radius() const noexcept {
    if (!min_distance_) return n_;
    return (*min_distance_ - 1) / 2;
}

unsigned alphabet(const CodeRef& code) {
    return std::visit(
        [](const auto& c) -> unsigned {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, FullSpace>) {
                return c.q;
            } else {
                return c.get().q();
            }
        },
        code);
}

std::size_t length(const CodeRef& code) {
    return std::visit(
        [](const auto& c) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, FullSpace>) {
                return c.n;
            } else {
                return c.get().n();
            }
        },
        code);
}

bool contains(const CodeRef& code, const Word& w) {
    if (const auto* full = std::get_if<FullSpace>(&code)) {
        return w.q() == full->q && w.size() == full->n && w.is_plain_word();
    }
    return std::get<std::reference_wrapper<const Code>>(code).get().contains(w);
}

std::optional<std::size_t> min_distance(const Code& code) { return code.min_distance(); }

Code constant_weight_code(std::size_t n, std::size_t e, unsigned q) {
    require(n >= e + 1, "constant-weight code needs n >= e+1");
    std::vector<Word> words;
    const std::size_t count = n / (e + 1);
    for (std::size_t j = 0; j < count; ++j) {
        Word w = Word::zeros(q, n);
        for (std::size_t k = 1; k <= e + 1; ++k) w.set(j * (e + 1) + k - 1, 1);
        words.push_back(std::move(w));
    }
    return Code(q, n, std::move(words));
}

AdversarialInstance adversarial_code(std::size_t e, std::size_t ell, unsigned q) {
    require(q >= 2 && e >= 1 && ell >= 1, "adversarial construction needs q >= 2, e >= 1, l >= 1");
    const std::size_t t = e + ell;
    const std::size_t n = e * (q - 1) * ell + t;
    std::vector<Word> words;
    // i = h(q-1)+p for h in [0, l-1], p in [1, q-1]; coordinates below are 1-based.
    for (std::size_t h = 0; h < ell; ++h) {
        for (unsigned p = 1; p <= q - 1; ++p) {
            const std::size_t i = h * (q - 1) + p;
            Word c = Word::zeros(q, n);
            c.set(h, p);
            for (std::size_t j = (i - 1) * e + ell + 1; j <= i * e + ell; ++j) c.set(j - 1, 1);
            words.push_back(std::move(c));
        }
    }
    Word last = Word::zeros(q, n);
    for (std::size_t j = e * (q - 1) * ell + ell + 1; j <= e * (q - 1) * ell + t; ++j) last.set(j - 1, 1);
    words.push_back(std::move(last));

    OutputBatch batch;
    batch.q = q;
    batch.n = n;
    batch.model = ErrorModel::substitution(t);
    batch.multiset = false;
    batch.regime = SamplingRegime::Exhaustive;
    if (ell >= 1) {
        batch.outputs = enumerate_ball(BallSpec{ErrorModel::substitution(ell - 1), Word::zeros(q, n)});
    }
    Word y_ell = Word::zeros(q, n);
    for (std::size_t j = 0; j < ell; ++j) y_ell.set(j, 1);
    batch.outputs.push_back(std::move(y_ell));

    return AdversarialInstance{Code(q, n, std::move(words)), std::move(batch)};
}

std::vector<Word> code_decoder(const Code& code, const Word& u, std::size_t radius,
                               std::optional<std::size_t> max_list) {
    require(u.q() == code.q() && u.size() == code.n(), "decoder input does not match the code's (n, q)");
    std::vector<Word> out;
    for (const Word& c : code.words()) {
        if (hamming_distance(c, u) <= radius) out.push_back(c);
    }
    if (max_list && out.size() > *max_list) {
        throw PreconditionError("code has " + std::to_string(out.size()) + " codewords within radius " +
                                std::to_string(radius) + " of " + to_string(u) + ", more than the declared cap " +
                                std::to_string(*max_list));
    }
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::size_t size;
    std::size_t blocks;
    std::vector<Bits> adj;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    static bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
    static void reset(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    static bool none(const Bits& b) {
        return std::all_of(b.begin(), b.end(), [](std::uint64_t x) { return x == 0; });
    }
    static std::size_t first(const Bits& b) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(b[k]));
        }
        return SIZE_MAX;
    }

    // Greedy coloring bound: vertices in `order` with nondecreasing color numbers.
    void color_sort(const Bits& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
        Bits uncolored = candidates;
        std::size_t color = 0;
        while (!none(uncolored)) {
            ++color;
            Bits q = uncolored;
            while (!none(q)) {
                const std::size_t v = first(q);
                reset(q, v);
                reset(uncolored, v);
                for (std::size_t k = 0; k < blocks; ++k) q[k] &= ~adj[v][k];
                order.push_back(v);
                colors.push_back(color);
            }
        }
    }

    void expand(Bits candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> colors;
        color_sort(candidates, order, colors);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + colors[idx] <= best.size()) return;
            const std::size_t v = order[idx];
            current.push_back(v);
            Bits next(blocks);
            for (std::size_t k = 0; k < blocks; ++k) next[k] = candidates[k] & adj[v][k];
            if (none(next)) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            reset(candidates, v);
        }
    }
};

}  // namespace

std::vector<Word> max_distance_subset(const std::vector<Word>& words, std::size_t d) {
    if (words.empty()) return {};
    constexpr std::size_t kMaxVertices = 1U << 14;
    require(words.size() <= kMaxVertices, "clique search supports at most 16384 words");
    CliqueSearch search;
    search.size = words.size();
    search.blocks = (search.size + 63) / 64;
    search.adj.assign(search.size, Bits(search.blocks, 0));
    for (std::size_t i = 0; i < search.size; ++i) {
        for (std::size_t j = i + 1; j < search.size; ++j) {
            if (hamming_distance(words[i], words[j]) >= d) {
                search.adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
                search.adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
            }
        }
    }
    Bits all(search.blocks, 0);
    for (std::size_t i = 0; i < search.size; ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
    search.expand(all);
    std::vector<Word> out;
    for (std::size_t v : search.best) out.push_back(words[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t cap) {
    require(q >= 2, "alphabet size must be at least 2");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q + 1) throw CapExceeded("q^n exceeds the enumeration cap");
        total *= q;
    }
    if (total > cap) throw CapExceeded("q^n = " + std::to_string(total) + " exceeds the enumeration cap");
    std::vector<Word> out;
    out.reserve(total);
    std::vector<Symbol> digits(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        out.emplace_back(q, digits);
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    return out;
}

}  // namespace reconlab

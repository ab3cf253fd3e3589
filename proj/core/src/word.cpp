#include "reconlab/word.hpp"

#include <algorithm>
#include <charconv>

#include "reconlab/error.hpp"

namespace reconlab {

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    require(q >= 2, "alphabet size must be at least 2");
    for (Symbol s : symbols_) require(s <= q + 1, "symbol out of range for q=" + std::to_string(q));
}

Word Word::zeros(unsigned q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

std::size_t Word::erasure_count() const noexcept {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), q_));
}

bool Word::has_unknown() const noexcept {
    return std::find(symbols_.begin(), symbols_.end(), q_ + 1) != symbols_.end();
}

void Word::set(std::size_t i, Symbol s) {
    require(i < symbols_.size(), "coordinate out of range");
    require(s <= q_ + 1, "symbol out of range");
    symbols_[i] = s;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.q();
    for (Symbol s : w.symbols()) {
        h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h ^ w.size();
}

SupportView support_view(const Word& w) {
    require(!w.has_unknown(), "support is undefined for words with unknown symbols");
    SupportView view;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
            view.support.push_back(i + 1);
            view.vsupport.emplace_back(i + 1, w[i]);
        }
    }
    view.weight = view.support.size();
    return view;
}

namespace {

void check_comparable(const Word& x, const Word& y) {
    require(x.size() == y.size(), "length mismatch");
    require(x.q() == y.q(), "alphabet mismatch");
    require(!x.has_unknown() && !y.has_unknown(), "distance is undefined for unknown symbols");
}

}  // namespace

std::size_t hamming_distance(const Word& x, const Word& y) {
    check_comparable(x, y);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

std::size_t erasure_aware_distance(const Word& x, const Word& y) {
    check_comparable(x, y);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.is_erased(i) || y.is_erased(i)) continue;
        d += x[i] != y[i];
    }
    return d;
}

bool identical(const Word& x, const Word& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.is_erased(i) != y.is_erased(i)) return false;
        if (x.is_unknown(i) != y.is_unknown(i)) return false;
        if (x.is_plain(i) && x[i] != y[i]) return false;
    }
    return true;
}

Word reinterpret(const Word& w, unsigned q) {
    std::vector<Symbol> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.is_erased(i)) {
            out[i] = q;
        } else if (w.is_unknown(i)) {
            out[i] = q + 1;
        } else {
            require(w[i] < q, "symbol " + std::to_string(w[i]) + " does not fit alphabet " + std::to_string(q));
            out[i] = w[i];
        }
    }
    return Word(q, std::move(out));
}

namespace {

Symbol parse_token(std::string_view tok, unsigned q) {
    if (tok == "*") return q;
    if (tok == "?") return q + 1;
    Symbol v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(ec == std::errc() && ptr == tok.data() + tok.size(), "bad symbol '" + std::string(tok) + "'");
    require(v < q, "symbol " + std::to_string(v) + " not below q=" + std::to_string(q));
    return v;
}

}  // namespace

Word parse_word(std::string_view text, unsigned q) {
    require(q >= 2, "alphabet size must be at least 2");
    std::vector<Symbol> symbols;
    if (q <= 10) {
        for (char c : text) {
            if (c == ' ') continue;
            symbols.push_back(parse_token(std::string_view(&c, 1), q));
        }
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && text[i] == ' ') ++i;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ') ++j;
            if (j > i) symbols.push_back(parse_token(text.substr(i, j - i), q));
            i = j;
        }
    }
    return Word(q, std::move(symbols));
}

std::string to_string(const Word& w) {
    std::string out;
    const bool spaced = w.q() > 10;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (spaced && i > 0) out += ' ';
        if (w.is_erased(i)) {
            out += '*';
        } else if (w.is_unknown(i)) {
            out += '?';
        } else {
            out += std::to_string(w[i]);
        }
    }
    return out;
}

}  // namespace reconlab

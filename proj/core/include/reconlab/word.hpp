#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reconlab {

/// One extended symbol. Plain values are 0..q-1, the erasure marker is q and
/// the majority "unknown" marker is q+1, so an erased word is literally a word
/// of the (q+1)-ary space.
using Symbol = std::uint32_t;

class Word {
public:
    Word() = default;
    Word(unsigned q, std::vector<Symbol> symbols);

    static Word zeros(unsigned q, std::size_t n);

    unsigned q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    Symbol erased() const noexcept { return q_; }
    Symbol unknown() const noexcept { return q_ + 1; }

    bool is_plain(std::size_t i) const { return symbols_[i] < q_; }
    bool is_erased(std::size_t i) const { return symbols_[i] == q_; }
    bool is_unknown(std::size_t i) const { return symbols_[i] == q_ + 1; }

    std::size_t erasure_count() const noexcept;
    bool has_erasure() const noexcept { return erasure_count() != 0; }
    bool has_unknown() const noexcept;
    bool is_plain_word() const noexcept { return !has_erasure() && !has_unknown(); }

    /// Replaces coordinate i (0-based). Throws if s is not a valid extended symbol.
    void set(std::size_t i, Symbol s);

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    unsigned q_ = 2;
    std::vector<Symbol> symbols_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Supports reported with 1-based coordinates. Erased coordinates belong to the
/// support and contribute (i, q) to the value support.
struct SupportView {
    std::vector<std::size_t> support;
    std::vector<std::pair<std::size_t, Symbol>> vsupport;
    std::size_t weight = 0;
};

SupportView support_view(const Word& w);

/// Number of coordinates with different extended symbols. Erased vs plain counts,
/// erased vs erased does not.
std::size_t hamming_distance(const Word& x, const Word& y);

/// Hamming distance ignoring coordinates where exactly one side is erased.
std::size_t erasure_aware_distance(const Word& x, const Word& y);

/// True when both words spell the same symbol sequence, erasures included,
/// regardless of alphabet size.
bool identical(const Word& x, const Word& y);

/// The same symbol sequence re-read over another alphabet. Plain values must fit.
Word reinterpret(const Word& w, unsigned q);

/// Textual syntax: concatenated digits for q <= 10, space separated integers
/// otherwise; '*' is an erasure and '?' an unknown symbol.
Word parse_word(std::string_view text, unsigned q);
std::string to_string(const Word& w);

}  // namespace reconlab

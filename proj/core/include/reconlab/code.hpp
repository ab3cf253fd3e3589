#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "reconlab/limits.hpp"
#include "reconlab/model.hpp"
#include "reconlab/word.hpp"

namespace reconlab {

/// A nonempty set of plain words sharing (n, q). Words are kept sorted.
class Code {
public:
    Code(unsigned q, std::size_t n, std::vector<Word> words);

    unsigned q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    bool contains(const Word& w) const;

    /// Minimum pairwise distance; empty for a single-word code.
    std::optional<std::size_t> min_distance() const noexcept { return min_distance_; }

    /// floor((d-1)/2), or n for a single-word code (it corrects everything).
    std::size_t correction_radius() const noexcept;
    bool corrects(std::size_t e) const noexcept { return correction_radius() >= e; }

private:
    unsigned q_;
    std::size_t n_;
    std::vector<Word> words_;
    std::optional<std::size_t> min_distance_;
};

/// Stand-in for C = Z_q^n when the whole space is the code.
struct FullSpace {
    unsigned q = 2;
    std::size_t n = 0;
};

using CodeRef = std::variant<std::reference_wrapper<const Code>, FullSpace>;

unsigned alphabet(const CodeRef& code);
std::size_t length(const CodeRef& code);
bool contains(const CodeRef& code, const Word& w);

/// Exact pairwise minimum; empty for a single-word code.
std::optional<std::size_t> min_distance(const Code& code);

/// Words c_j with value support {(j(e+1)+k, 1) | k = 1..e+1}, j = 0..floor(n/(e+1))-1.
Code constant_weight_code(std::size_t n, std::size_t e, unsigned q = 2);

struct AdversarialInstance {
    Code code;
    OutputBatch outputs;
};

/// The (q-1)l+1 word e-error-correcting code of length n = e(q-1)l + e + l together
/// with Y = {y : w(y) <= l-1} + {1^l 0^(n-l)}; every codeword lies in every B_t(y).
AdversarialInstance adversarial_code(std::size_t e, std::size_t ell, unsigned q);

/// All codewords within `radius` of u, in code order. Throws PreconditionError
/// when more than max_list words are found.
std::vector<Word> code_decoder(const Code& code, const Word& u, std::size_t radius,
                               std::optional<std::size_t> max_list = std::nullopt);

/// Largest subset of `words` with pairwise distance >= d (maximum clique search).
std::vector<Word> max_distance_subset(const std::vector<Word>& words, std::size_t d);

/// Every word of Z_q^n in lexicographic order. Throws CapExceeded past `cap` words.
std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t cap);

}  // namespace reconlab

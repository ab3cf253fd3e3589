#include "reconlab/limits.hpp"

#include <cstdlib>
#include <string>

#include "reconlab/error.hpp"

namespace reconlab {

Limits Limits::from_env() {
    Limits limits;
    const char* raw = std::getenv("RECONLAB_CAP");
    if (raw == nullptr || *raw == '\0') return limits;
    std::uint64_t cap = 0;
    try {
        std::size_t used = 0;
        cap = std::stoull(raw, &used);
        require(used == std::string(raw).size(), "");
    } catch (const std::exception&) {
        throw PreconditionError(std::string("RECONLAB_CAP is not an integer: ") + raw);
    }
    limits.ball_words = cap;
    limits.code_search_words = cap;
    limits.completions = cap;
    limits.exact_batches = cap;
    limits.adversarial_batches = cap;
    return limits;
}

}  // namespace reconlab

#pragma once

#include <string>
#include <string_view>

#include "reconlab/code.hpp"
#include "reconlab/model.hpp"

namespace reconlab {

/// {"q","n","model":{"kind","budgets":{...}},"multiset","outputs":[...],"regime"}
/// with words in the textual syntax. Pretty-printed with two-space indentation.
std::string batch_to_json(const OutputBatch& batch);

/// Parses and validates a batch. "regime" is optional and defaults to exhaustive.
OutputBatch batch_from_json(std::string_view text);

/// {"status","candidates":[...],"reason"?}
std::string outcome_to_json(const DecodeOutcome& outcome);

/// First line "q n", then one word per line. Blank lines and lines starting
/// with '#' are ignored.
std::string code_to_text(const Code& code);
Code code_from_text(std::string_view text);

}  // namespace reconlab

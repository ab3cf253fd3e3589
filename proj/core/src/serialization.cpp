#include "reconlab/serialization.hpp"

#include <json.hpp>

#include <sstream>

#include "reconlab/error.hpp"

namespace reconlab {

using nlohmann::ordered_json;

namespace {

ordered_json budgets_json(const ErrorModel& m) {
    ordered_json b = ordered_json::object();
    switch (m.kind) {
        case ErrorKind::Substitution: b["substitutions"] = m.substitutions; break;
        case ErrorKind::Erasure: b["erasures"] = m.erasures; break;
        case ErrorKind::ErasureSubstitution:
            b["erasures"] = m.erasures;
            b["substitutions"] = m.substitutions;
            break;
        case ErrorKind::Deletion: b["deletions"] = m.deletions; break;
        case ErrorKind::Insertion: b["insertions"] = m.insertions; break;
    }
    return b;
}

std::size_t budget(const ordered_json& b, const char* key) {
    if (!b.contains(key)) return 0;
    const auto& v = b.at(key);
    require(v.is_number_unsigned(), std::string("budget '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

std::string batch_to_json(const OutputBatch& batch) {
    ordered_json j;
    j["q"] = batch.q;
    j["n"] = batch.n;
    j["model"] = {{"kind", std::string(to_string(batch.model.kind))}, {"budgets", budgets_json(batch.model)}};
    j["multiset"] = batch.multiset;
    ordered_json outs = ordered_json::array();
    for (const Word& y : batch.outputs) outs.push_back(to_string(y));
    j["outputs"] = std::move(outs);
    j["regime"] = std::string(to_string(batch.regime));
    return j.dump(2);
}

OutputBatch batch_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw PreconditionError(std::string("malformed batch JSON: ") + ex.what());
    }
    try {
        OutputBatch b;
        b.q = j.at("q").get<unsigned>();
        b.n = j.at("n").get<std::size_t>();
        const auto& m = j.at("model");
        b.model.kind = parse_error_kind(m.at("kind").get<std::string>());
        const auto& budgets = m.contains("budgets") ? m.at("budgets") : ordered_json::object();
        require(budgets.is_object(), "model budgets must be an object");
        for (const auto& [key, _] : budgets.items()) {
            require(key == "substitutions" || key == "erasures" || key == "deletions" || key == "insertions",
                    "unknown budget '" + key + "'");
        }
        b.model.substitutions = budget(budgets, "substitutions");
        b.model.erasures = budget(budgets, "erasures");
        b.model.deletions = budget(budgets, "deletions");
        b.model.insertions = budget(budgets, "insertions");
        b.multiset = j.value("multiset", false);
        for (const auto& y : j.at("outputs")) b.outputs.push_back(parse_word(y.get<std::string>(), b.q));
        if (j.contains("regime")) b.regime = parse_sampling_regime(j.at("regime").get<std::string>());
        b.validate();
        return b;
    } catch (const nlohmann::json::exception& ex) {
        throw PreconditionError(std::string("invalid batch JSON: ") + ex.what());
    }
}

std::string outcome_to_json(const DecodeOutcome& outcome) {
    ordered_json j;
    j["status"] = std::string(to_string(outcome.status));
    ordered_json c = ordered_json::array();
    for (const Word& w : outcome.candidates) c.push_back(to_string(w));
    j["candidates"] = std::move(c);
    if (!outcome.reason.empty()) j["reason"] = outcome.reason;
    return j.dump(2);
}

std::string code_to_text(const Code& code) {
    std::ostringstream out;
    out << code.q() << ' ' << code.n() << '\n';
    for (const Word& w : code.words()) out << to_string(w) << '\n';
    return out.str();
}

Code code_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    unsigned q = 0;
    std::size_t n = 0;
    bool header = false;
    std::vector<Word> words;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!header) {
            std::istringstream h(line);
            long long qq = 0, nn = -1;
            std::string rest;
            require(static_cast<bool>(h >> qq >> nn) && !(h >> rest) && qq >= 2 && nn >= 1,
                    "code file header must be 'q n' with q >= 2 and n >= 1");
            q = static_cast<unsigned>(qq);
            n = static_cast<std::size_t>(nn);
            header = true;
            continue;
        }
        Word w = parse_word(line.substr(first), q);
        require(w.size() == n, "codeword '" + line + "' does not have length " + std::to_string(n));
        words.push_back(std::move(w));
    }
    require(header, "code file is empty");
    return Code(q, n, std::move(words));
}

}  // namespace reconlab

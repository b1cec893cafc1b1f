#pragma once

// Shared textual and JSON formats for semigroups:
//   gaps:1,2,4       gap list, ascending (gaps: alone is the full monoid)
//   gens:3,5,7       generator list
//   {"frobenius":..,"genus":..,"multiplicity":..,"type":..,"depth":..,
//    "gaps":[..],"pf":[..],"min_gens":[..]}

#include <string>
#include <vector>

#include <json.hpp>

#include "gapset/semigroup.hpp"

namespace gapset {

inline std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string render_gaps(const NumericalSemigroup& s) {
    return "gaps:" + join_ints(s.gaps());
}

inline std::string render_gens(const NumericalSemigroup& s) {
    return "gens:" + join_ints(minimal_generators(s));
}

inline std::vector<Int> parse_int_list(const std::string& body) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        const std::string tok = body.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(static_cast<Int>(v));
        } catch (const std::exception&) {
            throw MalformedInputError("bad integer '" + tok + "' in list");
        }
        pos = next + 1;
    }
    return out;
}

/// Parses `gaps:...` / `gens:...` into a semigroup.
inline NumericalSemigroup parse_semigroup(const std::string& text) {
    if (text.rfind("gaps:", 0) == 0) return from_gaps(parse_int_list(text.substr(5)));
    if (text.rfind("gens:", 0) == 0) return from_generators(parse_int_list(text.substr(5)));
    throw MalformedInputError("semigroup must be written as gaps:... or gens:...");
}

inline nlohmann::json semigroup_json(const NumericalSemigroup& s) {
    const InvariantSummary v = invariants(s);
    nlohmann::json j;
    j["frobenius"] = v.frobenius;
    j["genus"] = v.genus;
    j["multiplicity"] = v.multiplicity;
    j["type"] = v.type;
    j["depth"] = v.depth;
    j["gaps"] = s.gaps();
    j["pf"] = s.genus() > 0 ? pseudo_frobenius(s).elements : std::vector<Int>{};
    j["min_gens"] = minimal_generators(s);
    return j;
}

inline NumericalSemigroup semigroup_from_json(const nlohmann::json& j) {
    if (!j.contains("gaps") || !j["gaps"].is_array())
        throw MalformedInputError("semigroup JSON needs a \"gaps\" array");
    return from_gaps(j["gaps"].get<std::vector<Int>>());
}

}  // namespace gapset

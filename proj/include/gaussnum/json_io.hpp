#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gaussnum/automata.hpp"
#include "gaussnum/dependence.hpp"
#include "gaussnum/numeration.hpp"

namespace gaussnum {

using Json = nlohmann::ordered_json;

// {"base": "a+bi", "digits": ["...", ...]} with digits in canonical order.
Json to_json(const DigitSet& digits);
DigitSet digit_set_from_json(const Json& j);

// {"base", "digits", "states", "initial", "accepting", "transitions"}
Json to_json(const Dfa& dfa);
Dfa dfa_from_json(const Json& j);

std::string serialize_dfa(const Dfa& dfa);
Dfa parse_dfa(std::string_view text);

// {"m", "n", "z", "word_am", "word_u", "certified"}
Json to_json(const PrefixWitness& w);

Json to_json(const GroupWitness& w);
Json to_json(const DependenceVerdict& v);
Json to_json(const ResidualReport& r);

}  // namespace gaussnum

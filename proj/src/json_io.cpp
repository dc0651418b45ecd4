#include "gaussnum/json_io.hpp"

namespace gaussnum {

namespace {

Json digit_list(std::span<const GaussInt> digits) {
  Json out = Json::array();
  for (const GaussInt& d : digits) out.push_back(d.to_string());
  return out;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const DigitSet& digits) {
  Json j;
  j["base"] = digits.base().to_string();
  j["digits"] = digit_list(digits.digits());
  return j;
}

DigitSet digit_set_from_json(const Json& j) {
  GaussInt base = parse_gauss(field<std::string>(j, "base"));
  std::vector<GaussInt> digits;
  for (const auto& text : field<std::vector<std::string>>(j, "digits")) digits.push_back(parse_gauss(text));
  std::vector<GaussInt> given = digits;
  DigitSet set = DigitSet::from_digits(base, std::move(digits));
  if (!std::ranges::equal(given, set.digits())) {
    throw Error(ErrorCode::ParseError, "digits must be listed in (re, im) order");
  }
  return set;
}

Json to_json(const Dfa& dfa) {
  Json j = to_json(dfa.alphabet());
  j["states"] = dfa.state_count();
  j["initial"] = dfa.initial();
  j["accepting"] = dfa.accepting_states();
  j["transitions"] = dfa.transitions();
  return j;
}

Dfa dfa_from_json(const Json& j) {
  DigitSet alphabet = digit_set_from_json(j);
  const auto states = field<std::size_t>(j, "states");
  const auto initial = field<std::size_t>(j, "initial");
  auto rows = field<std::vector<std::vector<StateId>>>(j, "transitions");
  std::vector<bool> accepting(states, false);
  for (std::size_t s : field<std::vector<std::size_t>>(j, "accepting")) {
    if (s >= states) throw Error(ErrorCode::InvalidDfa, "accepting state " + std::to_string(s) + " out of range");
    accepting[s] = true;
  }
  return Dfa(std::move(alphabet), initial, std::move(rows), std::move(accepting));
}

std::string serialize_dfa(const Dfa& dfa) { return to_json(dfa).dump(); }

Dfa parse_dfa(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return dfa_from_json(j);
}

Json to_json(const PrefixWitness& w) {
  Json j;
  j["m"] = w.m;
  j["n"] = w.n;
  j["z"] = w.z.to_string();
  j["word_am"] = w.word_am().to_string();
  j["word_u"] = w.word_u().to_string();
  j["certified"] = w.certify();
  return j;
}

Json to_json(const GroupWitness& w) {
  Json j;
  j["m"] = w.m;
  j["n"] = w.n;
  j["u"] = w.u.to_string();
  j["residual"] = w.residual().to_string();
  j["err_num"] = w.err_num.get_str();
  j["err_den"] = w.err_den.get_str();
  j["certified"] = w.certify();
  return j;
}

Json to_json(const DependenceVerdict& v) {
  Json j;
  j["dependent"] = v.dependent;
  if (v.dependent) {
    j["r"] = v.r;
    j["s"] = v.s;
  }
  return j;
}

Json to_json(const ResidualReport& r) {
  Json j;
  j["k"] = r.prefix_depth;
  j["e"] = r.extension_depth;
  j["class_count"] = r.class_count;
  Json reps = Json::array();
  for (const Word& w : r.representatives) reps.push_back(w.to_string());
  j["representatives"] = std::move(reps);
  return j;
}

}  // namespace gaussnum

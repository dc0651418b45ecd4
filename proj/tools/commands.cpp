#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "gaussnum/acceptance.hpp"

namespace gaussnum::cli {

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  switch (status) {
    case Status::Ok: j["status"] = "ok"; break;
    case Status::NotFound: j["status"] = "not_found"; break;
    case Status::Error: j["status"] = "error"; break;
  }
  if (!message.empty()) j["message"] = message;
  return j;
}

int Report::exit_code() const {
  switch (status) {
    case Status::Ok: return 0;
    case Status::NotFound: return 2;
    case Status::Error: return 1;
  }
  return 1;
}

namespace {

Dfa load_dfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  // Accept the report printed by `dfa build` / `dfa min` as well as a bare DFA.
  if (j.is_object() && j.contains("results") && j["results"].contains("dfa")) return dfa_from_json(j["results"]["dfa"]);
  return dfa_from_json(j);
}

// "powers:A" or "integers"
LanguageOracle oracle_for(const std::string& set, const DigitSet& digits) {
  if (set == "integers") return integers_oracle(digits);
  if (set.rfind("powers:", 0) == 0) return powers_oracle(parse_gauss(set.substr(7)), digits);
  throw Error(ErrorCode::ParseError, "set must be 'integers' or 'powers:A', got '" + set + "'");
}

Json bools(const std::vector<bool>& values) {
  Json out = Json::array();
  for (bool v : values) out.push_back(v);
  return out;
}

// NUM/DEN with positive DEN
std::pair<mpz_class, mpz_class> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1), 10);
    if (sgn(den) <= 0 || sgn(num) < 0) throw std::invalid_argument("sign");
    return {num, den};
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bound must be NUM/DEN with NUM >= 0, DEN > 0, got '" + text + "'");
  }
}

}  // namespace

void cmd_digits(Report& r, const std::string& base) {
  r.inputs["base"] = base;
  const DigitSet digits = DigitSet::canonical(parse_gauss(base));
  r.results = to_json(digits);
  r.results["m3"] = digits.m3();
}

void cmd_encode(Report& r, const std::string& base, const std::string& z) {
  r.inputs["base"] = base;
  r.inputs["z"] = z;
  const DigitSet digits = DigitSet::canonical(parse_gauss(base));
  const Word w = encode(parse_gauss(z), digits);
  r.results["word"] = w.to_string();
  r.results["length"] = w.size();
}

void cmd_decode(Report& r, const std::string& base, const std::string& word) {
  r.inputs["base"] = base;
  r.inputs["word"] = word;
  const DigitSet digits = DigitSet::canonical(parse_gauss(base));
  const Word w = Word::parse(word);
  if (!w.well_formed()) throw Error(ErrorCode::InvalidWord, "word '" + word + "' has a leading zero");
  r.results["value"] = decode(w, digits).to_string();
}

void cmd_scan_bases(Report& r, long norm_min, long norm_max, long radius_sq, unsigned k_max) {
  r.inputs["norm_min"] = norm_min;
  r.inputs["norm_max"] = norm_max;
  r.inputs["radius_sq"] = radius_sq;
  r.inputs["k_max"] = k_max;
  if (norm_min < 5) throw Error(ErrorCode::BaseTooSmall, "norm_min must be >= 5");
  Json rows = Json::array();
  bool all_pass = true;
  long radius = 0;
  while ((radius + 1) * (radius + 1) <= norm_max) ++radius;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      const long n = x * x + y * y;
      if (n < norm_min || n > norm_max) continue;
      const GaussInt b(x, y);
      const DigitSet digits = DigitSet::canonical(b);
      const LengthBound bound = length_bound(digits);
      const bool size_ok = static_cast<long>(digits.size()) == n;
      bool roundtrip_ok = true, length_ok = true;
      long zr = 0;
      while ((zr + 1) * (zr + 1) <= radius_sq) ++zr;
      for (long zx = -zr; zx <= zr; ++zx) {
        for (long zy = -zr; zy <= zr; ++zy) {
          if (zx * zx + zy * zy > radius_sq) continue;
          const GaussInt z(zx, zy);
          const Word w = encode(z, digits);
          roundtrip_ok = roundtrip_ok && decode(w, digits) == z && w.well_formed();
          for (unsigned k = 0; k <= k_max; ++k) {
            if (bound.within_bound(z, k) && w.size() > k) length_ok = false;
          }
        }
      }
      const bool pass = size_ok && roundtrip_ok && length_ok;
      all_pass = all_pass && pass;
      Json row;
      row["base"] = b.to_string();
      row["norm"] = n;
      row["m3"] = digits.m3();
      row["digit_count_ok"] = size_ok;
      row["roundtrip_ok"] = roundtrip_ok;
      row["length_bound_ok"] = length_ok;
      row["pass"] = pass;
      rows.push_back(std::move(row));
    }
  }
  r.results["bases"] = std::move(rows);
  r.results["all_pass"] = all_pass;
  if (!all_pass) {
    r.status = Status::Error;
    r.message = "at least one base failed";
  }
}

void cmd_deptest(Report& r, const std::string& a, const std::string& b) {
  r.inputs["a"] = a;
  r.inputs["b"] = b;
  r.results = to_json(mult_dependent(parse_gauss(a), parse_gauss(b)));
}

void cmd_witness(Report& r, const std::string& a, const std::string& b, const std::string& u, const std::string& bound,
                   unsigned long m_max) {
  r.inputs["a"] = a;
  r.inputs["b"] = b;
  r.inputs["u"] = u;
  r.inputs["bound"] = bound;
  r.inputs["m_max"] = m_max;
  auto [num, den] = parse_fraction(bound);
  auto w = group_witness(parse_gauss(a), parse_gauss(b), parse_gauss(u), num, den, m_max);
  if (w) {
    r.results = to_json(*w);
  } else {
    r.status = Status::NotFound;
    r.results["searched_m"] = {1, m_max};
  }
}

void cmd_prefix(Report& r, const std::string& a, const std::string& b, const std::string& u, unsigned long n_min,
                  unsigned long budget, unsigned depth) {
  r.inputs["a"] = a;
  r.inputs["b"] = b;
  r.inputs["u"] = u;
  r.inputs["n_min"] = n_min;
  r.inputs["budget"] = budget;
  r.inputs["depth"] = depth;
  const auto chain = prefix_chain(parse_gauss(a), parse_gauss(b), parse_gauss(u), n_min, budget, depth);
  Json links = Json::array();
  for (const PrefixWitness& w : chain) links.push_back(to_json(w));
  r.results["chain"] = std::move(links);
  r.results["searched_m"] = {1, budget};
  if (chain.empty()) {
    r.status = Status::NotFound;
  } else if (chain.size() < static_cast<std::size_t>(depth) + 1) {
    r.status = Status::NotFound;
    r.message = "chain stopped after " + std::to_string(chain.size()) + " link(s)";
  }
}

void cmd_residuals(Report& r, const std::string& a, const std::string& base, unsigned k, unsigned e) {
  r.inputs["a"] = a;
  r.inputs["base"] = base;
  r.inputs["k"] = k;
  r.inputs["e"] = e;
  const GaussInt b = parse_gauss(base);
  const DigitSet digits = DigitSet::canonical(b);
  r.results["subject"] = to_json(residual_signatures(powers_oracle(parse_gauss(a), digits), k, e));
  r.results["control"] = to_json(residual_signatures(powers_oracle(b, digits), k, e));
}

void cmd_pump(Report& r, const std::string& base, const std::string& set, const std::string& word, unsigned k,
                unsigned reps) {
  r.inputs["base"] = base;
  r.inputs["set"] = set;
  r.inputs["word"] = word;
  r.inputs["k"] = k;
  r.inputs["reps"] = reps;
  const DigitSet digits = DigitSet::canonical(parse_gauss(base));
  const auto probe = zero_pump_probe(oracle_for(set, digits), Word::parse(word), k, reps);
  r.results["members"] = bools(probe);
  r.results["all_members"] = std::ranges::find(probe, false) == probe.end();
}

void cmd_dfa_build(Report& r, const std::string& kind, const std::string& base) {
  r.inputs["kind"] = kind;
  r.inputs["base"] = base;
  const GaussInt b = parse_gauss(base);
  if (kind == "powers") {
    r.results["dfa"] = to_json(powers_dfa(b));
  } else if (kind == "integers") {
    r.results["dfa"] = to_json(integers_dfa(b));
  } else {
    throw Error(ErrorCode::ParseError, "kind must be 'powers' or 'integers'");
  }
}

void cmd_dfa_run(Report& r, const std::string& file, const std::string& word) {
  r.inputs["file"] = file;
  r.inputs["word"] = word;
  r.results["accepted"] = run(load_dfa(file), Word::parse(word));
}

void cmd_dfa_min(Report& r, const std::string& file) {
  r.inputs["file"] = file;
  const Dfa d = load_dfa(file);
  const Dfa m = minimize(d);
  r.results["states_before"] = d.state_count();
  r.results["states_after"] = m.state_count();
  r.results["dfa"] = to_json(m);
}

void cmd_dfa_equiv(Report& r, const std::string& lhs, const std::string& rhs) {
  r.inputs["lhs"] = lhs;
  r.inputs["rhs"] = rhs;
  r.results["equivalent"] = equivalent(load_dfa(lhs), load_dfa(rhs));
}

void cmd_dfa_falsify(Report& r, const std::string& file, const std::string& set, unsigned max_len) {
  r.inputs["file"] = file;
  r.inputs["set"] = set;
  r.inputs["max_len"] = max_len;
  const Dfa d = load_dfa(file);
  auto w = dfa_oracle_disagreement(d, oracle_for(set, d.alphabet()), max_len);
  r.results["disagreement"] = w ? Json(w->to_string()) : Json(nullptr);
}

void cmd_verify(Report& r, const std::vector<int>& only) {
  Json ids = Json::array();
  for (int id : only) ids.push_back(id);
  r.inputs["criteria"] = ids;
  std::vector<acceptance::CriterionResult> results;
  if (only.empty()) {
    results = acceptance::run_all();
  } else {
    for (int id : only) results.push_back(acceptance::run_criterion(id));
  }
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : results) {
    Json row;
    row["id"] = c.id;
    row["title"] = c.title;
    row["passed"] = c.passed();
    row["seconds"] = std::round(c.seconds * 1000) / 1000;
    row["time_limit"] = c.time_limit;
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    all = all && c.passed();
  }
  r.results["criteria"] = std::move(rows);
  r.results["all_passed"] = all;
  if (!all) {
    r.status = Status::Error;
    r.message = "acceptance criteria failed";
  }
}

}  // namespace gaussnum::cli

#include <doctest.h>

#include <random>

#include "gaussnum/automata.hpp"

using namespace gaussnum;

namespace {

GaussInt g(const char* text) { return parse_gauss(text); }
Word w(const char* text) { return Word::parse(text); }

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Dfa random_dfa(const DigitSet& alphabet, std::mt19937& rng, std::size_t max_states = 6) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::uniform_int_distribution<std::size_t> target(0, n - 1);
  std::vector<std::vector<StateId>> rows(n, std::vector<StateId>(alphabet.size()));
  std::vector<bool> accepting(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (auto& t : rows[s]) t = target(rng);
    accepting[s] = std::bernoulli_distribution(0.5)(rng);
  }
  return Dfa(alphabet, target(rng), std::move(rows), std::move(accepting));
}

// Brute-force language comparison on all words up to a length.
bool agree_up_to(const Dfa& a, const Dfa& b, unsigned len) {
  bool same = true;
  for_each_word(a.alphabet(), len, [&](const Word& word, std::span<const std::size_t>) {
    same = run(a, word) == run(b, word);
    return same;
  });
  return same;
}

const DigitSet& d5() {
  static const DigitSet d = DigitSet::canonical(GaussInt(2, 1));
  return d;
}

}  // namespace

TEST_CASE("shortlex enumeration order") {
  std::vector<std::string> seen;
  for_each_word(d5(), 2, [&](const Word& word, std::span<const std::size_t> letters) {
    CHECK(letters.size() == word.size());
    seen.push_back(word.to_string());
    return seen.size() < 8;
  });
  CHECK(seen == std::vector<std::string>{"", "-1", "0-1i", "0", "0+1i", "1", "-1,-1", "-1,0-1i"});
  std::size_t count = 0;
  for_each_word(d5(), 3, [&](const Word&, std::span<const std::size_t>) { return ++count > 0; });
  CHECK(count == 1 + 5 + 25 + 125);
}

TEST_CASE("Dfa construction is validated") {
  CHECK(code_of([] { Dfa(d5(), 0, {{0, 0, 0, 0}}, {true}); }) == ErrorCode::InvalidDfa);
  CHECK(code_of([] { Dfa(d5(), 1, {{0, 0, 0, 0, 0}}, {true}); }) == ErrorCode::InvalidDfa);
  CHECK(code_of([] { Dfa(d5(), 0, {{0, 0, 0, 0, 3}}, {true}); }) == ErrorCode::InvalidDfa);
  CHECK(code_of([] { Dfa(d5(), 0, {}, {}); }) == ErrorCode::InvalidDfa);
}

TEST_CASE("powers_dfa") {
  const Dfa p = powers_dfa(g("2+1i"));
  CHECK(run(p, w("1,0")));
  CHECK_FALSE(run(p, Word{}));
  CHECK_FALSE(run(p, w("1,0-1i")));
  CHECK(run(p, w("1")));
  CHECK(run(p, w("1,0,0")));
  CHECK_FALSE(run(p, w("0+1i,0")));
  CHECK_FALSE(run(p, w("0,1")));
  CHECK(code_of([&] { run(p, w("2")); }) == ErrorCode::ForeignDigit);
  const Dfa m = minimize(p);
  CHECK(m.state_count() == 3);
  CHECK(equivalent(p, m));
  CHECK_FALSE(dfa_oracle_disagreement(p, powers_oracle(g("2+1i"), d5()), 6).has_value());

  for (const char* base : {"-1+2i", "3", "1+3i"}) {
    const Dfa q = powers_dfa(g(base));
    CHECK(minimize(q).state_count() == 3);
    CHECK_FALSE(dfa_oracle_disagreement(q, powers_oracle(g(base), q.alphabet()), 4).has_value());
  }
}

TEST_CASE("integers_dfa") {
  const Dfa z = integers_dfa(3);
  const DigitSet d = DigitSet::canonical(3);
  CHECK(run(z, encode(-7, d)));
  for (long n = -100; n <= 100; ++n) CHECK(run(z, encode(n, d)));
  CHECK_FALSE(run(z, encode(GaussInt::i(), d)));
  CHECK(run(z, Word{}));
  CHECK_FALSE(run(z, w("0,1")));
  CHECK_FALSE(dfa_oracle_disagreement(z, integers_oracle(d), 4).has_value());
  CHECK_FALSE(dfa_oracle_disagreement(integers_dfa(5), integers_oracle(DigitSet::canonical(5)), 3).has_value());
  for (const char* bad : {"2+1i", "4", "-3", "0+3i"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { integers_dfa(g(bad)); }) == ErrorCode::BaseNotRealOdd);
  }
}

TEST_CASE("language oracles") {
  const LanguageOracle pb = powers_oracle(g("2+1i"), d5());
  CHECK(pb(w("1")));
  CHECK(pb(w("1,0")));
  CHECK_FALSE(pb(Word{}));
  CHECK_FALSE(pb(w("0,1")));
  const LanguageOracle pa = powers_oracle(g("1+2i"), d5());
  CHECK(pa(encode(pow(g("1+2i"), 2), d5())));
  CHECK(pa(w("1,-1,0-1i")));
  CHECK_FALSE(pa(w("1,0")));
  const LanguageOracle ints = integers_oracle(d5());
  CHECK(ints(w("0-1i,0+1i,-1,0")));
  CHECK(ints(Word{}));
  CHECK_FALSE(ints(w("0,1")));
  CHECK(code_of([] { powers_oracle(g("0+1i"), d5()); }) == ErrorCode::BaseIsUnitOrZero);
}

TEST_CASE("boolean closure") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Dfa x = random_dfa(d5(), rng), y = random_dfa(d5(), rng);
    CHECK(is_empty(product(x, x, BoolOp::Diff)));
    CHECK(equivalent(complement(product(x, y, BoolOp::And)), product(complement(x), complement(y), BoolOp::Or)));
    const Dfa both = product(x, y, BoolOp::And), either = product(x, y, BoolOp::Or), diff = product(x, y, BoolOp::Diff);
    for_each_word(d5(), 3, [&](const Word& word, std::span<const std::size_t>) {
      const bool a = run(x, word), b = run(y, word);
      CHECK(run(both, word) == (a && b));
      CHECK(run(either, word) == (a || b));
      CHECK(run(diff, word) == (a && !b));
      CHECK(run(complement(x), word) == !a);
      return true;
    });
  }
  const Dfa other = powers_dfa(3);
  CHECK(code_of([&] { product(powers_dfa(g("2+1i")), other, BoolOp::And); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("minimize") {
  std::mt19937 rng(12);
  for (int i = 0; i < 60; ++i) {
    const Dfa x = random_dfa(d5(), rng, 9);
    const Dfa m = minimize(x);
    CHECK(minimize(m) == m);
    CHECK(equivalent(x, m));
    CHECK(agree_up_to(x, m, 4));
    CHECK(m.state_count() <= x.state_count());
    CHECK(m.initial() == 0);
  }

  // A padded copy of powers_dfa with duplicated and unreachable states.
  const Dfa p = powers_dfa(g("2+1i"));
  std::vector<std::vector<StateId>> rows = p.transitions();
  for (auto& t : rows[1]) {
    if (t == 2) t = 3;  // 3 is a second dead state
  }
  rows.push_back(std::vector<StateId>(5, 3));
  rows.push_back(std::vector<StateId>(5, 0));  // 4 is unreachable
  const Dfa padded(p.alphabet(), 0, rows, {false, true, false, false, true});
  CHECK(padded.state_count() == 5);
  CHECK(minimize(padded) == minimize(p));
  CHECK(equivalent(padded, p));

  // Non-equivalent DFAs are told apart.
  CHECK_FALSE(equivalent(p, complement(p)));
}

TEST_CASE("residual signatures") {
  const LanguageOracle control = powers_oracle(g("2+1i"), d5());
  const LanguageOracle independent = powers_oracle(g("1+2i"), d5());
  CHECK(residual_signatures(control, 0, 3).class_count == 1);
  CHECK(residual_signatures(independent, 0, 2).class_count == 1);
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned e = 0; e <= 3; ++e) {
      CHECK(residual_signatures(control, k, e).class_count <= 4);
    }
  }
  // Frozen by an independent enumeration over exact Gaussian arithmetic.
  const std::vector<std::size_t> frozen{1, 4, 8, 12, 15};
  for (unsigned k = 0; k <= 4; ++k) CHECK(residual_signatures(independent, k, 3).class_count == frozen[k]);

  // Monotone in both depths.
  for (unsigned k = 0; k <= 3; ++k) {
    std::size_t last = 0;
    for (unsigned e = 0; e <= 3; ++e) {
      const std::size_t c = residual_signatures(independent, k, e).class_count;
      CHECK(c >= last);
      last = c;
    }
  }

  // Lower bound on the size of any DFA that agrees up to length k + e.
  const Dfa p = minimize(powers_dfa(g("2+1i")));
  for (unsigned k = 0; k <= 3; ++k) CHECK(residual_signatures(control, k, 2).class_count <= p.state_count());
  const DigitSet three = DigitSet::canonical(3);
  const Dfa z = minimize(integers_dfa(3));
  CHECK(residual_signatures(integers_oracle(three), 2, 2).class_count <= z.state_count());
  CHECK(residual_signatures(integers_oracle(three), 2, 2).class_count == 3);

  const ResidualReport r = residual_signatures(independent, 2, 2);
  CHECK(r.representatives.size() == r.class_count);
  CHECK(r.representatives.front().empty());
  CHECK(code_of([&] { residual_signatures(control, 8, 4); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("zero pumping") {
  const LanguageOracle pb = powers_oracle(g("2+1i"), d5());
  for (unsigned k : {1u, 2u, 5u}) {
    const auto probe = zero_pump_probe(pb, w("1,0"), k, 6);
    CHECK(probe.size() == 7);
    CHECK(std::ranges::find(probe, false) == probe.end());
  }
  const DigitSet three = DigitSet::canonical(3);
  const auto ints3 = zero_pump_probe(integers_oracle(three), encode(9, three), 2, 8);
  CHECK(encode(9, three) == w("1,0,0"));
  CHECK(std::ranges::find(ints3, false) == ints3.end());

  const auto ints5 = zero_pump_probe(integers_oracle(d5()), encode(5, d5()), 1, 8);
  CHECK(ints5 == std::vector<bool>{true, false, false, false, false, false, false, false, false});

  CHECK(code_of([&] { zero_pump_probe(pb, Word{}, 1, 2); }) == ErrorCode::EmptyWord);
  CHECK(code_of([&] { zero_pump_probe(pb, w("0,1"), 1, 2); }) == ErrorCode::InvalidWord);
}

TEST_CASE("disagreement search") {
  const Dfa p = powers_dfa(g("2+1i"));
  auto found = dfa_oracle_disagreement(p, powers_oracle(g("1+2i"), d5()), 5);
  REQUIRE(found.has_value());
  CHECK(*found == w("1,0"));
  CHECK(encode(g("1+2i"), d5()) == w("1,-1,0-1i"));

  const DigitSet three = DigitSet::canonical(3);
  CHECK(code_of([&] { dfa_oracle_disagreement(p, integers_oracle(three), 3); }) == ErrorCode::AlphabetMismatch);
  CHECK(code_of([&] { dfa_oracle_disagreement(p, powers_oracle(g("2+1i"), d5()), 12); }) ==
        ErrorCode::BudgetExceeded);
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussnum/numeration.hpp"

namespace gaussnum {

using StateId = std::size_t;

/// Complete DFA whose letters are the digits of a DigitSet, addressed by
/// their index in canonical (re, im) order.
class Dfa {
 public:
  /// `transitions[s][i]` is the successor of state s on digit i. Throws
  /// InvalidDfa when a row has the wrong width, a target is out of range, or
  /// the initial state does not exist.
  Dfa(DigitSet alphabet, StateId initial, std::vector<std::vector<StateId>> transitions,
      std::vector<bool> accepting);

  const DigitSet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return accepting_.size(); }
  std::size_t letter_count() const { return alphabet_.size(); }
  StateId initial() const { return initial_; }
  StateId next(StateId state, std::size_t letter) const { return table_[state * letter_count() + letter]; }
  bool is_accepting(StateId state) const { return accepting_[state]; }
  std::vector<StateId> accepting_states() const;
  std::vector<std::vector<StateId>> transitions() const;

  StateId run_letters(std::span<const std::size_t> letters) const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ && a.table_ == b.table_ &&
           a.accepting_ == b.accepting_;
  }

 private:
  DigitSet alphabet_;
  StateId initial_;
  std::vector<StateId> table_;
  std::vector<bool> accepting_;
};

bool run(const Dfa& dfa, const Word& word);

enum class BoolOp { And, Or, Diff };

Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op);
Dfa complement(const Dfa& dfa);

/// Trims unreachable states, merges equivalent states by partition
/// refinement, and numbers states in BFS order from the initial state over
/// digit order. Equivalent inputs yield identical outputs.
Dfa minimize(const Dfa& dfa);

bool is_empty(const Dfa& dfa);
bool equivalent(const Dfa& lhs, const Dfa& rhs);

/// Accepts the words 1 0^n, i.e. the expansions of b^n.
Dfa powers_dfa(const GaussInt& base);

/// For a rational odd base >= 3: the well-formed words with only real digits.
Dfa integers_dfa(const GaussInt& base);

/// Membership-defined language over a digit alphabet. Words with a leading
/// zero digit are never members; the empty word is a member iff 0 is.
struct LanguageOracle {
  DigitSet alphabet;
  std::function<bool(const Word&)> membership;
  std::string description;

  bool operator()(const Word& w) const { return membership(w); }
};

LanguageOracle powers_oracle(const GaussInt& a, const DigitSet& digits);
LanguageOracle integers_oracle(const DigitSet& digits);

/// Upper limit on |D|^(length) for the exhaustive harnesses below.
inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

struct ResidualReport {
  unsigned prefix_depth = 0;
  unsigned extension_depth = 0;
  std::size_t class_count = 0;
  std::vector<Word> representatives;  // shortlex-least member of each class
};

/// Groups the words of length <= k by their membership vector over all
/// extensions of length <= e. Throws BudgetExceeded when |D|^(k+e) > 10^8.
ResidualReport residual_signatures(const LanguageOracle& language, unsigned k, unsigned e);

/// Membership of w with j*k zeros inserted after its leading digit, for
/// j = 0..reps.
std::vector<bool> zero_pump_probe(const LanguageOracle& language, const Word& word, unsigned k, unsigned reps);

/// Shortest, then lexicographically least, word on which the DFA and the
/// oracle disagree.
std::optional<Word> dfa_oracle_disagreement(const Dfa& dfa, const LanguageOracle& language, unsigned max_len);

/// Calls visit(word, letters) on every word of length <= max_len in
/// shortlex order (lengths ascending, digit order within a length) until
/// visit returns false.
void for_each_word(const DigitSet& alphabet, unsigned max_len,
                   const std::function<bool(const Word&, std::span<const std::size_t>)>& visit);

}  // namespace gaussnum

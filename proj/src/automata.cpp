#include "gaussnum/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace gaussnum {

Dfa::Dfa(DigitSet alphabet, StateId initial, std::vector<std::vector<StateId>> transitions,
         std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), initial_(initial), accepting_(std::move(accepting)) {
  const std::size_t n = accepting_.size();
  if (transitions.size() != n) {
    throw Error(ErrorCode::InvalidDfa, std::to_string(transitions.size()) + " transition rows for " +
                                           std::to_string(n) + " states");
  }
  if (n == 0 || initial_ >= n) throw Error(ErrorCode::InvalidDfa, "initial state out of range");
  table_.reserve(n * alphabet_.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (transitions[s].size() != alphabet_.size()) {
      throw Error(ErrorCode::InvalidDfa, "row " + std::to_string(s) + " has " + std::to_string(transitions[s].size()) +
                                             " entries, alphabet has " + std::to_string(alphabet_.size()));
    }
    for (StateId t : transitions[s]) {
      if (t >= n) throw Error(ErrorCode::InvalidDfa, "transition target " + std::to_string(t) + " out of range");
      table_.push_back(t);
    }
  }
}

std::vector<StateId> Dfa::accepting_states() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < state_count(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<StateId>> Dfa::transitions() const {
  std::vector<std::vector<StateId>> rows(state_count());
  for (StateId s = 0; s < state_count(); ++s) {
    rows[s].assign(table_.begin() + s * letter_count(), table_.begin() + (s + 1) * letter_count());
  }
  return rows;
}

StateId Dfa::run_letters(std::span<const std::size_t> letters) const {
  StateId s = initial_;
  for (std::size_t l : letters) s = next(s, l);
  return s;
}

bool run(const Dfa& dfa, const Word& word) {
  StateId s = dfa.initial();
  for (const GaussInt& d : word.digits) {
    auto letter = dfa.alphabet().index_of(d);
    if (!letter) {
      throw Error(ErrorCode::ForeignDigit, d.to_string() + " is not in the alphabet of base " +
                                               dfa.alphabet().base().to_string());
    }
    s = dfa.next(s, *letter);
  }
  return dfa.is_accepting(s);
}

Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op) {
  if (!(lhs.alphabet() == rhs.alphabet())) throw Error(ErrorCode::AlphabetMismatch, "product of DFAs");
  const std::size_t letters = lhs.letter_count();
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId a, StateId b) {
    auto [it, fresh] = index.emplace(std::pair{a, b}, pairs.size());
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(lhs.initial(), rhs.initial());
  std::vector<std::vector<StateId>> rows;
  std::vector<bool> accepting;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    std::vector<StateId> row(letters);
    for (std::size_t l = 0; l < letters; ++l) row[l] = intern(lhs.next(a, l), rhs.next(b, l));
    rows.push_back(std::move(row));
    bool x = lhs.is_accepting(a), y = rhs.is_accepting(b);
    switch (op) {
      case BoolOp::And: accepting.push_back(x && y); break;
      case BoolOp::Or: accepting.push_back(x || y); break;
      case BoolOp::Diff: accepting.push_back(x && !y); break;
    }
  }
  return Dfa(lhs.alphabet(), 0, std::move(rows), std::move(accepting));
}

Dfa complement(const Dfa& dfa) {
  std::vector<bool> accepting(dfa.state_count());
  for (StateId s = 0; s < dfa.state_count(); ++s) accepting[s] = !dfa.is_accepting(s);
  return Dfa(dfa.alphabet(), dfa.initial(), dfa.transitions(), std::move(accepting));
}

namespace {

// BFS order from the initial state; unreachable states map to npos.
std::vector<StateId> bfs_order(std::size_t n, StateId initial, std::size_t letters,
                               const std::function<StateId(StateId, std::size_t)>& next) {
  constexpr StateId npos = static_cast<StateId>(-1);
  std::vector<StateId> order(n, npos);
  std::deque<StateId> queue{initial};
  order[initial] = 0;
  StateId count = 1;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < letters; ++l) {
      StateId t = next(s, l);
      if (order[t] == npos) {
        order[t] = count++;
        queue.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  constexpr StateId npos = static_cast<StateId>(-1);
  const std::size_t letters = dfa.letter_count();
  const std::vector<StateId> reach =
      bfs_order(dfa.state_count(), dfa.initial(), letters, [&](StateId s, std::size_t l) { return dfa.next(s, l); });
  std::vector<StateId> live;
  for (StateId s = 0; s < dfa.state_count(); ++s) {
    if (reach[s] != npos) live.push_back(s);
  }

  // Moore refinement: split blocks by (block, successor blocks) until stable.
  std::vector<StateId> block(dfa.state_count(), npos);
  for (StateId s : live) block[s] = dfa.is_accepting(s) ? 1 : 0;
  std::size_t block_count = 0;
  while (true) {
    std::map<std::vector<StateId>, StateId> signatures;
    std::vector<StateId> refined(dfa.state_count(), npos);
    for (StateId s : live) {
      std::vector<StateId> sig{block[s]};
      for (std::size_t l = 0; l < letters; ++l) sig.push_back(block[dfa.next(s, l)]);
      auto [it, fresh] = signatures.emplace(std::move(sig), signatures.size());
      refined[s] = it->second;
    }
    block = std::move(refined);
    if (signatures.size() == block_count) break;
    block_count = signatures.size();
  }

  std::vector<StateId> representative(block_count, npos);
  for (StateId s : live) {
    if (representative[block[s]] == npos) representative[block[s]] = s;
  }
  auto quotient_next = [&](StateId b, std::size_t l) { return block[dfa.next(representative[b], l)]; };
  const std::vector<StateId> order = bfs_order(block_count, block[dfa.initial()], letters, quotient_next);

  std::vector<std::vector<StateId>> rows(block_count, std::vector<StateId>(letters));
  std::vector<bool> accepting(block_count);
  for (StateId b = 0; b < block_count; ++b) {
    for (std::size_t l = 0; l < letters; ++l) rows[order[b]][l] = order[quotient_next(b, l)];
    accepting[order[b]] = dfa.is_accepting(representative[b]);
  }
  return Dfa(dfa.alphabet(), 0, std::move(rows), std::move(accepting));
}

bool is_empty(const Dfa& dfa) {
  constexpr StateId npos = static_cast<StateId>(-1);
  const std::vector<StateId> reach = bfs_order(dfa.state_count(), dfa.initial(), dfa.letter_count(),
                                               [&](StateId s, std::size_t l) { return dfa.next(s, l); });
  for (StateId s = 0; s < dfa.state_count(); ++s) {
    if (reach[s] != npos && dfa.is_accepting(s)) return false;
  }
  return true;
}

bool equivalent(const Dfa& lhs, const Dfa& rhs) {
  return is_empty(product(lhs, rhs, BoolOp::Diff)) && is_empty(product(rhs, lhs, BoolOp::Diff));
}

Dfa powers_dfa(const GaussInt& base) {
  DigitSet digits = DigitSet::canonical(base);
  const std::size_t one = *digits.index_of(GaussInt(1));
  const std::size_t zero = digits.zero_index();
  // 0: start, 1: seen 1 0^n, 2: dead
  std::vector<std::vector<StateId>> rows(3, std::vector<StateId>(digits.size(), 2));
  rows[0][one] = 1;
  rows[1][zero] = 1;
  return Dfa(digits, 0, std::move(rows), {false, true, false});
}

Dfa integers_dfa(const GaussInt& base) {
  if (!base.is_real() || base.re < 3 || mpz_even_p(base.re.get_mpz_t())) {
    throw Error(ErrorCode::BaseNotRealOdd, base.to_string() + " is not a rational odd integer >= 3");
  }
  DigitSet digits = DigitSet::canonical(base);
  // 0: start (accepts the empty word), 1: real digits so far, 2: dead
  std::vector<std::vector<StateId>> rows(3, std::vector<StateId>(digits.size(), 2));
  for (std::size_t l = 0; l < digits.size(); ++l) {
    if (!digits[l].is_real()) continue;
    rows[1][l] = 1;
    if (!digits[l].is_zero()) rows[0][l] = 1;
  }
  return Dfa(digits, 0, std::move(rows), {true, true, false});
}

LanguageOracle powers_oracle(const GaussInt& a, const DigitSet& digits) {
  if (a.norm() <= 1) throw Error(ErrorCode::BaseIsUnitOrZero, a.to_string() + " has norm <= 1");
  return LanguageOracle{
      digits,
      [a, digits](const Word& w) {
        if (w.empty() || !w.well_formed()) return false;
        return is_power_of(decode(w, digits), a).has_value();
      },
      "powers of " + a.to_string() + " in base " + digits.base().to_string()};
}

LanguageOracle integers_oracle(const DigitSet& digits) {
  return LanguageOracle{
      digits,
      [digits](const Word& w) {
        if (!w.well_formed()) return false;
        return decode(w, digits).is_real();
      },
      "rational integers in base " + digits.base().to_string()};
}

namespace {

// |D|^length, saturating above the budget.
std::uint64_t word_count(std::size_t letters, unsigned length) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < length; ++i) {
    total *= letters;
    if (total > kEnumerationBudget) return kEnumerationBudget + 1;
  }
  return total;
}

void check_budget(std::size_t letters, unsigned length, const char* what) {
  if (word_count(letters, length) > kEnumerationBudget) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": " + std::to_string(letters) + "^" +
                                               std::to_string(length) + " words exceed the enumeration budget");
  }
}

}  // namespace

void for_each_word(const DigitSet& alphabet, unsigned max_len,
                   const std::function<bool(const Word&, std::span<const std::size_t>)>& visit) {
  const std::size_t letters = alphabet.size();
  for (unsigned len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> idx(len, 0);
    Word w;
    w.digits.assign(len, alphabet[0]);
    while (true) {
      if (!visit(w, idx)) return;
      // odometer, last position fastest
      bool wrapped = true;
      for (std::size_t pos = len; pos-- > 0;) {
        if (++idx[pos] < letters) {
          w.digits[pos] = alphabet[idx[pos]];
          wrapped = false;
          break;
        }
        idx[pos] = 0;
        w.digits[pos] = alphabet[0];
      }
      if (wrapped) break;
    }
  }
}

ResidualReport residual_signatures(const LanguageOracle& language, unsigned k, unsigned e) {
  check_budget(language.alphabet.size(), k + e, "residual_signatures");
  std::vector<Word> extensions;
  for_each_word(language.alphabet, e, [&](const Word& v, std::span<const std::size_t>) {
    extensions.push_back(v);
    return true;
  });

  ResidualReport report;
  report.prefix_depth = k;
  report.extension_depth = e;
  std::unordered_map<std::string, std::size_t> classes;
  Word joined;
  std::string signature(extensions.size(), '0');
  for_each_word(language.alphabet, k, [&](const Word& u, std::span<const std::size_t>) {
    for (std::size_t i = 0; i < extensions.size(); ++i) {
      const Word& v = extensions[i];
      joined.digits.resize(u.size() + v.size());
      std::copy(u.digits.begin(), u.digits.end(), joined.digits.begin());
      std::copy(v.digits.begin(), v.digits.end(), joined.digits.begin() + static_cast<std::ptrdiff_t>(u.size()));
      signature[i] = language(joined) ? '1' : '0';
    }
    if (classes.emplace(signature, classes.size()).second) report.representatives.push_back(u);
    return true;
  });
  report.class_count = classes.size();
  return report;
}

std::vector<bool> zero_pump_probe(const LanguageOracle& language, const Word& word, unsigned k, unsigned reps) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "zero pumping needs a nonempty word");
  if (!word.well_formed()) throw Error(ErrorCode::InvalidWord, "word " + word.to_string() + " has a leading zero");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "pump period must be positive");
  std::vector<bool> out;
  out.reserve(reps + 1);
  for (unsigned j = 0; j <= reps; ++j) {
    Word pumped;
    pumped.digits.push_back(word.digits.front());
    pumped.digits.insert(pumped.digits.end(), static_cast<std::size_t>(j) * k, GaussInt(0));
    pumped.digits.insert(pumped.digits.end(), word.digits.begin() + 1, word.digits.end());
    out.push_back(language(pumped));
  }
  return out;
}

std::optional<Word> dfa_oracle_disagreement(const Dfa& dfa, const LanguageOracle& language, unsigned max_len) {
  if (!(dfa.alphabet() == language.alphabet)) throw Error(ErrorCode::AlphabetMismatch, "DFA vs oracle alphabet");
  check_budget(language.alphabet.size(), max_len, "dfa_oracle_disagreement");
  std::optional<Word> found;
  for_each_word(language.alphabet, max_len, [&](const Word& w, std::span<const std::size_t> letters) {
    if (dfa.is_accepting(dfa.run_letters(letters)) != language(w)) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace gaussnum

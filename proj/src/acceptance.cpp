#include "gaussnum/acceptance.hpp"

#include <algorithm>
#include <chrono>

#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "gaussnum/automata.hpp"
#include "gaussnum/dependence.hpp"
#include "gaussnum/json_io.hpp"
#include "gaussnum/numeration.hpp"

namespace gaussnum::acceptance {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) log << "; ";
      ok = false;
      log << what;
    }
  }
};

const std::vector<GaussInt>& scan_bases() {
  static const std::vector<GaussInt> bases{{2, 1}, {-1, 2}, {-2, 1}, {3, 0}, {1, 3}};
  return bases;
}

template <typename F>
void for_disc(long radius_sq, F&& f) {
  long r = 0;
  while ((r + 1) * (r + 1) <= radius_sq) ++r;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) {
      if (x * x + y * y <= radius_sq) f(x, y);
    }
  }
}

// Box membership of d/b straight from the defining inequalities, in machine integers.
bool in_unit_box(long x, long y, long br, long bi) {
  const long n = br * br + bi * bi;
  const long re = x * br + y * bi;   // Re(d * conj b)
  const long im = y * br - x * bi;   // Im(d * conj b)
  return -n <= 2 * re && 2 * re < n && -n <= 2 * im && 2 * im < n;
}

void criterion_digit_sets(Outcome& out) {
  const std::vector<GaussInt> five{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
  for (GaussInt b : {GaussInt(2, 1), GaussInt(-1, 2), GaussInt(-2, 1)}) {
    const DigitSet d = DigitSet::canonical(b);
    out.expect(std::ranges::equal(d.digits(), five), "canonical(" + b.to_string() + ") != {0, +-1, +-i}");
  }
  int bases = 0;
  for (long br = -10; br <= 10; ++br) {
    for (long bi = -10; bi <= 10; ++bi) {
      const long n = br * br + bi * bi;
      if (n < 5 || n > 100) continue;
      ++bases;
      const DigitSet d = DigitSet::canonical(GaussInt(br, bi));
      const std::string tag = GaussInt(br, bi).to_string();
      out.expect(static_cast<long>(d.size()) == n, tag + ": digit count != norm");
      // Independent oracle: scan the whole [-n, n]^2 square with the box test.
      std::vector<GaussInt> oracle;
      for (long x = -n; x <= n; ++x) {
        for (long y = -n; y <= n; ++y) {
          if (in_unit_box(x, y, br, bi)) oracle.emplace_back(x, y);
        }
      }
      out.expect(std::ranges::equal(d.digits(), oracle), tag + ": digits differ from box enumeration");
      // Pairwise incongruence: b | (x, y) iff (x, y) * conj(b) == 0 mod n.
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          const long x = mpz_class(d[i].re - d[j].re).get_si(), y = mpz_class(d[i].im - d[j].im).get_si();
          const long re = x * br + y * bi, im = y * br - x * bi;
          out.expect(re % n != 0 || im % n != 0, tag + ": congruent digits " + d[i].to_string() + ", " +
                                                     d[j].to_string());
        }
      }
    }
  }
  out.log << (out.ok ? "" : "; ") << bases << " bases scanned";
}

void criterion_uniqueness(Outcome& out) {
  double slowest = 0;
  for (const GaussInt& b : scan_bases()) {
    const auto start = std::chrono::steady_clock::now();
    const DigitSet d = DigitSet::canonical(b);
    std::size_t failures = 0;
    for_disc(10'000, [&](long x, long y) {
      GaussInt z(x, y);
      Word w = encode(z, d);
      if (!(decode(w, d) == z) || !w.well_formed()) ++failures;
    });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(failures == 0, b.to_string() + ": " + std::to_string(failures) + " round-trip failures");
    out.expect(seconds < 10.0, b.to_string() + ": round trips took " + std::to_string(seconds) + " s");
    slowest = std::max(slowest, seconds);
  }
  const DigitSet d = DigitSet::canonical(GaussInt(2, 1));
  std::size_t words = 0, failures = 0;
  for_each_word(d, 5, [&](const Word& w, std::span<const std::size_t>) {
    if (!w.well_formed()) return true;
    ++words;
    if (!(encode(decode(w, d), d) == w)) ++failures;
    return true;
  });
  out.expect(failures == 0, std::to_string(failures) + " words fail encode(decode(w)) == w");
  out.log << (out.ok ? "" : "; ") << "slowest base " << std::fixed << std::setprecision(2) << slowest << "s; " << words
          << " valid words of length <= 5 checked";
}

void criterion_length_bound(Outcome& out) {
  for (const GaussInt& b : scan_bases()) {
    const DigitSet d = DigitSet::canonical(b);
    const LengthBound bound = length_bound(b);
    const unsigned m3 = max_length_in_disc(9, d);
    out.expect(bound.m3 == m3, b.to_string() + ": stored M(3) differs from enumeration");
    std::size_t violations = 0;
    for_disc(10'000, [&](long x, long y) {
      GaussInt z(x, y);
      const std::size_t len = word_length(z, d);
      for (unsigned long k = 0; k <= 12; ++k) {
        if (bound.within_bound(z, k) && len > k) ++violations;
      }
    });
    out.expect(violations == 0, b.to_string() + ": " + std::to_string(violations) + " length-bound violations");
    mpz_class radius_sq = 1;
    for (unsigned k = 1; k <= 5; ++k) {
      radius_sq *= d.base_norm();
      const unsigned mk = max_length_in_disc(radius_sq, d);
      out.expect(mk <= m3 + k - 1, b.to_string() + ": M(|b|^" + std::to_string(k) + ") = " + std::to_string(mk) +
                                       " exceeds M(3) + k - 1");
    }
    out.log << (out.log.tellp() > 0 ? ", " : "") << b.to_string() << " M(3)=" << m3;
  }
}

void criterion_linking(Outcome& out) {
  for (const GaussInt& b : scan_bases()) {
    const DigitSet d = DigitSet::canonical(b);
    LinkResult r = check_linked(d, d);
    out.expect(r && r.certificate->holds(d, d), b.to_string() + ": not linked to itself");
  }
  const GaussInt b(-2, 1);
  std::vector<GaussInt> range;
  for (long k = 0; k <= 4; ++k) range.emplace_back(k);
  const DigitSet consecutive = DigitSet::from_digits(b, range);
  out.expect(probe_termination(consecutive), "{0..4} fails the termination probe for -2+1i");
  const DigitSet canon = DigitSet::canonical(b);
  LinkResult r = check_linked(consecutive, canon);
  out.expect(r && r.certificate->holds(consecutive, canon), "{0..4} not linked to canonical(-2+1i)");
  if (r) out.log << (out.ok ? "" : "; ") << "|E| = " << r.certificate->envelope.size();
}

void criterion_recoding(Outcome& out) {
  const DigitSet d = DigitSet::canonical(GaussInt(2, 1));
  for (unsigned j : {2u, 3u}) {
    const DigitSet power = power_digit_set(d, j);
    std::size_t failures = 0;
    for_disc(2500, [&](long x, long y) {
      GaussInt z(x, y);
      Word w = recode(encode(z, d), d, j);
      if (!(decode(w, power) == z) || !(w == encode(z, power))) ++failures;
    });
    out.expect(failures == 0, "j = " + std::to_string(j) + ": " + std::to_string(failures) + " recode failures");
  }
  out.expect(power_digit_set(d, 2).size() == 25, "|power_digit_set(D, 2)| != 25");
}

void criterion_dependence(Outcome& out) {
  auto same = [](const DependenceVerdict& v, bool dep, unsigned long r, unsigned long s) {
    return v.dependent == dep && (!dep || (v.r == r && v.s == s));
  };
  out.expect(same(mult_dependent({3, 4}, {2, 1}), true, 1, 2), "3+4i vs 2+1i");
  out.expect(same(mult_dependent(2, 4), true, 2, 1), "2 vs 4");
  out.expect(same(mult_dependent({2, 1}, {1, 2}), false, 0, 0), "2+1i vs 1+2i");
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> coord(-6, 6);
  std::uniform_int_distribution<unsigned long> expo(1, 5);
  int pairs = 0;
  while (pairs < 50) {
    GaussInt g(coord(rng), coord(rng));
    if (g.norm() <= 1) continue;
    const unsigned long p = expo(rng), q = expo(rng);
    const GaussInt a = pow(g, p), b = pow(g, q);
    const DependenceVerdict v = mult_dependent(a, b);
    out.expect(v.dependent && v.r > 0 && v.s > 0 && pow(a, v.r) == pow(b, v.s),
               "(" + g.to_string() + ")^" + std::to_string(p) + " vs ^" + std::to_string(q));
    ++pairs;
  }
}

void criterion_prefix(Outcome& out) {
  const GaussInt a(1, 2), b(2, 1);
  auto w1 = prefix_extension(a, b, 1, 3, 256);
  out.expect(w1 && w1->certify() && w1->n >= 3, "u = 1: no certified witness");
  if (w1) out.log << "u=1: m=" << w1->m << " n=" << w1->n;
  auto w2 = prefix_extension(a, b, b, 3, 256);
  const Word one_zero = Word::parse("1,0");
  out.expect(w2 && w2->certify() && w2->word_am().starts_with(one_zero), "u = 2+1i: no certified witness");
  if (w2) out.log << "; u=2+1i: m=" << w2->m << " n=" << w2->n;
}

void criterion_independence_evidence(Outcome& out) {
  const GaussInt b(2, 1);
  const DigitSet d = DigitSet::canonical(b);
  const LanguageOracle independent = powers_oracle({1, 2}, d);
  const LanguageOracle control = powers_oracle(b, d);
  std::size_t previous = 0;
  for (unsigned k : {2u, 4u, 6u}) {
    const std::size_t grow = residual_signatures(independent, k, 3).class_count;
    const std::size_t flat = residual_signatures(control, k, 3).class_count;
    out.expect(grow > previous, "independent count did not increase at k = " + std::to_string(k));
    out.expect(flat <= 4, "control count " + std::to_string(flat) + " > 4 at k = " + std::to_string(k));
    out.log << (k == 2 ? "" : ", ") << "k=" << k << ": " << grow << " vs " << flat;
    previous = grow;
  }
  auto mismatch = dfa_oracle_disagreement(powers_dfa(b), control, 8);
  out.expect(!mismatch, "powers_dfa disagrees with oracle on " + (mismatch ? mismatch->to_string() : ""));
}

void criterion_integers(Outcome& out) {
  const DigitSet three = DigitSet::canonical(3);
  auto mismatch = dfa_oracle_disagreement(integers_dfa(3), integers_oracle(three), 5);
  out.expect(!mismatch, "integers_dfa(3) disagrees on " + (mismatch ? mismatch->to_string() : ""));
  const DigitSet d = DigitSet::canonical(GaussInt(2, 1));
  std::vector<bool> probe = zero_pump_probe(integers_oracle(d), encode(5, d), 1, 8);
  out.expect(std::ranges::find(probe, false) != probe.end(), "pumping encode(5) in base 2+1i stayed integral");
  out.log << "pump probe ";
  for (bool bit : probe) out.log << (bit ? '1' : '0');
}

Dfa random_dfa(const DigitSet& alphabet, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 7);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<std::size_t> target(0, n - 1);
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<StateId>> rows(n, std::vector<StateId>(alphabet.size()));
  std::vector<bool> accepting(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (auto& t : rows[s]) t = target(rng);
    accepting[s] = coin(rng);
  }
  return Dfa(alphabet, target(rng), std::move(rows), std::move(accepting));
}

void criterion_dfa_engine(Outcome& out) {
  const DigitSet d = DigitSet::canonical(GaussInt(2, 1));
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Dfa x = random_dfa(d, rng), y = random_dfa(d, rng);
    const Dfa mx = minimize(x);
    out.expect(minimize(mx) == mx, "minimize not idempotent on sample " + std::to_string(i));
    out.expect(equivalent(x, mx), "minimize changed the language of sample " + std::to_string(i));
    out.expect(equivalent(complement(product(x, y, BoolOp::And)),
                          product(complement(x), complement(y), BoolOp::Or)),
               "De Morgan fails on sample " + std::to_string(i));
    const std::string text = serialize_dfa(x);
    const Dfa back = parse_dfa(text);
    out.expect(back == x && serialize_dfa(back) == text, "serialization round trip fails on sample " +
                                                             std::to_string(i));
  }
}

struct Criterion {
  const char* title;
  double limit;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"canonical digit sets are complete residue systems", 5, criterion_digit_sets},
      {"encode/decode round trips", 0, criterion_uniqueness},
      {"length bound via M(3)", 0, criterion_length_bound},
      {"digit-set linking", 30, criterion_linking},
      {"base-power recoding", 0, criterion_recoding},
      {"multiplicative dependence", 5, criterion_dependence},
      {"prefix-extension witnesses", 60, criterion_prefix},
      {"residual growth for independent powers", 120, criterion_independence_evidence},
      {"integers in real odd bases", 30, criterion_integers},
      {"DFA engine algebra and serialization", 10, criterion_dfa_engine},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  const Criterion& criterion = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.title = criterion.title;
  result.time_limit = criterion.limit;
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion.body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.log << "exception: " << e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.checks_passed = out.ok;
  result.detail = out.log.str();
  return result;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id));
  return results;
}

}  // namespace gaussnum::acceptance

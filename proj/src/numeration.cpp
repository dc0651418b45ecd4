#include "gaussnum/numeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace gaussnum {

namespace {

void require_base(const GaussInt& base) {
  if (base.norm() < 5) throw Error(ErrorCode::BaseTooSmall, "base " + base.to_string() + " has norm < 5");
}

// Smallest t with n^t >= x.
unsigned long ceil_log(const mpz_class& n, const mpz_class& x) {
  unsigned long t = 0;
  mpz_class p = 1;
  while (p < x) {
    p *= n;
    ++t;
  }
  return t;
}

// Bootstrap limit used while M(3) itself is being computed.
constexpr unsigned long kBootstrapSteps = 64;

}  // namespace

GaussInt canonical_digit(const GaussInt& z, const GaussInt& base) { return z - base * round_div(z, base); }

DigitSet DigitSet::build(const GaussInt& base, std::vector<GaussInt> digits, bool canonical) {
  require_base(base);
  auto impl = std::make_shared<Impl>();
  impl->base = base;
  impl->base_norm = base.norm();
  impl->canonical = canonical;
  if (mpz_class(static_cast<unsigned long>(digits.size())) != impl->base_norm) {
    throw Error(ErrorCode::InvalidDigitSet, "a digit set for " + base.to_string() + " needs " +
                                               impl->base_norm.get_str() + " digits, got " +
                                               std::to_string(digits.size()));
  }
  std::sort(digits.begin(), digits.end());
  impl->digits = std::move(digits);
  bool has_zero = false;
  for (std::size_t i = 0; i < impl->digits.size(); ++i) {
    const GaussInt& d = impl->digits[i];
    if (d.is_zero()) {
      has_zero = true;
      impl->zero_index = i;
    }
    if (!impl->by_value.emplace(d, i).second) {
      throw Error(ErrorCode::InvalidDigitSet, "duplicate digit " + d.to_string());
    }
    if (!impl->by_residue.emplace(canonical_digit(d, base), i).second) {
      throw Error(ErrorCode::InvalidDigitSet, "digit " + d.to_string() + " is congruent to another digit mod " +
                                                  base.to_string());
    }
  }
  if (!has_zero) throw Error(ErrorCode::InvalidDigitSet, "digit set must contain 0");

  DigitSet result{impl};
  impl->m3 = max_length_in_disc(9, result);
  impl->m3_known = true;
  return result;
}

DigitSet DigitSet::canonical(const GaussInt& base) {
  require_base(base);
  static std::mutex mutex;
  static std::map<std::string, DigitSet> cache;
  const std::string key = base.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const mpz_class n = base.norm();
  const GaussInt conj_base = base.conj();
  const long radius = mpz_class(sqrt(n)).get_si();
  std::vector<GaussInt> digits;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x * x + y * y > n) continue;
      GaussInt p = GaussInt(x, y) * conj_base;
      mpz_class re2 = 2 * p.re, im2 = 2 * p.im;
      if (-n <= re2 && re2 < n && -n <= im2 && im2 < n) digits.emplace_back(x, y);
    }
  }
  DigitSet result = build(base, std::move(digits), true);
  std::lock_guard lock(mutex);
  return cache.emplace(key, result).first->second;
}

DigitSet DigitSet::from_digits(const GaussInt& base, std::vector<GaussInt> digits) {
  require_base(base);
  std::vector<GaussInt> sorted = digits;
  std::sort(sorted.begin(), sorted.end());
  DigitSet canon = canonical(base);
  bool is_canon = std::ranges::equal(sorted, canon.digits());
  if (is_canon) return canon;
  return build(base, std::move(digits), false);
}

std::optional<std::size_t> DigitSet::index_of(const GaussInt& digit) const {
  auto it = impl_->by_value.find(digit);
  if (it == impl_->by_value.end()) return std::nullopt;
  return it->second;
}

std::size_t DigitSet::residue_index(const GaussInt& z) const {
  if (impl_->canonical) return impl_->by_value.at(canonical_digit(z, impl_->base));
  return impl_->by_residue.at(canonical_digit(z, impl_->base));
}

unsigned long DigitSet::step_limit(const GaussInt& z) const {
  unsigned long logs = 2 * ceil_log(impl_->base_norm, z.norm() + 1);
  if (!impl_->m3_known) return kBootstrapSteps + logs;
  return 4ul * impl_->m3 + logs + 16;
}

const GaussInt& digit_of(const GaussInt& z, const DigitSet& digits) { return digits[digits.residue_index(z)]; }

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ',';
    out += digits[i].to_string();
  }
  return out;
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    w.digits.push_back(parse_gauss(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() && std::equal(prefix.digits.begin(), prefix.digits.end(), digits.begin());
}

Word encode(GaussInt z, const DigitSet& digits) {
  Word w;
  const unsigned long limit = digits.step_limit(z);
  const GaussInt& base = digits.base();
  const GaussInt start = z;
  while (!z.is_zero()) {
    if (w.digits.size() >= limit) {
      throw Error(ErrorCode::NonTermination, "expansion of " + start.to_string() + " in base " + base.to_string() +
                                                 " exceeded " + std::to_string(limit) + " steps");
    }
    if (digits.is_canonical()) {
      // z = b q + d with d canonical, so the next value is q itself.
      GaussInt q = round_div(z, base);
      w.digits.push_back(z - base * q);
      z = std::move(q);
    } else {
      const GaussInt& d = digit_of(z, digits);
      w.digits.push_back(d);
      z = exact_div(z - d, base);
    }
  }
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

GaussInt decode(const Word& word, const DigitSet& digits) {
  GaussInt z;
  for (const GaussInt& d : word.digits) {
    if (!digits.contains(d)) {
      throw Error(ErrorCode::ForeignDigit, d.to_string() + " is not a digit for base " + digits.base().to_string());
    }
    z *= digits.base();
    z += d;
  }
  return z;
}

std::size_t word_length(const GaussInt& z, const DigitSet& digits) { return encode(z, digits).size(); }

unsigned max_length_in_disc(const mpz_class& radius_sq, const DigitSet& digits) {
  if (radius_sq < 0) return 0;
  const long radius = mpz_class(sqrt(radius_sq)).get_si();
  const long r2 = radius_sq.get_si();
  unsigned best = 0;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x * x + y * y > r2) continue;
      best = std::max(best, static_cast<unsigned>(word_length(GaussInt(x, y), digits)));
    }
  }
  return best;
}

bool LengthBound::within_bound(const GaussInt& z, unsigned long k) const {
  const mpz_class n = base.norm();
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), n.get_mpz_t(), m3);
  lhs *= z.norm();
  mpz_pow_ui(rhs.get_mpz_t(), n.get_mpz_t(), k);
  return lhs <= rhs;
}

LengthBound length_bound(const GaussInt& base) { return length_bound(DigitSet::canonical(base)); }

LengthBound length_bound(const DigitSet& digits) { return {digits.base(), digits.m3()}; }

DigitSet power_digit_set(const DigitSet& digits, unsigned j) {
  if (j == 0) throw Error(ErrorCode::InvalidArgument, "power_digit_set needs j >= 1");
  if (j == 1) return digits;
  std::vector<GaussInt> combined{GaussInt(0)};
  GaussInt scale(1);
  for (unsigned t = 0; t < j; ++t) {
    std::vector<GaussInt> next;
    next.reserve(combined.size() * digits.size());
    for (const GaussInt& s : combined) {
      for (const GaussInt& d : digits.digits()) next.push_back(s + scale * d);
    }
    combined = std::move(next);
    scale *= digits.base();
  }
  return DigitSet::from_digits(pow(digits.base(), j), std::move(combined));
}

Word recode(const Word& word, const DigitSet& digits, unsigned j) {
  if (j == 0) throw Error(ErrorCode::InvalidArgument, "recode needs j >= 1");
  for (const GaussInt& d : word.digits) {
    if (!digits.contains(d)) {
      throw Error(ErrorCode::ForeignDigit, d.to_string() + " is not a digit for base " + digits.base().to_string());
    }
  }
  const std::size_t pad = (j - word.size() % j) % j;
  std::vector<GaussInt> padded(pad, GaussInt(0));
  padded.insert(padded.end(), word.digits.begin(), word.digits.end());

  Word out;
  for (std::size_t block = 0; block < padded.size(); block += j) {
    GaussInt value;
    for (std::size_t t = 0; t < j; ++t) {
      value *= digits.base();
      value += padded[block + t];
    }
    if (out.digits.empty() && value.is_zero()) continue;
    out.digits.push_back(std::move(value));
  }
  return out;
}

bool probe_termination(const DigitSet& digits, long radius_sq) {
  const long radius = mpz_class(sqrt(mpz_class(radius_sq))).get_si();
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x * x + y * y > radius_sq) continue;
      GaussInt z(x, y);
      try {
        if (!(decode(encode(z, digits), digits) == z)) return false;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonTermination) return false;
        throw;
      }
    }
  }
  return true;
}

bool LinkCertificate::holds(const DigitSet& from, const DigitSet& to) const {
  if (!(from.base() == to.base())) return false;
  if (std::find(envelope.begin(), envelope.end(), GaussInt(0)) == envelope.end()) return false;
  std::unordered_set<GaussInt, GaussIntHash> targets;
  for (const GaussInt& d : to.digits()) {
    for (const GaussInt& e : envelope) targets.insert(d + to.base() * e);
  }
  for (const GaussInt& d : from.digits()) {
    for (const GaussInt& e : envelope) {
      if (!targets.contains(d + e)) return false;
    }
  }
  return true;
}

LinkResult check_linked(const DigitSet& from, const DigitSet& to) {
  if (!(from.base() == to.base())) {
    throw Error(ErrorCode::BaseMismatch, from.base().to_string() + " vs " + to.base().to_string());
  }
  for (const DigitSet* set : {&from, &to}) {
    if (!probe_termination(*set)) {
      throw Error(ErrorCode::InvalidDigitSet, "digit set for " + set->base().to_string() +
                                                  " fails the termination probe");
    }
  }
  auto max_norm = [](const DigitSet& s) {
    mpz_class best = 0;
    for (const GaussInt& d : s.digits()) best = std::max(best, d.norm());
    return best;
  };
  const mpz_class delta_sq = max_norm(from);
  const mpz_class delta2_sq = max_norm(to);
  // floor((Delta + Delta')^2) = Delta^2 + Delta'^2 + floor(sqrt(4 Delta^2 Delta'^2))
  mpz_class cross = 4 * delta_sq * delta2_sq;
  mpz_class radius_sq = delta_sq + delta2_sq + sqrt(cross);

  LinkCertificate cert;
  cert.radius_sq = radius_sq;
  const long radius = mpz_class(sqrt(radius_sq)).get_si();
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      GaussInt e(x, y);
      if (e.norm() <= radius_sq) cert.envelope.push_back(std::move(e));
    }
  }

  const GaussInt& base = from.base();
  for (const GaussInt& d : from.digits()) {
    for (const GaussInt& e : cert.envelope) {
      GaussInt sum = d + e;
      GaussInt image = exact_div(sum - digit_of(sum, to), base);
      if (image.norm() > radius_sq) return {std::nullopt, LinkFailure{d, e, std::move(image)}};
    }
  }
  return {std::move(cert), std::nullopt};
}

std::optional<unsigned> real_power_exponent(const GaussInt& base) {
  require_base(base);
  GaussInt p(1);
  for (unsigned j = 1; j <= 8; ++j) {
    p *= base;
    if (p.is_real() && sgn(p.re) > 0) return j;
  }
  return std::nullopt;
}

}  // namespace gaussnum

#include "gaussnum/gaussint.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

namespace gaussnum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::BaseIsUnitOrZero: return "BaseIsUnitOrZero";
    case ErrorCode::UnitOrZeroInput: return "UnitOrZeroInput";
    case ErrorCode::BaseTooSmall: return "BaseTooSmall";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::BaseNotRealOdd: return "BaseNotRealOdd";
    case ErrorCode::InvalidDigitSet: return "InvalidDigitSet";
    case ErrorCode::ForeignDigit: return "ForeignDigit";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::InvalidDfa: return "InvalidDfa";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string GaussInt::to_string() const {
  std::string out = re.get_str();
  if (sgn(im) == 0) return out;
  out += sgn(im) < 0 ? '-' : '+';
  mpz_class mag = abs(im);
  out += mag.get_str();
  out += 'i';
  return out;
}

std::size_t GaussIntHash::operator()(const GaussInt& z) const noexcept {
  // Low limbs are enough to spread desk-scale values.
  auto limb = [](const mpz_class& v) -> std::size_t {
    return mpz_size(v.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(v.get_mpz_t(), 0));
  };
  std::size_t h = limb(z.re) * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(sgn(z.re) + 1);
  h ^= limb(z.im) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2) + static_cast<std::size_t>(sgn(z.im) + 1);
  return h;
}

namespace {

std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign) {
  std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) {
    throw Error(ErrorCode::ParseError, "expected digits at offset " + std::to_string(start) + " in '" +
                                           std::string(text) + "'");
  }
  return pos;
}

mpz_class to_mpz(std::string_view digits) {
  std::string s(digits);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

GaussInt parse_gauss(std::string_view text) {
  std::size_t re_end = scan_integer(text, 0, true);
  GaussInt z{to_mpz(text.substr(0, re_end)), mpz_class(0)};
  if (re_end == text.size()) return z;
  char sign = text[re_end];
  if (sign != '+' && sign != '-') {
    throw Error(ErrorCode::ParseError, "expected '+' or '-' after real part in '" + std::string(text) + "'");
  }
  std::size_t im_end = scan_integer(text, re_end + 1, false);
  if (im_end + 1 != text.size() || text[im_end] != 'i') {
    throw Error(ErrorCode::ParseError, "imaginary part must end in a single 'i' in '" + std::string(text) + "'");
  }
  z.im = to_mpz(text.substr(re_end + 1, im_end - re_end - 1));
  if (sign == '-') z.im = -z.im;
  return z;
}

GaussInt pow(GaussInt base, unsigned long exponent) {
  GaussInt result(1);
  while (exponent > 0) {
    if (exponent & 1ul) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

GaussInt associate_unit(const GaussInt& z) {
  if (z.is_zero()) throw Error(ErrorCode::ZeroInput, "zero has no associate unit");
  // z = u * c with c in the quadrant re > 0, im >= 0.
  if (sgn(z.re) > 0 && sgn(z.im) >= 0) return GaussInt(1);
  if (sgn(z.re) <= 0 && sgn(z.im) > 0) return GaussInt(0, 1);
  if (sgn(z.re) < 0 && sgn(z.im) <= 0) return GaussInt(-1);
  return GaussInt(0, -1);
}

GaussInt canonical_associate(const GaussInt& z) {
  if (z.is_zero()) return z;
  // Multiplying by conj(u) = u^-1 rotates z into the first quadrant.
  return z * associate_unit(z).conj();
}

bool divides(const GaussInt& w, const GaussInt& z) {
  if (w.is_zero()) return z.is_zero();
  mpz_class n = w.norm();
  GaussInt p = z * w.conj();
  return mpz_divisible_p(p.re.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(p.im.get_mpz_t(), n.get_mpz_t());
}

GaussInt exact_div(const GaussInt& z, const GaussInt& w) {
  if (w.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + z.to_string() + " by 0");
  mpz_class n = w.norm();
  GaussInt p = z * w.conj();
  if (!mpz_divisible_p(p.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(p.im.get_mpz_t(), n.get_mpz_t())) {
    throw Error(ErrorCode::NotDivisible, w.to_string() + " does not divide " + z.to_string());
  }
  mpz_divexact(p.re.get_mpz_t(), p.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(p.im.get_mpz_t(), p.im.get_mpz_t(), n.get_mpz_t());
  return p;
}

GaussInt round_div(const GaussInt& z, const GaussInt& w) {
  if (w.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + z.to_string() + " by 0");
  mpz_class n = w.norm();
  GaussInt p = z * w.conj();
  mpz_class two_n = 2 * n;
  GaussInt q;
  mpz_class t = 2 * p.re + n;
  mpz_fdiv_q(q.re.get_mpz_t(), t.get_mpz_t(), two_n.get_mpz_t());
  t = 2 * p.im + n;
  mpz_fdiv_q(q.im.get_mpz_t(), t.get_mpz_t(), two_n.get_mpz_t());
  return q;
}

GaussInt gauss_gcd(GaussInt z, GaussInt w) {
  if (z.is_zero() && w.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  while (!w.is_zero()) {
    GaussInt r = z - w * round_div(z, w);
    z = std::move(w);
    w = std::move(r);
  }
  return canonical_associate(z);
}

GaussInt GaussFactorization::product() const {
  GaussInt result = unit;
  for (const auto& f : factors) result *= pow(f.prime, f.exponent);
  return result;
}

namespace {

// x with x^2 = -1 (mod p) for a prime p = 1 (mod 4): c^((p-1)/4) for a
// quadratic non-residue c.
mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class exponent = (p - 1) / 4;
  mpz_class target = p - 1;
  for (mpz_class c = 2; c < p; ++c) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = (x * x) % p;
    if (sq == target) return x;
  }
  throw Error(ErrorCode::ZeroInput, "no square root of -1 modulo " + p.get_str());
}

std::vector<mpz_class> rational_prime_divisors(mpz_class n) {
  std::vector<mpz_class> primes;
  for (unsigned long d = 2; mpz_class(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

unsigned long strip_factor(GaussInt& z, const GaussInt& prime) {
  unsigned long e = 0;
  while (divides(prime, z)) {
    z = exact_div(z, prime);
    ++e;
  }
  return e;
}

}  // namespace

GaussFactorization factorize(const GaussInt& z) {
  if (z.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  GaussFactorization result;
  GaussInt rest = z;
  for (const mpz_class& p : rational_prime_divisors(z.norm())) {
    std::vector<GaussInt> above;
    if (p == 2) {
      above.emplace_back(1, 1);
    } else if (p % 4 == 3) {
      above.emplace_back(p, mpz_class(0));
    } else {
      GaussInt pi = gauss_gcd(GaussInt(p, mpz_class(0)), GaussInt(sqrt_minus_one(p), mpz_class(1)));
      above.push_back(pi);
      above.push_back(canonical_associate(pi.conj()));
    }
    for (const GaussInt& prime : above) {
      if (unsigned long e = strip_factor(rest, prime); e > 0) result.factors.push_back({prime, e});
    }
  }
  result.unit = rest;
  std::sort(result.factors.begin(), result.factors.end(), [](const PrimePower& a, const PrimePower& b) {
    mpz_class na = a.prime.norm(), nb = b.prime.norm();
    if (na != nb) return na < nb;
    return a.prime < b.prime;
  });
  return result;
}

std::optional<unsigned long> is_power_of(GaussInt z, const GaussInt& a) {
  if (a.norm() <= 1) throw Error(ErrorCode::BaseIsUnitOrZero, a.to_string() + " has norm <= 1");
  const GaussInt one(1);
  unsigned long n = 0;
  while (!(z == one)) {
    if (z.is_zero() || !divides(a, z)) return std::nullopt;
    z = exact_div(z, a);
    ++n;
  }
  return n;
}

}  // namespace gaussnum

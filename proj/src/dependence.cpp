#include "gaussnum/dependence.hpp"

#include <cmath>
#include <numeric>

namespace gaussnum {

namespace {

void require_nonunit(const GaussInt& z, const char* name) {
  if (z.norm() <= 1) throw Error(ErrorCode::UnitOrZeroInput, std::string(name) + " = " + z.to_string() + " has norm <= 1");
}

double log_modulus(const GaussInt& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.norm().get_mpz_t());
  return 0.5 * (std::log(mant) + static_cast<double>(exp) * std::log(2.0));
}

// Exponents n near (m log|a| - log|u|) / log|b|, ascending, clipped at n_min.
std::vector<unsigned long> candidate_exponents(double log_a, double log_b, double log_u, unsigned long m,
                                               unsigned long n_min) {
  const double centre = std::round((static_cast<double>(m) * log_a - log_u) / log_b);
  std::vector<unsigned long> out;
  for (double n = centre - 1; n <= centre + 1; n += 1) {
    if (n < 0 || n < static_cast<double>(n_min)) continue;
    out.push_back(static_cast<unsigned long>(n));
  }
  return out;
}

}  // namespace

DependenceVerdict mult_dependent(const GaussInt& a, const GaussInt& b) {
  require_nonunit(a, "a");
  require_nonunit(b, "b");
  const GaussFactorization fa = factorize(a);
  const GaussFactorization fb = factorize(b);
  if (fa.factors.size() != fb.factors.size()) return {};
  // r * e_a == s * e_b componentwise, with r/s fixed by the first prime.
  const unsigned long g = std::gcd(fa.factors[0].exponent, fb.factors[0].exponent);
  const unsigned long r = fb.factors[0].exponent / g;
  const unsigned long s = fa.factors[0].exponent / g;
  for (std::size_t i = 0; i < fa.factors.size(); ++i) {
    if (!(fa.factors[i].prime == fb.factors[i].prime)) return {};
    if (r * fa.factors[i].exponent != s * fb.factors[i].exponent) return {};
  }
  // a^r / b^s is now a unit; its order divides 4.
  for (unsigned long t = 1; t <= 4; ++t) {
    if (pow(a, t * r) == pow(b, t * s)) return {true, t * r, t * s};
  }
  return {};
}

GaussInt GroupWitness::residual() const { return pow(a, m) - u * pow(b, n); }

bool GroupWitness::certify() const {
  if (sgn(err_den) <= 0 || sgn(err_num) < 0) return false;
  return residual().norm() * err_den <= err_num * pow(b, n).norm();
}

std::optional<GroupWitness> group_witness(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                          const mpz_class& err_num, const mpz_class& err_den,
                                          unsigned long m_max) {
  require_nonunit(a, "a");
  require_nonunit(b, "b");
  if (u.is_zero()) throw Error(ErrorCode::UnitOrZeroInput, "u must be nonzero");
  if (sgn(err_den) <= 0 || sgn(err_num) < 0) throw Error(ErrorCode::InvalidArgument, "bound must be a nonnegative fraction");

  const double log_a = log_modulus(a), log_b = log_modulus(b), log_u = log_modulus(u);
  GaussInt a_pow(1);
  for (unsigned long m = 1; m <= m_max; ++m) {
    a_pow *= a;
    for (unsigned long n : candidate_exponents(log_a, log_b, log_u, m, 0)) {
      const GaussInt b_pow = pow(b, n);
      const GaussInt diff = a_pow - u * b_pow;
      if (diff.norm() * err_den <= err_num * b_pow.norm()) return GroupWitness{a, b, u, m, n, err_num, err_den};
    }
  }
  return std::nullopt;
}

Word PrefixWitness::word_am() const { return encode(pow(a, m), DigitSet::canonical(b)); }

Word PrefixWitness::word_u() const { return encode(u, DigitSet::canonical(b)); }

bool PrefixWitness::certify() const {
  const DigitSet digits = DigitSet::canonical(b);
  const GaussInt am = pow(a, m);
  if (!(am == u * pow(b, n) + z)) return false;
  if (word_length(z, digits) > n) return false;
  return encode(am, digits).starts_with(encode(u, digits));
}

std::optional<PrefixWitness> prefix_extension(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                              unsigned long n_min, unsigned long budget) {
  require_nonunit(a, "a");
  require_nonunit(b, "b");
  if (u.is_zero()) throw Error(ErrorCode::UnitOrZeroInput, "u must be nonzero");
  if (const DependenceVerdict v = mult_dependent(a, b); v.dependent) {
    throw Error(ErrorCode::NotIndependent, a.to_string() + "^" + std::to_string(v.r) + " = " + b.to_string() + "^" +
                                               std::to_string(v.s));
  }
  const DigitSet digits = DigitSet::canonical(b);
  const LengthBound bound = length_bound(digits);
  const Word u_word = encode(u, digits);

  const double log_a = log_modulus(a), log_b = log_modulus(b), log_u = log_modulus(u);
  GaussInt a_pow(1);
  for (unsigned long m = 1; m <= budget; ++m) {
    a_pow *= a;
    for (unsigned long n : candidate_exponents(log_a, log_b, log_u, m, n_min)) {
      GaussInt z = a_pow - u * pow(b, n);
      if (!bound.within_bound(z, n)) continue;
      // The bound already implies both checks; they are repeated exactly.
      if (word_length(z, digits) > n) continue;
      if (!encode(a_pow, digits).starts_with(u_word)) continue;
      return PrefixWitness{a, b, u, m, n, std::move(z)};
    }
  }
  return std::nullopt;
}

std::vector<PrefixWitness> prefix_chain(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                        unsigned long n_min, unsigned long budget, unsigned depth) {
  std::vector<PrefixWitness> chain;
  GaussInt target = u;
  unsigned long floor_n = n_min;
  for (unsigned step = 0; step <= depth; ++step) {
    auto link = prefix_extension(a, b, target, floor_n, budget);
    if (!link) break;
    target = pow(a, link->m);
    floor_n = link->n + 1;
    chain.push_back(std::move(*link));
  }
  return chain;
}

}  // namespace gaussnum

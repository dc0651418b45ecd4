#include <doctest.h>

#include <random>

#include "gaussnum/gaussint.hpp"
#include "oracles.hpp"

using namespace gaussnum;

namespace {

GaussInt g(const char* text) { return parse_gauss(text); }

void check_code(ErrorCode expected, const std::function<void()>& body) {
  try {
    body();
    FAIL("expected " << to_string(expected));
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("literal syntax") {
  CHECK(g("5") == GaussInt(5));
  CHECK(g("2+1i") == GaussInt(2, 1));
  CHECK(g("-1+2i") == GaussInt(-1, 2));
  CHECK(g("0-1i") == GaussInt(0, -1));
  CHECK(g("+3") == GaussInt(3));
  CHECK(GaussInt(0, -1).to_string() == "0-1i");
  CHECK(GaussInt(-7).to_string() == "-7");
  CHECK(GaussInt(2, 1).to_string() == "2+1i");
  for (const char* bad : {"", "i", "2+i", "2 +1i", "1+2", "1+2ii", "--1", "1+-2i", "x"}) {
    CAPTURE(bad);
    check_code(ErrorCode::ParseError, [&] { parse_gauss(bad); });
  }
  CHECK(g("123456789012345678901234567890-1i").re == mpz_class("123456789012345678901234567890"));
}

TEST_CASE("norm is multiplicative and vanishes only at zero") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int i = 0; i < 500; ++i) {
    GaussInt z(c(rng), c(rng)), w(c(rng), c(rng));
    CHECK((z * w).norm() == z.norm() * w.norm());
    CHECK((z.norm() == 0) == z.is_zero());
  }
}

TEST_CASE("exact_div") {
  CHECK(exact_div(5, g("2+1i")) == g("2-1i"));
  CHECK(exact_div(g("7-3i"), 1) == g("7-3i"));
  CHECK(g("2+1i") * g("2+1i") == g("3+4i"));
  CHECK(exact_div(g("3+4i"), g("2+1i")) == g("2+1i"));
  check_code(ErrorCode::NotDivisible, [] { exact_div(g("2+2i"), g("2+1i")); });
  check_code(ErrorCode::DivisionByZero, [] { exact_div(5, 0); });

  std::mt19937 rng(2);
  std::uniform_int_distribution<long> c(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    GaussInt z(c(rng), c(rng)), w(c(rng), c(rng));
    if (w.is_zero()) continue;
    CHECK(exact_div(z * w, w) == z);
  }
}

TEST_CASE("gauss_gcd") {
  CHECK(gauss_gcd(5, g("2+1i")) == g("2+1i"));
  CHECK(gauss_gcd(g("-3+2i"), 0) == canonical_associate(g("-3+2i")));
  CHECK(gauss_gcd(2, g("1+1i")) == g("1+1i"));
  CHECK(GaussInt(0, -1) * g("1+1i") * g("1+1i") == GaussInt(2));
  check_code(ErrorCode::BothZero, [] { gauss_gcd(0, 0); });

  // Against the largest common divisor found by exhaustive search.
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-12, 12);
  for (int i = 0; i < 300; ++i) {
    GaussInt z(c(rng), c(rng)), w(c(rng), c(rng));
    if (z.is_zero() && w.is_zero()) continue;
    const GaussInt d = gauss_gcd(z, w);
    CHECK(d == gauss_gcd(w, z));
    CHECK(sgn(d.re) > 0);
    CHECK(sgn(d.im) >= 0);
    CHECK(divides(d, z));
    CHECK(divides(d, w));
    const oracle::Pair zp{z.re.get_si(), z.im.get_si()}, wp{w.re.get_si(), w.im.get_si()};
    CHECK(d.norm() == oracle::max_common_divisor_norm(zp, wp));
  }
}

TEST_CASE("factorize examples") {
  auto f = factorize(g("3+4i"));
  CHECK(f.unit == GaussInt(1));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == PrimePower{g("2+1i"), 2});

  f = factorize(GaussInt::i());
  CHECK(f.unit == GaussInt::i());
  CHECK(f.factors.empty());

  f = factorize(5);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{g("1+2i"), 1});
  CHECK(f.factors[1] == PrimePower{g("2+1i"), 1});
  CHECK(f.product() == GaussInt(5));
  CHECK(canonical_associate(g("2-1i")) == g("1+2i"));

  f = factorize(g("0-18i"));
  CHECK(f.product() == g("0-18i"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{g("1+1i"), 2});
  CHECK(f.factors[1] == PrimePower{g("3"), 2});

  check_code(ErrorCode::ZeroInput, [] { factorize(0); });
}

TEST_CASE("factorize round trip and prime shape") {
  auto check_one = [](const GaussInt& z) {
    const auto f = factorize(z);
    CHECK(f.product() == z);
    CHECK(f.unit.is_unit());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      const GaussInt& p = f.factors[i].prime;
      CHECK(sgn(p.re) > 0);
      CHECK(sgn(p.im) >= 0);
      CHECK(f.factors[i].exponent > 0);
      const mpz_class n = p.norm();
      // Norm is a rational prime, or p is an inert prime q = 3 mod 4 with norm q^2.
      const bool split = mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
      const bool inert = p.is_real() && mpz_probab_prime_p(p.re.get_mpz_t(), 30) > 0 && p.re % 4 == 3;
      CHECK((split || inert));
      if (i > 0) {
        const GaussInt& q = f.factors[i - 1].prime;
        CHECK((q.norm() < n || (q.norm() == n && q < p)));
      }
    }
  };
  // Exhaustive on a small disc, sampled up to norm 10^6.
  for (long x = -30; x <= 30; ++x) {
    for (long y = -30; y <= 30; ++y) {
      if (x || y) check_one(GaussInt(x, y));
    }
  }
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> c(-707, 707);
  for (int i = 0; i < 3000; ++i) {
    GaussInt z(c(rng), c(rng));
    if (!z.is_zero()) check_one(z);
  }
  check_one(GaussInt(999983, 1000000));  // norm near 2 * 10^12
}

TEST_CASE("factorize yields irreducible, pairwise non-associate primes") {
  for (long x = -15; x <= 15; ++x) {
    for (long y = -15; y <= 15; ++y) {
      if (!(x || y)) continue;
      const auto f = factorize(GaussInt(x, y));
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const GaussInt& p = f.factors[i].prime;
        CHECK(oracle::irreducible({p.re.get_si(), p.im.get_si()}));
        for (std::size_t j = 0; j < i; ++j) {
          // Both sides are canonical, so associates would compare equal.
          CHECK_FALSE(canonical_associate(f.factors[j].prime) == canonical_associate(p));
        }
      }
    }
  }
}

TEST_CASE("is_power_of") {
  CHECK(is_power_of(1, g("2+1i")) == 0ul);
  CHECK(is_power_of(g("3+4i"), g("2+1i")) == 2ul);
  CHECK_FALSE(is_power_of(g("2+2i"), g("2+1i")).has_value());
  CHECK_FALSE(is_power_of(0, g("2+1i")).has_value());
  CHECK_FALSE(is_power_of(g("0+1i"), g("2+1i")).has_value());
  CHECK(is_power_of(pow(g("-1+3i"), 17), g("-1+3i")) == 17ul);
  CHECK_FALSE(is_power_of(GaussInt(0, 1) * pow(g("-1+3i"), 5), g("-1+3i")).has_value());
  check_code(ErrorCode::BaseIsUnitOrZero, [] { is_power_of(5, g("0-1i")); });
  check_code(ErrorCode::BaseIsUnitOrZero, [] { is_power_of(5, 0); });
}

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gaussnum/error.hpp"

namespace gaussnum {

/// Exact Gaussian integer re + im*i with arbitrary-precision parts.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  GaussInt() : re(0), im(0) {}
  GaussInt(long r) : re(r), im(0) {}  // NOLINT: integers embed implicitly
  GaussInt(long r, long i) : re(r), im(i) {}
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussInt i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_unit() const { return norm() == 1; }
  bool is_real() const { return sgn(im) == 0; }

  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt operator-() const { return {-re, -im}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    mpz_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Lexicographic (re, im) order; used for digit sets and alphabets.
  friend std::strong_ordering operator<=>(const GaussInt& a, const GaussInt& b) {
    if (int c = cmp(a.re, b.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.im, b.im);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.to_string(); }
};

struct GaussIntHash {
  std::size_t operator()(const GaussInt& z) const noexcept;
};

/// Parses `a`, `a+bi` or `a-bi` (optional sign on a, no whitespace).
GaussInt parse_gauss(std::string_view text);

GaussInt pow(GaussInt base, unsigned long exponent);

/// The associate of z with re > 0 and im >= 0 (0 maps to 0).
GaussInt canonical_associate(const GaussInt& z);

/// Returns the unit u with z == u * canonical_associate(z); z must be nonzero.
GaussInt associate_unit(const GaussInt& z);

bool divides(const GaussInt& w, const GaussInt& z);

GaussInt exact_div(const GaussInt& z, const GaussInt& w);

/// Nearest-lattice-point quotient; the remainder has norm at most norm(w)/2.
GaussInt round_div(const GaussInt& z, const GaussInt& w);

GaussInt gauss_gcd(GaussInt z, GaussInt w);

struct PrimePower {
  GaussInt prime;
  unsigned long exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct GaussFactorization {
  GaussInt unit;
  std::vector<PrimePower> factors;

  GaussInt product() const;
};

GaussFactorization factorize(const GaussInt& z);

std::optional<unsigned long> is_power_of(GaussInt z, const GaussInt& a);

}  // namespace gaussnum

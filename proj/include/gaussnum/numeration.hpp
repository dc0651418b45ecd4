#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaussnum/gaussint.hpp"

namespace gaussnum {

/// A base together with a complete residue system modulo that base,
/// containing 0 and sorted by (re, im).
///
/// Copies are cheap: the digit table, the lookup maps and M(3) are shared
/// immutable state built once at construction.
class DigitSet {
 public:
  /// Digits d with Re(d/b), Im(d/b) in [-1/2, 1/2). Throws BaseTooSmall
  /// when norm(b) < 5.
  static DigitSet canonical(const GaussInt& base);

  /// Validates and sorts a user-supplied digit set. Throws BaseTooSmall,
  /// InvalidDigitSet (missing 0, wrong size, two digits congruent mod b), or
  /// NonTermination when the greedy expansion of a point in the radius-3
  /// disc does not reach 0.
  static DigitSet from_digits(const GaussInt& base, std::vector<GaussInt> digits);

  const GaussInt& base() const { return impl_->base; }
  const mpz_class& base_norm() const { return impl_->base_norm; }
  std::span<const GaussInt> digits() const { return impl_->digits; }
  std::size_t size() const { return impl_->digits.size(); }
  const GaussInt& operator[](std::size_t index) const { return impl_->digits[index]; }
  bool is_canonical() const { return impl_->canonical; }

  std::optional<std::size_t> index_of(const GaussInt& digit) const;
  /// Encode safety bound: 4 M(3) + 2 ceil(log_N(norm(z) + 1)) + 16 steps.
  unsigned long step_limit(const GaussInt& z) const;
  bool contains(const GaussInt& digit) const { return index_of(digit).has_value(); }
  std::size_t zero_index() const { return impl_->zero_index; }

  /// Index of the unique digit congruent to z modulo the base.
  std::size_t residue_index(const GaussInt& z) const;

  /// M(3): the longest representation among |z| <= 3.
  unsigned m3() const { return impl_->m3; }

  friend bool operator==(const DigitSet& a, const DigitSet& b) {
    return a.impl_ == b.impl_ || (a.base() == b.base() && std::ranges::equal(a.digits(), b.digits()));
  }

 private:
  struct Impl;
  explicit DigitSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static DigitSet build(const GaussInt& base, std::vector<GaussInt> digits, bool canonical);

  struct Impl {
    GaussInt base;
    mpz_class base_norm;
    std::vector<GaussInt> digits;
    bool canonical = false;
    std::size_t zero_index = 0;
    unsigned m3 = 0;
    bool m3_known = false;
    // Keyed by the canonical residue representative of each digit.
    std::unordered_map<GaussInt, std::size_t, GaussIntHash> by_residue;
    std::unordered_map<GaussInt, std::size_t, GaussIntHash> by_value;
  };

  std::shared_ptr<const Impl> impl_;
};

/// msd-first digit sequence. Well-formed words are empty (the value 0) or
/// start with a nonzero digit; the type also carries ill-formed words so the
/// enumeration harnesses can feed them to acceptors.
struct Word {
  std::vector<GaussInt> digits;

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }
  bool well_formed() const { return digits.empty() || !digits.front().is_zero(); }

  /// Comma-separated digit literals; "" for the empty word.
  std::string to_string() const;
  static Word parse(std::string_view text);

  bool starts_with(const Word& prefix) const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Canonical residue representative: the d with b | (z - d) and d/b in the
/// half-open unit box.
GaussInt canonical_digit(const GaussInt& z, const GaussInt& base);

const GaussInt& digit_of(const GaussInt& z, const DigitSet& digits);

Word encode(GaussInt z, const DigitSet& digits);
GaussInt decode(const Word& word, const DigitSet& digits);
std::size_t word_length(const GaussInt& z, const DigitSet& digits);

/// M(r) keyed by the squared radius.
unsigned max_length_in_disc(const mpz_class& radius_sq, const DigitSet& digits);

/// Exact form of "l(z) <= k whenever |z| <= c |b|^k" with c = |b|^-M(3).
struct LengthBound {
  GaussInt base;
  unsigned m3 = 0;

  /// norm(z) * norm(b)^m3 <= norm(b)^k
  bool within_bound(const GaussInt& z, unsigned long k) const;
};

LengthBound length_bound(const GaussInt& base);
LengthBound length_bound(const DigitSet& digits);

/// Digit set {d0 + b d1 + ... + b^(j-1) d(j-1)} for the base b^j.
DigitSet power_digit_set(const DigitSet& digits, unsigned j);

/// Regroups a word over D into blocks of j digits, read as single digits of
/// power_digit_set(D, j). Leading zero blocks are dropped.
Word recode(const Word& word, const DigitSet& digits, unsigned j);

/// True when encode terminates and round-trips for every z with norm(z) <= radius_sq.
bool probe_termination(const DigitSet& digits, long radius_sq = 400);

struct LinkCertificate {
  mpz_class radius_sq;
  std::vector<GaussInt> envelope;  // E, sorted, contains 0

  /// Set-based recheck of D + E within D2 + b E.
  bool holds(const DigitSet& from, const DigitSet& to) const;
};

struct LinkFailure {
  GaussInt digit;
  GaussInt envelope_element;
  GaussInt image;  // (d + e - d') / b, found outside E
};

struct LinkResult {
  std::optional<LinkCertificate> certificate;
  std::optional<LinkFailure> failure;

  explicit operator bool() const { return certificate.has_value(); }
};

/// Builds E as the lattice disc of radius Delta + Delta' and checks every
/// d + e against D2 + b E. Throws BaseMismatch, or InvalidDigitSet when a set
/// fails the termination probe.
LinkResult check_linked(const DigitSet& from, const DigitSet& to);

/// Least j in 1..8 with b^j a positive rational integer.
std::optional<unsigned> real_power_exponent(const GaussInt& base);

}  // namespace gaussnum

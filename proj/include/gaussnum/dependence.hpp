#pragma once

#include <optional>
#include <vector>

#include "gaussnum/gaussint.hpp"
#include "gaussnum/numeration.hpp"

namespace gaussnum {

/// When dependent, a^r == b^s with (r, s) the least positive such pair.
struct DependenceVerdict {
  bool dependent = false;
  unsigned long r = 0;
  unsigned long s = 0;
};

/// Compares the canonical-prime exponent vectors of a and b, then resolves
/// the unit by trying multipliers 1..4. Throws UnitOrZeroInput when
/// norm(a) <= 1 or norm(b) <= 1.
DependenceVerdict mult_dependent(const GaussInt& a, const GaussInt& b);

/// Certifies |a^m / b^n - u|^2 <= err_num / err_den via
/// norm(a^m - u b^n) * err_den <= err_num * norm(b^n).
struct GroupWitness {
  GaussInt a, b, u;
  unsigned long m = 0;
  unsigned long n = 0;
  mpz_class err_num, err_den;

  GaussInt residual() const;  // a^m - u b^n
  bool certify() const;
};

std::optional<GroupWitness> group_witness(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                          const mpz_class& err_num, const mpz_class& err_den,
                                          unsigned long m_max = 256);

/// a^m = u b^n + z with l(z) <= n, so the base-b word of a^m extends the word of u.
struct PrefixWitness {
  GaussInt a, b, u;
  unsigned long m = 0;
  unsigned long n = 0;
  GaussInt z;

  Word word_am() const;
  Word word_u() const;
  /// Rechecks the identity, the length bound and the prefix relation.
  bool certify() const;
};

/// Searches m = 1..budget for a^m close enough to u b^n (n >= n_min) that
/// the remainder is at most n digits long. Throws NotIndependent for
/// multiplicatively dependent a, b and UnitOrZeroInput for degenerate inputs.
std::optional<PrefixWitness> prefix_extension(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                              unsigned long n_min, unsigned long budget = 256);

/// Iterates prefix_extension with u = a^m of the previous link, giving words
/// w0, w1, ... each a prefix of the next. Stops early when a link is not found.
std::vector<PrefixWitness> prefix_chain(const GaussInt& a, const GaussInt& b, const GaussInt& u,
                                        unsigned long n_min, unsigned long budget, unsigned depth);

}  // namespace gaussnum

#include <doctest.h>

#include <random>

#include "gaussnum/dependence.hpp"

using namespace gaussnum;

namespace {

GaussInt g(const char* text) { return parse_gauss(text); }

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

void check_verdict(const GaussInt& a, const GaussInt& b, bool dependent, unsigned long r = 0, unsigned long s = 0) {
  CAPTURE(a);
  CAPTURE(b);
  const DependenceVerdict v = mult_dependent(a, b);
  CHECK(v.dependent == dependent);
  if (dependent) {
    CHECK(v.r == r);
    CHECK(v.s == s);
    CHECK(pow(a, v.r) == pow(b, v.s));
  }
  const DependenceVerdict swapped = mult_dependent(b, a);
  CHECK(swapped.dependent == v.dependent);
  CHECK(swapped.r == v.s);
  CHECK(swapped.s == v.r);
}

}  // namespace

TEST_CASE("multiplicative dependence") {
  check_verdict(g("3+4i"), g("2+1i"), true, 1, 2);
  check_verdict(2, 4, true, 2, 1);
  check_verdict(g("2+1i"), g("1+2i"), false);
  check_verdict(g("2+1i"), g("2-1i"), false);
  check_verdict(2, 3, false);
  check_verdict(g("2+1i"), 5, false);
  check_verdict(3, 9, true, 2, 1);
  // Associates: b = i a needs the unit to cancel, i^4 = 1.
  check_verdict(g("2+1i"), g("-1+2i"), true, 4, 4);
  // 2 = -i (1+i)^2, so (1+i)^8 = 2^4.
  check_verdict(g("1+1i"), 2, true, 8, 4);
  check_verdict(g("-4+3i"), g("2+1i"), true, 4, 8);

  CHECK(code_of([] { mult_dependent(g("0+1i"), 3); }) == ErrorCode::UnitOrZeroInput);
  CHECK(code_of([] { mult_dependent(3, 0); }) == ErrorCode::UnitOrZeroInput);
}

TEST_CASE("power absorption and random dependent pairs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<unsigned long> e(1, 6);
  for (int i = 0; i < 80; ++i) {
    const GaussInt a(c(rng), c(rng));
    if (a.norm() <= 1) continue;
    const unsigned long k = e(rng);
    const DependenceVerdict v = mult_dependent(a, pow(a, k));
    CHECK(v.dependent);
    CHECK(v.r == k);
    CHECK(v.s == 1);

    const unsigned long p = e(rng), q = e(rng);
    const DependenceVerdict pq = mult_dependent(pow(a, p), pow(a, q));
    CHECK(pq.dependent);
    CHECK(pow(pow(a, p), pq.r) == pow(pow(a, q), pq.s));
  }
}

TEST_CASE("group witnesses") {
  const GaussInt a = g("1+2i"), b = g("2+1i");
  auto w = group_witness(a, b, 1, 1, 25, 64);
  REQUIRE(w.has_value());
  CHECK(w->m == 10);
  CHECK(w->n == 10);
  CHECK(w->certify());

  auto exact = group_witness(a, b, a, 1, 1000, 4);
  REQUIRE(exact.has_value());
  CHECK(exact->m == 1);
  CHECK(exact->n == 0);
  CHECK(exact->residual().is_zero());

  auto dep = group_witness(g("3+4i"), b, 1, 1, 25, 16);
  REQUIRE(dep.has_value());
  CHECK(dep->m == 1);
  CHECK(dep->n == 2);
  CHECK(dep->residual().is_zero());

  CHECK_FALSE(group_witness(a, b, 1, 0, 1, 64).has_value());
  CHECK(code_of([&] { group_witness(a, b, 0, 1, 25, 4); }) == ErrorCode::UnitOrZeroInput);
  CHECK(code_of([&] { group_witness(a, 1, 1, 1, 25, 4); }) == ErrorCode::UnitOrZeroInput);

  // A forged witness fails its own certificate.
  GroupWitness forged = *w;
  forged.err_num = 1;
  forged.err_den = 1'000'000;
  CHECK_FALSE(forged.certify());
}

TEST_CASE("dependent pairs only reach 1 exactly") {
  const std::vector<std::pair<GaussInt, GaussInt>> pairs{
      {g("3+4i"), g("2+1i")}, {4, 2}, {g("-4+3i"), g("2+1i")}, {g("1+1i"), 2}, {27, 9}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CAPTURE(b);
    auto w = group_witness(a, b, 1, 1, 1'000'000, 64);
    if (w) {
      CHECK(w->residual().is_zero());
      CHECK(w->certify());
    }
  }
}

TEST_CASE("prefix extension") {
  const GaussInt a = g("1+2i"), b = g("2+1i");
  const DigitSet d = DigitSet::canonical(b);

  auto w = prefix_extension(a, b, 1, 3);
  REQUIRE(w.has_value());
  CHECK(w->m == 39);
  CHECK(w->n == 39);
  CHECK(w->certify());
  CHECK(pow(a, w->m) == pow(b, w->n) + w->z);
  CHECK(word_length(w->z, d) <= w->n);
  CHECK(w->word_am().starts_with(Word::parse("1")));
  CHECK(w->word_am().size() == w->n + 1);

  auto wb = prefix_extension(a, b, b, 3);
  REQUIRE(wb.has_value());
  CHECK(wb->m == 39);
  CHECK(wb->n == 38);
  CHECK(wb->certify());
  CHECK(wb->word_am().starts_with(Word::parse("1,0")));

  auto trivial = prefix_extension(a, b, a, 0);
  REQUIRE(trivial.has_value());
  CHECK(trivial->m == 1);
  CHECK(trivial->n == 0);
  CHECK(trivial->z.is_zero());

  CHECK_FALSE(prefix_extension(a, b, 1, 3, 20).has_value());
  CHECK(code_of([&] { prefix_extension(g("3+4i"), b, 1, 3); }) == ErrorCode::NotIndependent);
  CHECK(code_of([&] { prefix_extension(a, b, 0, 3); }) == ErrorCode::UnitOrZeroInput);

  PrefixWitness forged = *w;
  forged.z += 1;
  CHECK_FALSE(forged.certify());
}

TEST_CASE("prefix chains nest") {
  const GaussInt a = g("1+2i"), b = g("2+1i");
  const auto chain = prefix_chain(a, b, 1, 3, 256, 1);
  REQUIRE_FALSE(chain.empty());
  CHECK(chain.front().m == 39);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    CHECK(chain[i].word_am().starts_with(chain[i - 1].word_am()));
    CHECK(chain[i].m > chain[i - 1].m);
  }
  for (const auto& link : chain) CHECK(link.certify());
}

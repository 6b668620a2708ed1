#include <set>

#include "doctest.h"
#include "negacorr/construction.hpp"
#include "negacorr/correlation.hpp"
#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"

using namespace negacorr;

namespace {

std::vector<int> value_set(const BinarySequence& s) {
  return oacf_distribution(s, false).support();
}

std::vector<std::int64_t> applicable_primes_below(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 5; p < bound; p += 4)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("CRT isomorphism") {
  const CrtIsomorphism crt5(5);
  CHECK(crt5.phi(13) == std::pair<std::int64_t, std::int64_t>{5, 3});
  CHECK(crt5.eta(1, 0) == 25);
  const CrtIsomorphism crt31(31);
  CHECK(crt31.eta(crt31.phi(100).first, crt31.phi(100).second) == 100);
  for (std::int64_t x = 0; x < crt31.modulus(); ++x) {
    const auto [a, b] = crt31.phi(x);
    REQUIRE(crt31.eta(a, b) == x);
  }
  CHECK_THROWS_AS(CrtIsomorphism(4), DomainError);
}

TEST_CASE("expanding G' and gamma") {
  CHECK(expand_g({2}) == std::vector<int>{2, 4, 5, 7});
  CHECK(expand_g({0, 1, 3}) == std::vector<int>{0, 1, 3, 6});
  CHECK(expand_g({}) == std::vector<int>{4, 5, 6, 7});
  CHECK(expand_gamma({3, 4, 1, 1}) == std::array<int, 8>{3, 4, 1, 1, 4, 3, 6, 6});
  CHECK(expand_gamma({1, 6, 4, 4}) == std::array<int, 8>{1, 6, 4, 4, 6, 1, 3, 3});
  CHECK(expand_gamma({1, 1, 1, 1})[4] == 6);
  CHECK_THROWS_AS((void)expand_gamma({0, 1, 1, 1}), DomainError);
}

TEST_CASE("table rows") {
  const auto& table = construction_table();
  REQUIRE(table.size() == 16);
  for (int i = 1; i <= 16; ++i) {
    const auto& row = construction_spec(i);
    CHECK(row.index == i);
    CHECK(row.construction == (i <= 4 ? 1 : i <= 8 ? 2 : 3));
    CHECK(row.f_parity == (i <= 4 ? FParity::kEven : FParity::kOdd));
    for (int g : row.g_prime) CHECK((g >= 0 && g < 4));
  }
  CHECK(construction_spec(9).gamma == std::array<int, 4>{5, 2, 1, 1});
  CHECK(construction_spec(14).g_prime == std::vector<int>{0, 3});
  CHECK_THROWS_AS((void)construction_spec(17), DomainError);
}

TEST_CASE("value templates") {
  CHECK(expected_values(ValueTemplate::kTwoXPlusFourY, 1, 2) ==
        std::vector<int>{-10, -4, -2, 0, 2, 4, 10});
  CHECK(expected_values(ValueTemplate::kFourYPlusEight, -3, 1) ==
        std::vector<int>{-12, -4, -2, 0, 2, 4, 12});
  CHECK(expected_values(ValueTemplate::kTwoXMinusFourY, 1, 1) ==
        std::vector<int>{-4, -2, 0, 2, 4});
  CHECK(nominal_size(ValueTemplate::kFourYMinusEight) == 9);
}

TEST_CASE("support sets") {
  const CyclotomicSystem s17(17);
  const auto support = build_support(construction_spec(1), s17);
  CHECK(support.residues.size() == 68);
  CHECK(support.complement_paired());

  const CyclotomicSystem s13(13);
  const auto s9 = build_support(construction_spec(9), s13);
  std::set<std::int64_t> component0;
  for (auto r : s9.residues)
    if (r % 8 == 0) component0.insert(r % 13);
  std::set<std::int64_t> expected{0};
  for (auto r : s13.cset(5)) expected.insert(r);
  CHECK(component0 == expected);

  CHECK_THROWS_AS((void)build_support(construction_spec(1), s13), ConstructionInapplicable);
}

TEST_CASE("construct") {
  const auto s1 = construct(1, 17);
  CHECK(s1.s.period() == 68);
  CHECK(s1.u.period() == 136);
  CHECK(value_set(s1.s) == std::vector<int>{-10, -4, -2, 0, 2, 4, 10});

  // At p = 5, 2x-4y = -2 absorbs the last pair, leaving five values.
  const auto s5 = construct(5, 5);
  CHECK(value_set(s5.s) == std::vector<int>{-4, -2, 0, 2, 4});

  try {
    (void)construct(1, 13);
    FAIL("expected ConstructionInapplicable");
  } catch (const ConstructionInapplicable& e) {
    CHECK(std::string(e.what()).find("Construction 1 requires f even") != std::string::npos);
  }
  CHECK_THROWS_AS((void)construct(5, 17), ConstructionInapplicable);
  CHECK_THROWS_AS((void)construct(1, 19), DomainError);

  CHECK(construct(9, 13).u == construct(9, 13).u);
  CHECK(construct(9, 13).u == parker_double(construct(9, 13).s));
}

TEST_CASE("every applicable row below 150 is a balanced Parker pair") {
  for (std::int64_t p : applicable_primes_below(150)) {
    const CyclotomicSystem sys(p);
    for (const auto& spec : construction_table()) {
      if (!is_applicable(spec, sys.f())) continue;
      CAPTURE(p);
      CAPTURE(spec.index);
      const auto support = build_support(spec, sys);
      CHECK(static_cast<std::int64_t>(support.residues.size()) == 4 * p);
      CHECK(support.complement_paired());
      const auto seq = construct(spec.index, sys);
      CHECK(static_cast<std::int64_t>(seq.s.period()) == 4 * p);
      CHECK(seq.u == parker_double(seq.s));
      const auto po = oacf_profile(seq.s);
      const auto pu = pacf_profile(seq.u);
      for (std::size_t tau = 0; tau < seq.s.period(); ++tau) REQUIRE(pu[tau] == 2 * po[tau]);
    }
  }
}

TEST_CASE("verify_table examples") {
  const auto r1 = verify_table(1, 17);
  CHECK(r1.matched);
  CHECK(r1.x == 1);
  CHECK(r1.y == 2);
  CHECK(r1.computed == std::vector<int>{-10, -4, -2, 0, 2, 4, 10});

  const auto r9 = verify_table(9, 13);
  CHECK(r9.matched);
  CHECK(r9.template_text == "{0,±2,±2y,±4y,±(4y+8)}");

  const auto r3 = verify_table(3, 17);
  CHECK(r3.matched);
  CHECK(r3.template_text == "{0,±2,±4,±(2x-4y)}");
}

TEST_CASE("all rows verify on the reference primes and record their branch") {
  for (std::int64_t p : {17, 41, 5, 13, 29, 37}) {
    const CyclotomicSystem sys(p);
    for (const auto& spec : construction_table()) {
      if (!is_applicable(spec, sys.f())) continue;
      const auto r = verify_table(spec.index, sys);
      CAPTURE(p);
      CAPTURE(spec.index);
      CHECK(r.matched);
      CHECK(r.branch != YBranch::kNone);
      if (r.expected.size() < nominal_size(spec.values)) CHECK_FALSE(r.note.empty());
    }
  }
  // With the smallest generator, p = 17 and 37 match on +y, p = 5, 13, 29 on -y.
  CHECK(verify_table(1, 17).branch == YBranch::kPositive);
  CHECK(verify_table(5, 37).branch == YBranch::kPositive);
  CHECK(verify_table(5, 29).branch == YBranch::kNegative);
}

TEST_CASE("generator choice flips the y branch") {
  // 7 is a primitive root of 13 in the other class of generators.
  const auto r = verify_table(9, CyclotomicSystem(13, 7));
  CHECK(r.matched);
  CHECK(r.branch == YBranch::kPositive);
  CHECK(verify_table(9, 13).branch == YBranch::kNegative);
}

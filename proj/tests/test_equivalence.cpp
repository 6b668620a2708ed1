#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "negacorr/construction.hpp"
#include "negacorr/correlation.hpp"
#include "negacorr/equivalence.hpp"
#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"
#include "oracle.hpp"

using namespace negacorr;
namespace fx = negacorr::fixtures;

namespace {

BinarySequence seq(const std::string& s) { return BinarySequence::parse(s); }

// Reference action: build u explicitly and read it through the affine map.
BinarySequence reference_apply(const AffineWitness& w, const BinarySequence& s) {
  const auto n = static_cast<long long>(s.size());
  std::vector<int> u(2 * n);
  for (long long j = 0; j < 2 * n; ++j) u[j] = (s[j % n] ? 1 : 0) ^ (j >= n ? 1 : 0);
  std::vector<int> out(n);
  for (long long i = 0; i < n; ++i) out[i] = u[((w.d * i + w.t) % (2 * n) + 2 * n) % (2 * n)];
  return BinarySequence(out);
}

// Random composition of the three elementary operations.
BinarySequence random_composition(std::mt19937_64& rng, const BinarySequence& s, int depth) {
  const auto n = static_cast<long long>(s.size());
  BinarySequence out = s;
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<long long> shift(0, n - 1);
  for (int k = 0; k < depth; ++k) {
    switch (op(rng)) {
      case 0: out = negate(out); break;
      case 1: out = nega_cyclic_shift(out, static_cast<std::size_t>(shift(rng))); break;
      default: out = nega_decimate(out, oracle::random_unit(rng, 2 * n, 2 * n)); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("witness action on examples") {
  CHECK(apply_witness({1, 2}, seq("01")) == seq("10"));
  CHECK(apply_witness({3, 0}, seq(fx::kPeriod31S)) == seq(fx::kPeriod31SPrime));
  CHECK(apply_witness(identity_witness(), seq(fx::kPeriod31S)) == seq(fx::kPeriod31S));
  CHECK_THROWS_AS((void)apply_witness({2, 0}, seq("011")), NotCoprime);
  CHECK_THROWS_AS((void)apply_witness({3, 0}, seq("011")), NotCoprime);
  CHECK_THROWS_AS((void)nega_decimation_witness(4, 5), NotCoprime);
}

TEST_CASE("canonical witnesses equal the elementary operations") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 70; n += 3) {
    const BinarySequence s(oracle::random_bits(rng, n));
    CHECK(apply_witness(negation_witness(n), s) == negate(s));
    for (std::size_t tau = 0; tau < n; tau += 1 + n / 5)
      CHECK(apply_witness(nega_shift_witness(tau), s) == nega_cyclic_shift(s, tau));
    for (std::int64_t d : units_mod_2n(n))
      CHECK(apply_witness(nega_decimation_witness(d, n), s) == nega_decimate(s, d));
  }
}

TEST_CASE("packed action matches the explicit doubled-sequence action") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 150;
    const BinarySequence s(oracle::random_bits(rng, n));
    const auto m = static_cast<long long>(2 * n);
    const AffineWitness w{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
    CHECK(apply_witness(w, s) == reference_apply(w, s));
  }
}

TEST_CASE("composition law and inverses") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 90;
    const auto m = static_cast<long long>(2 * n);
    const BinarySequence s(oracle::random_bits(rng, n));
    const AffineWitness a{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
    const AffineWitness b{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
    const auto ab = compose(a, b, n);
    CHECK(ab.d == (a.d * b.d) % m);
    CHECK(ab.t == (a.d * b.t + a.t) % m);
    CHECK(apply_witness(ab, s) == apply_witness(b, apply_witness(a, s)));
    CHECK(apply_witness(inverse(a, n), apply_witness(a, s)) == s);
  }
}

TEST_CASE("every witness preserves the OACF multiset") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial * 4;  // up to 238
    const BinarySequence s(oracle::random_bits(rng, n));
    const auto base = oacf_distribution(s, true);
    const auto m = static_cast<long long>(2 * n);
    for (int k = 0; k < 10; ++k) {
      const AffineWitness w{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
      CHECK(oacf_distribution(apply_witness(w, s), true) == base);
    }
  }
}

TEST_CASE("oacf_equivalent") {
  const auto s = seq(fx::kPeriod31S);
  const auto sp = seq(fx::kPeriod31SPrime);
  const auto w = oacf_equivalent(s, sp);
  REQUIRE(w.has_value());
  CHECK(apply_witness(*w, s) == sp);
  CHECK(*w <= AffineWitness{3, 0});
  CHECK(find_witness_with_d(s, sp, 3) == AffineWitness{3, 0});

  CHECK_FALSE(oacf_equivalent(seq(fx::kPeriod10S1), seq(fx::kPeriod10S2)).has_value());
  CHECK(oacf_equivalent(s, s) == AffineWitness{1, 0});
  CHECK_THROWS_AS((void)oacf_equivalent(s, seq("01")), DomainError);
}

TEST_CASE("search returns the lexicographically smallest witness") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {3u, 6u, 10u, 17u}) {
    const BinarySequence s(oracle::random_bits(rng, n));
    const auto m = static_cast<long long>(2 * n);
    const AffineWitness w{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
    const auto target = apply_witness(w, s);
    std::optional<AffineWitness> brute;
    for (long long d : units_mod_2n(n))
      for (long long t = 0; t < m && !brute; ++t)
        if (reference_apply({d, t}, s) == target) brute = AffineWitness{d, t};
    CHECK(oacf_equivalent(s, target) == brute);
  }
}

TEST_CASE("reachability without nega-decimation") {
  const auto s = seq(fx::kPeriod31S);
  CHECK_FALSE(reachable_without_negadecimation(s, seq(fx::kPeriod31SPrime)));
  CHECK(reachable_without_negadecimation(s, negate(s)));
  CHECK(find_witness_with_d(s, negate(s), 1) == AffineWitness{1, 31});
  CHECK(find_witness_with_d(s, nega_cyclic_shift(s, 5), 1) == AffineWitness{1, 5});
}

TEST_CASE("search finds random compositions") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const BinarySequence s(oracle::random_bits(rng, n));
    const auto target = random_composition(rng, s, 1 + trial % 5);
    const auto w = oacf_equivalent(s, target);
    REQUIRE(w.has_value());
    CHECK(apply_witness(*w, s) == target);
  }
}

TEST_CASE("Parker-form pairs with equal PACF multisets have equal OACF multisets") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial;
    const BinarySequence s(oracle::random_bits(rng, n));
    const auto m = static_cast<long long>(2 * n);
    const AffineWitness w{oracle::random_unit(rng, m, m + 1), static_cast<long long>(rng() % m)};
    const BinarySequence u = parker_double(s);
    const BinarySequence u2 = parker_double(apply_witness(w, s));
    REQUIRE(pacf_distribution(u, true) == pacf_distribution(u2, true));
    const auto s2 = try_parker_split(u2);
    REQUIRE(s2.has_value());
    CHECK(oacf_distribution(*s2, true) == oacf_distribution(s, true));
  }
}

TEST_CASE("natural label order") {
  CHECK(natural_less("s2", "s10"));
  CHECK_FALSE(natural_less("s10", "s9"));
  CHECK(natural_less("a", "b"));
  CHECK(natural_less("s1", "s1a"));
}

TEST_CASE("classify") {
  const auto single = classify({{"x", seq("0110")}});
  REQUIRE(single.size() == 1);
  CHECK(single[0].members == std::vector<std::string>{"x"});
  CHECK(classify({}).empty());
  CHECK_THROWS_AS((void)classify({{"a", seq("01")}, {"b", seq("011")}}), DomainError);

  const auto mixed = classify({{"s1", seq(fx::kPeriod10S1)},
                               {"s2", seq(fx::kPeriod10S2)},
                               {"n1", negate(seq(fx::kPeriod10S1))}});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].representative == "n1");
  CHECK(mixed[0].members == std::vector<std::string>{"n1", "s1"});

  const CyclotomicSystem s17(17);
  std::vector<LabeledSequence> items;
  for (int i = 1; i <= 4; ++i) items.push_back({"s" + std::to_string(i), construct(i, s17).s});
  const auto classes = classify(items);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members == std::vector<std::string>{"s1", "s4"});
  CHECK(classes[1].members == std::vector<std::string>{"s2", "s3"});
  for (const auto& cls : classes) {
    const auto& rep = items[std::stoul(cls.representative.substr(1)) - 1].sequence;
    for (const auto& m : cls.members)
      CHECK(apply_witness(cls.witnesses.at(m), rep) ==
            items[std::stoul(m.substr(1)) - 1].sequence);
  }
}

TEST_CASE("construction 3 rows merge further under the full group") {
  // Beyond the eight listed pairs, s9 ~ s13 and s10 ~ s14: the affine
  // group also moves the Z_8 component, which the listed relations never do.
  const CyclotomicSystem s13(13);
  const auto s9 = construct(9, s13).s;
  const auto s13seq = construct(13, s13).s;
  const auto w = oacf_equivalent(s9, s13seq);
  REQUIRE(w.has_value());
  CHECK(apply_witness(*w, s9) == s13seq);
  CHECK(w->d % 8 != 1);

  std::vector<LabeledSequence> items;
  for (int i = 5; i <= 16; ++i) items.push_back({"s" + std::to_string(i), construct(i, s13).s});
  const auto classes = classify(items);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].members == std::vector<std::string>{"s5", "s8"});
  CHECK(classes[1].members == std::vector<std::string>{"s6", "s7"});
  CHECK(classes[2].members == std::vector<std::string>{"s9", "s12", "s13", "s16"});
  CHECK(classes[3].members == std::vector<std::string>{"s10", "s11", "s14", "s15"});
}

TEST_CASE("listed relations: printed multipliers and conventions") {
  const auto rows = verify_table4(17, 13);
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    CAPTURE(r.relation.row);
    CHECK(r.holds());
    CHECK(r.searched.has_value());
    CHECK(r.d % 8 == 1);
  }
  // Rows 1-4 and 6-8 hold when d multiplies the support (u'(j) = u(d^-1 j));
  // row 5 holds when d decimates u directly.
  for (const auto& r : rows) {
    CAPTURE(r.relation.row);
    if (r.relation.row == 5) {
      CHECK(r.holds_as_decimation);
      CHECK_FALSE(r.holds_as_support_action);
    } else {
      CHECK_FALSE(r.holds_as_decimation);
      CHECK(r.holds_as_support_action);
    }
  }
  // Row 1 at p = 17, alpha = 3: d = eta(1, 3^3 mod 17 = 10).
  CHECK(rows[0].alpha == 3);
  CHECK(rows[0].d % 17 == 10);
  CHECK_THROWS_AS((void)verify_table4(13, 13), ConstructionInapplicable);
}

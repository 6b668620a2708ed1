#include "negacorr/construction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "negacorr/correlation.hpp"
#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"

namespace negacorr {

namespace {

using V = ValueTemplate;
constexpr FParity kEven = FParity::kEven;
constexpr FParity kOdd = FParity::kOdd;

std::vector<ConstructionSpec> make_table() {
  return {
      {1, 1, {2}, {3, 4, 1, 1}, V::kTwoXPlusFourY, kEven},
      {2, 1, {0, 1, 2}, {4, 3, 1, 1}, V::kTwoXMinusFourY, kEven},
      {3, 1, {3}, {6, 1, 4, 4}, V::kTwoXMinusFourY, kEven},
      {4, 1, {0, 1, 3}, {1, 6, 4, 4}, V::kTwoXPlusFourY, kEven},
      {5, 2, {0}, {3, 4, 1, 1}, V::kTwoXPlusFourY, kOdd},
      {6, 2, {1}, {4, 3, 1, 1}, V::kTwoXMinusFourY, kOdd},
      {7, 2, {0, 2, 3}, {6, 1, 4, 4}, V::kTwoXMinusFourY, kOdd},
      {8, 2, {1, 2, 3}, {1, 6, 4, 4}, V::kTwoXPlusFourY, kOdd},
      {9, 3, {0}, {5, 2, 1, 1}, V::kFourYPlusEight, kOdd},
      {10, 3, {0}, {2, 5, 1, 1}, V::kFourYMinusEight, kOdd},
      {11, 3, {0}, {5, 2, 4, 4}, V::kFourYMinusEight, kOdd},
      {12, 3, {0}, {2, 5, 4, 4}, V::kFourYPlusEight, kOdd},
      {13, 3, {0, 3}, {1, 2, 2, 1}, V::kFourYPlusEight, kOdd},
      {14, 3, {0, 3}, {1, 5, 5, 1}, V::kFourYMinusEight, kOdd},
      {15, 3, {0, 3}, {4, 2, 2, 4}, V::kFourYMinusEight, kOdd},
      {16, 3, {0, 3}, {4, 5, 5, 4}, V::kFourYPlusEight, kOdd},
  };
}

std::vector<int> symmetric_closure(std::initializer_list<std::int64_t> base) {
  std::set<int> out;
  for (auto v : base) {
    out.insert(static_cast<int>(v));
    out.insert(static_cast<int>(-v));
  }
  return {out.begin(), out.end()};
}

}  // namespace

const char* to_string(FParity parity) noexcept { return parity == kEven ? "even" : "odd"; }

std::string to_string(ValueTemplate t) {
  switch (t) {
    case V::kTwoXPlusFourY: return "{0,±2,±4,±(2x+4y)}";
    case V::kTwoXMinusFourY: return "{0,±2,±4,±(2x-4y)}";
    case V::kFourYPlusEight: return "{0,±2,±2y,±4y,±(4y+8)}";
    case V::kFourYMinusEight: return "{0,±2,±2y,±4y,±(4y-8)}";
  }
  return "?";
}

std::vector<int> expected_values(ValueTemplate t, std::int64_t x, std::int64_t y) {
  switch (t) {
    case V::kTwoXPlusFourY: return symmetric_closure({0, 2, 4, 2 * x + 4 * y});
    case V::kTwoXMinusFourY: return symmetric_closure({0, 2, 4, 2 * x - 4 * y});
    case V::kFourYPlusEight: return symmetric_closure({0, 2, 2 * y, 4 * y, 4 * y + 8});
    case V::kFourYMinusEight: return symmetric_closure({0, 2, 2 * y, 4 * y, 4 * y - 8});
  }
  return {};
}

std::size_t nominal_size(ValueTemplate t) noexcept {
  return t == V::kTwoXPlusFourY || t == V::kTwoXMinusFourY ? 7 : 9;
}

const std::vector<ConstructionSpec>& construction_table() {
  static const std::vector<ConstructionSpec> table = make_table();
  return table;
}

const ConstructionSpec& construction_spec(int i) {
  if (i < 1 || i > 16) throw DomainError("construction index must be in 1..16");
  return construction_table()[static_cast<std::size_t>(i - 1)];
}

CrtIsomorphism::CrtIsomorphism(std::int64_t p) : p_(p) {
  if (p < 3 || p % 2 == 0) throw DomainError("CRT over Z_8 x Z_p needs odd p >= 3");
  const std::int64_t m = 8 * p;
  // e8 = p * (p^-1 mod 8), ep = 8 * (8^-1 mod p)
  e8_ = p * inverse_mod(p, 8) % m;
  ep_ = 8 * inverse_mod(8, p) % m;
}

std::pair<std::int64_t, std::int64_t> CrtIsomorphism::phi(std::int64_t x) const noexcept {
  return {mod_floor(x, 8), mod_floor(x, p_)};
}

std::int64_t CrtIsomorphism::eta(std::int64_t a, std::int64_t b) const noexcept {
  const std::int64_t m = modulus();
  return (mod_floor(a, 8) * e8_ + mod_floor(b, p_) * ep_) % m;
}

std::vector<int> expand_g(const std::vector<int>& g_prime) {
  std::vector<int> g;
  for (int j = 0; j < 4; ++j) {
    const bool in = std::find(g_prime.begin(), g_prime.end(), j) != g_prime.end();
    g.push_back(in ? j : j + 4);
  }
  std::sort(g.begin(), g.end());
  return g;
}

std::array<int, 8> expand_gamma(const std::array<int, 4>& gamma) {
  std::array<int, 8> a{};
  for (std::size_t n = 0; n < 4; ++n) {
    if (gamma[n] < 1 || gamma[n] > 6) throw DomainError("gamma entries must be C-set indices 1..6");
    a[n] = gamma[n];
    a[n + 4] = complement_cset(gamma[n]);
  }
  return a;
}

bool SupportSet::contains(std::int64_t r) const {
  return std::binary_search(residues.begin(), residues.end(), mod_floor(r, modulus()));
}

bool SupportSet::complement_paired() const {
  const std::int64_t half = 4 * p;
  for (std::int64_t r = 0; r < half; ++r)
    if (contains(r) == contains(r + half)) return false;
  return true;
}

BinarySequence SupportSet::characteristic() const {
  BinarySequence u(static_cast<std::size_t>(modulus()));
  for (auto r : residues) u.set(static_cast<std::size_t>(r), true);
  return u;
}

bool is_applicable(const ConstructionSpec& spec, std::int64_t f) noexcept {
  return (f % 2 == 0) == (spec.f_parity == kEven);
}

SupportSet build_support(const ConstructionSpec& spec, const CyclotomicSystem& sys) {
  if (!is_applicable(spec, sys.f()))
    throw ConstructionInapplicable("Construction " + std::to_string(spec.construction) +
                                   " requires f " + to_string(spec.f_parity) + " (p=" +
                                   std::to_string(sys.p()) + " has f=" +
                                   std::to_string(sys.f()) + ")");
  const CrtIsomorphism crt(sys.p());
  SupportSet out{sys.p(), {}};
  for (int g : expand_g(spec.g_prime)) out.residues.push_back(crt.eta(g, 0));
  const auto a = expand_gamma(spec.gamma);
  for (int n = 0; n < 8; ++n)
    for (auto r : sys.cset(a[static_cast<std::size_t>(n)])) out.residues.push_back(crt.eta(n, r));
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

ParkerSequence construct(int index, const CyclotomicSystem& sys) {
  const SupportSet support = build_support(construction_spec(index), sys);
  BinarySequence u = support.characteristic();
  auto s = try_parker_split(u);
  if (!s)
    throw std::logic_error("support of row " + std::to_string(index) +
                           " is not complement-paired");
  return {std::move(*s), std::move(u)};
}

ParkerSequence construct(int index, std::int64_t p, std::optional<std::int64_t> alpha) {
  return construct(index, CyclotomicSystem(p, alpha));
}

const char* to_string(YBranch branch) noexcept {
  switch (branch) {
    case YBranch::kNone: return "none";
    case YBranch::kPositive: return "+y";
    case YBranch::kNegative: return "-y";
    case YBranch::kBoth: return "both";
  }
  return "?";
}

VerificationReport verify_table(int index, const CyclotomicSystem& sys) {
  const ConstructionSpec& spec = construction_spec(index);
  const ParkerSequence seq = construct(index, sys);

  VerificationReport report;
  report.index = index;
  report.p = sys.p();
  report.x = sys.x();
  report.y = sys.y();
  report.f = sys.f();
  report.alpha = sys.alpha();
  report.template_text = to_string(spec.values);
  report.computed = oacf_distribution(seq.s, false).support();

  const auto plus = expected_values(spec.values, sys.x(), sys.y());
  const auto minus = expected_values(spec.values, sys.x(), -sys.y());
  const bool plus_ok = report.computed == plus;
  const bool minus_ok = report.computed == minus;
  report.matched = plus_ok || minus_ok;
  report.branch = plus_ok && minus_ok ? YBranch::kBoth
                  : plus_ok           ? YBranch::kPositive
                  : minus_ok          ? YBranch::kNegative
                                      : YBranch::kNone;
  report.expected = report.branch == YBranch::kNegative ? minus : plus;
  if (report.matched && report.expected.size() < nominal_size(spec.values))
    report.note = "template values coincide at p=" + std::to_string(sys.p()) + " (" +
                  std::to_string(report.expected.size()) + " distinct of " +
                  std::to_string(nominal_size(spec.values)) + ")";
  return report;
}

VerificationReport verify_table(int index, std::int64_t p, std::optional<std::int64_t> alpha) {
  return verify_table(index, CyclotomicSystem(p, alpha));
}

}  // namespace negacorr

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negacorr/cyclotomy.hpp"
#include "negacorr/sequence.hpp"

namespace negacorr {

enum class FParity { kEven, kOdd };

const char* to_string(FParity parity) noexcept;

/// Symbolic OACF value sets of the 16 period-4p families.
enum class ValueTemplate {
  kTwoXPlusFourY,    // {0, ±2, ±4, ±(2x+4y)}
  kTwoXMinusFourY,   // {0, ±2, ±4, ±(2x-4y)}
  kFourYPlusEight,   // {0, ±2, ±2y, ±4y, ±(4y+8)}
  kFourYMinusEight,  // {0, ±2, ±2y, ±4y, ±(4y-8)}
};

std::string to_string(ValueTemplate t);

/// Sorted distinct values of the template instantiated at (x, y).
std::vector<int> expected_values(ValueTemplate t, std::int64_t x, std::int64_t y);

/// Number of distinct values the template has when nothing coincides.
std::size_t nominal_size(ValueTemplate t) noexcept;

/// One row of the construction tables.
struct ConstructionSpec {
  int index;                  // 1..16
  int construction;           // 1, 2 or 3
  std::vector<int> g_prime;   // subset of {0,1,2,3}
  std::array<int, 4> gamma;   // C-set indices A_0..A_3
  ValueTemplate values;
  FParity f_parity;
};

const std::vector<ConstructionSpec>& construction_table();

/// Row i in 1..16; throws DomainError otherwise.
const ConstructionSpec& construction_spec(int i);

/// Z_8 x Z_p <-> Z_8p via the Chinese remainder theorem.
class CrtIsomorphism {
 public:
  /// p must be odd and >= 3.
  explicit CrtIsomorphism(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t modulus() const noexcept { return 8 * p_; }

  /// x -> (x mod 8, x mod p).
  std::pair<std::int64_t, std::int64_t> phi(std::int64_t x) const noexcept;
  /// Inverse of phi.
  std::int64_t eta(std::int64_t a, std::int64_t b) const noexcept;

 private:
  std::int64_t p_;
  std::int64_t e8_;  // = 1 mod 8, 0 mod p
  std::int64_t ep_;  // = 0 mod 8, 1 mod p
};

/// G = G' ∪ { j+4 : j in {0..3} \ G' }, sorted.
std::vector<int> expand_g(const std::vector<int>& g_prime);

/// A_0..A_7 as C-set indices with A_{n+4} the complement of A_n.
std::array<int, 8> expand_gamma(const std::array<int, 4>& gamma);

/// Subset of Z_8p, sorted ascending.
struct SupportSet {
  std::int64_t p = 0;
  std::vector<std::int64_t> residues;

  std::int64_t modulus() const noexcept { return 8 * p; }
  bool contains(std::int64_t r) const;
  /// r in S  <=>  r + 4p not in S, for every r.
  bool complement_paired() const;
  /// u(j) = 1 iff j in S, period 8p.
  BinarySequence characteristic() const;
};

bool is_applicable(const ConstructionSpec& spec, std::int64_t f) noexcept;

/// eta((G x {0}) ∪ ⋃_n ({n} x A_n)). Throws ConstructionInapplicable on
/// an f-parity mismatch.
SupportSet build_support(const ConstructionSpec& spec, const CyclotomicSystem& sys);

struct ParkerSequence {
  BinarySequence s;  // period 4p
  BinarySequence u;  // period 8p, u = s || (s xor 1)
};

ParkerSequence construct(int index, const CyclotomicSystem& sys);
ParkerSequence construct(int index, std::int64_t p,
                         std::optional<std::int64_t> alpha = std::nullopt);

/// Which sign of y made the tabulated value set match.
enum class YBranch { kNone, kPositive, kNegative, kBoth };

const char* to_string(YBranch branch) noexcept;

struct VerificationReport {
  int index = 0;
  std::int64_t p = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t f = 0;
  std::int64_t alpha = 0;
  bool matched = false;
  YBranch branch = YBranch::kNone;
  std::string template_text;
  std::vector<int> computed;  // distinct OACF values over 0 < tau < 4p
  std::vector<int> expected;  // template at y (or -y when only that branch matched)
  std::string note;           // set when the matched template has coinciding values
};

VerificationReport verify_table(int index, const CyclotomicSystem& sys);
VerificationReport verify_table(int index, std::int64_t p,
                                std::optional<std::int64_t> alpha = std::nullopt);

}  // namespace negacorr

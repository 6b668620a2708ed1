#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace negacorr {

bool is_prime(std::int64_t n) noexcept;

/// (base^exp) mod m for m >= 1.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept;

/// Multiplicative inverse of a modulo m; throws NotCoprime if none exists.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// p = x^2 + 4y^2 = 4f + 1, normalized to x = 1 (mod 4) and y >= 0.
struct QuarticDecomposition {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t f = 0;
  friend bool operator==(const QuarticDecomposition&, const QuarticDecomposition&) = default;
};

/// Throws DomainError unless p is prime and p = 1 (mod 4).
QuarticDecomposition quartic_decomposition(std::int64_t p);

/// Multiplicative order of a modulo prime p (a not divisible by p).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t p);

bool is_primitive_root(std::int64_t a, std::int64_t p);

/// Smallest generator of GF(p)^* in [2, p). Throws DomainError for p < 3 or
/// composite p.
std::int64_t smallest_primitive_root(std::int64_t p);

/// Order-4 cyclotomic classes D_k = { alpha^(4s+k) } of GF(p)^* and the six
/// pairwise unions C_1..C_6. Immutable once built.
class CyclotomicSystem {
 public:
  /// alpha defaults to the smallest primitive root. An explicit alpha must be
  /// a primitive root of p.
  explicit CyclotomicSystem(std::int64_t p, std::optional<std::int64_t> alpha = std::nullopt);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t x() const noexcept { return decomposition_.x; }
  std::int64_t y() const noexcept { return decomposition_.y; }
  std::int64_t f() const noexcept { return decomposition_.f; }
  std::int64_t alpha() const noexcept { return alpha_; }
  const QuarticDecomposition& decomposition() const noexcept { return decomposition_; }

  /// Class index k in 0..3 with r in D_k, or -1 for r = 0 (mod p).
  int class_of(std::int64_t r) const noexcept;

  /// Sorted members of D_k, k in 0..3.
  const std::vector<std::int64_t>& cyclotomic_class(int k) const;

  /// The two class indices whose union is C_i (i in 1..6).
  static std::array<int, 2> cset_classes(int i);

  /// Sorted members of C_i.
  std::vector<std::int64_t> cset(int i) const;

  /// True iff r lies in C_i.
  bool in_cset(int i, std::int64_t r) const;

 private:
  std::int64_t p_;
  QuarticDecomposition decomposition_;
  std::int64_t alpha_;
  std::vector<int> class_index_;
  std::array<std::vector<std::int64_t>, 4> classes_;
};

/// Index of the complementary C-set: C_i and C_{7-i} partition GF(p)^*.
constexpr int complement_cset(int i) noexcept { return 7 - i; }

}  // namespace negacorr

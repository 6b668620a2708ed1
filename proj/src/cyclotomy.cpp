#include "negacorr/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <iterator>
#include <string>
#include <utility>

#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"

namespace negacorr {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
  __extension__ typedef __int128 Wide;
  std::int64_t result = 1 % m;
  std::int64_t b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(Wide{result} * b % m);
    b = static_cast<std::int64_t>(Wide{b} * b % m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1)
    throw NotCoprime(std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  return mod_floor(old_s, m);
}

QuarticDecomposition quartic_decomposition(std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw DomainError(std::to_string(p) + " is not 1 mod 4");
  for (std::int64_t y = 0; 4 * y * y <= p; ++y) {
    const std::int64_t rest = p - 4 * y * y;
    const std::int64_t x = isqrt(rest);
    if (x * x != rest) continue;
    return {mod_floor(x, 4) == 1 ? x : -x, y, (p - 1) / 4};
  }
  // Unreachable for primes 1 mod 4 (Fermat).
  throw DomainError("no decomposition p = x^2 + 4y^2 for " + std::to_string(p));
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t p) {
  if (mod_floor(a, p) == 0) throw DomainError("0 has no multiplicative order");
  std::int64_t order = p - 1;
  for (std::int64_t q : prime_factors(p - 1))
    while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
  return order;
}

bool is_primitive_root(std::int64_t a, std::int64_t p) {
  return mod_floor(a, p) != 0 && multiplicative_order(a, p) == p - 1;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p < 3) throw DomainError("primitive root needs p >= 3");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  for (std::int64_t a = 2; a < p; ++a)
    if (is_primitive_root(a, p)) return a;
  throw DomainError("no primitive root found for " + std::to_string(p));
}

CyclotomicSystem::CyclotomicSystem(std::int64_t p, std::optional<std::int64_t> alpha)
    : p_(p), decomposition_(quartic_decomposition(p)) {
  if (alpha) {
    alpha_ = mod_floor(*alpha, p);
    if (!is_primitive_root(alpha_, p))
      throw DomainError(std::to_string(*alpha) + " is not a primitive root of " +
                        std::to_string(p));
  } else {
    alpha_ = smallest_primitive_root(p);
  }
  class_index_.assign(static_cast<std::size_t>(p), -1);
  std::int64_t power = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    class_index_[static_cast<std::size_t>(power)] = static_cast<int>(e % 4);
    classes_[static_cast<std::size_t>(e % 4)].push_back(power);
    power = power * alpha_ % p;
  }
  for (auto& c : classes_) std::sort(c.begin(), c.end());
}

int CyclotomicSystem::class_of(std::int64_t r) const noexcept {
  return class_index_[static_cast<std::size_t>(mod_floor(r, p_))];
}

const std::vector<std::int64_t>& CyclotomicSystem::cyclotomic_class(int k) const {
  if (k < 0 || k > 3) throw DomainError("class index must be in 0..3");
  return classes_[static_cast<std::size_t>(k)];
}

std::array<int, 2> CyclotomicSystem::cset_classes(int i) {
  static constexpr std::array<std::array<int, 2>, 6> kUnions{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  if (i < 1 || i > 6) throw DomainError("C-set index must be in 1..6");
  return kUnions[static_cast<std::size_t>(i - 1)];
}

std::vector<std::int64_t> CyclotomicSystem::cset(int i) const {
  const auto [a, b] = cset_classes(i);
  std::vector<std::int64_t> out;
  std::merge(classes_[a].begin(), classes_[a].end(), classes_[b].begin(), classes_[b].end(),
             std::back_inserter(out));
  return out;
}

bool CyclotomicSystem::in_cset(int i, std::int64_t r) const {
  const auto [a, b] = cset_classes(i);
  const int k = class_of(r);
  return k == a || k == b;
}

}  // namespace negacorr

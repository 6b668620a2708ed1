#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "negacorr/sequence.hpp"

namespace negacorr {

/// a xor 1, element-wise.
BinarySequence negate(const BinarySequence& a);

/// [a(tau), ..., a(N-1), a(0), ..., a(tau-1)], 0 <= tau < N.
BinarySequence cyclic_shift(const BinarySequence& a, std::size_t tau);

/// Cyclic shift that complements the wrapped prefix:
/// [a(tau), ..., a(N-1), a(0)+1, ..., a(tau-1)+1], 0 <= tau < N.
BinarySequence nega_cyclic_shift(const BinarySequence& a, std::size_t tau);

/// b(i) = a(d*i mod N). Throws NotCoprime unless gcd(d, N) = 1.
BinarySequence decimate(const BinarySequence& a, std::int64_t d);

/// u = s || (s xor 1), period 2N.
BinarySequence parker_double(const BinarySequence& s);

/// First half of u when u(i + N) = u(i) + 1 for every i < N, otherwise nullopt.
std::optional<BinarySequence> try_parker_split(const BinarySequence& u);

/// s'(tau) = s(d*tau mod N) + floor((d*tau mod 2N) / N), computed directly.
/// Requires gcd(d, 2N) = 1. Agrees with
/// try_parker_split(decimate(parker_double(s), d)).
BinarySequence nega_decimate(const BinarySequence& s, std::int64_t d);

/// Reduces d into [0, m). m must be positive.
std::int64_t mod_floor(std::int64_t d, std::int64_t m) noexcept;

}  // namespace negacorr

#include "negacorr/operations.hpp"

#include <numeric>
#include <string>

#include "negacorr/errors.hpp"
#include "packed.hpp"

namespace negacorr {

namespace {

void require_unit(std::int64_t d, std::int64_t modulus, const char* what) {
  if (std::gcd(d, modulus) != 1)
    throw NotCoprime(std::string(what) + ": gcd(" + std::to_string(d) + ", " +
                     std::to_string(modulus) + ") != 1");
}

void require_nonempty(const BinarySequence& a) {
  if (a.empty()) throw DomainError("empty sequence");
}

}  // namespace

std::int64_t mod_floor(std::int64_t d, std::int64_t m) noexcept {
  const std::int64_t r = d % m;
  return r < 0 ? r + m : r;
}

BinarySequence negate(const BinarySequence& a) {
  const auto src = a.words();
  std::vector<detail::Word> out(src.begin(), src.end());
  for (auto& w : out) w = ~w;
  return BinarySequence::from_words(a.size(), std::move(out));
}

BinarySequence cyclic_shift(const BinarySequence& a, std::size_t tau) {
  require_nonempty(a);
  return a.window(tau, false);
}

BinarySequence nega_cyclic_shift(const BinarySequence& a, std::size_t tau) {
  require_nonempty(a);
  return a.window(tau, true);
}

BinarySequence decimate(const BinarySequence& a, std::int64_t d) {
  require_nonempty(a);
  const auto n = static_cast<std::int64_t>(a.size());
  require_unit(d, n, "decimation needs gcd(d, N) = 1");
  const std::int64_t step = mod_floor(d, n);
  BinarySequence out(a.size());
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.set(i, a[static_cast<std::size_t>(idx)]);
    idx += step;
    if (idx >= n) idx -= n;
  }
  return out;
}

BinarySequence parker_double(const BinarySequence& s) {
  require_nonempty(s);
  const detail::DoubledBits doubled(s, true);
  const std::size_t n2 = 2 * s.size();
  std::vector<detail::Word> out(detail::word_count(n2));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = doubled.extract(k * detail::kWordBits);
  return BinarySequence::from_words(n2, std::move(out));
}

std::optional<BinarySequence> try_parker_split(const BinarySequence& u) {
  if (u.empty() || u.size() % 2 != 0) return std::nullopt;
  const std::size_t n = u.size() / 2;
  BinarySequence first(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == u[i + n]) return std::nullopt;
    first.set(i, u[i]);
  }
  return first;
}

BinarySequence nega_decimate(const BinarySequence& s, std::int64_t d) {
  require_nonempty(s);
  const auto n = static_cast<std::int64_t>(s.size());
  require_unit(d, 2 * n, "nega-decimation needs gcd(d, 2N) = 1");
  const std::int64_t step = mod_floor(d, 2 * n);
  BinarySequence out(s.size());
  // idx tracks d*tau mod 2N; the half it falls in decides the complement.
  std::int64_t idx = 0;
  for (std::size_t tau = 0; tau < s.size(); ++tau) {
    const bool upper = idx >= n;
    out.set(tau, s[static_cast<std::size_t>(upper ? idx - n : idx)] != upper);
    idx += step;
    if (idx >= 2 * n) idx -= 2 * n;
  }
  return out;
}

}  // namespace negacorr

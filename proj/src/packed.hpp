#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "negacorr/sequence.hpp"

namespace negacorr::detail {

using Word = BinarySequence::Word;
constexpr std::size_t kWordBits = BinarySequence::kWordBits;

inline std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline Word tail_mask(std::size_t n) {
  const std::size_t r = n % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

/// The 2N-bit concatenation a || a (cyclic) or a || (a xor 1) (negacyclic),
/// packed so that any 64-bit run starting below 2N can be pulled out with
/// one funnel shift.
class DoubledBits {
 public:
  DoubledBits(const BinarySequence& a, bool negate_second_half);

  /// Bits [start, start + 64) of the doubled sequence; bits at or past 2N read 0.
  Word extract(std::size_t start) const noexcept {
    const std::size_t q = start / kWordBits;
    const std::size_t r = start % kWordBits;
    const Word lo = q < words_.size() ? words_[q] : 0;
    if (r == 0) return lo;
    const Word hi = q + 1 < words_.size() ? words_[q + 1] : 0;
    return (lo >> r) | (hi << (kWordBits - r));
  }

  std::size_t half() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<Word> words_;
};

/// Number of i in [0, N) with lhs(i) != doubled(start + i).
inline std::size_t mismatches(const BinarySequence& lhs, const DoubledBits& doubled,
                              std::size_t start) noexcept {
  const auto words = lhs.words();
  std::size_t count = 0;
  const std::size_t last = words.size() - 1;
  for (std::size_t k = 0; k < last; ++k)
    count += std::popcount(words[k] ^ doubled.extract(start + k * kWordBits));
  count += std::popcount((words[last] ^ doubled.extract(start + last * kWordBits)) &
                         tail_mask(lhs.size()));
  return count;
}

}  // namespace negacorr::detail

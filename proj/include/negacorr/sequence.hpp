#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negacorr {

/// A binary sequence of period N, stored bit-packed (bit i lives in word
/// i / 64 at position i % 64). Bits past N in the last word are always zero,
/// so word-wise equality and popcounts need no masking.
class BinarySequence {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinarySequence() = default;

  /// All-zero sequence of period n.
  explicit BinarySequence(std::size_t n);

  /// Elements must be 0 or 1; anything else throws DomainError.
  BinarySequence(std::initializer_list<int> bits);
  explicit BinarySequence(std::span<const int> bits);

  /// Parses '0'/'1' text. Whitespace and commas are ignored. Throws
  /// ParseError on any other character or on empty input.
  static BinarySequence parse(std::string_view text);

  /// Adopts packed words; bits past n are cleared. words.size() must be
  /// ceil(n / 64).
  static BinarySequence from_words(std::size_t n, std::vector<Word> words);

  std::size_t period() const noexcept { return size_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  /// Bounds-checked read, 0 <= i < N.
  bool at(std::size_t i) const;
  /// Read with the index reduced modulo N; valid for any integer index.
  bool at_mod(std::int64_t i) const noexcept;

  void set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    Word& w = words_[i / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  /// N bits read cyclically starting at `start`, i.e. b(i) = a((start + i) mod N).
  /// With `negate_wrapped` the bits taken after the wrap are complemented.
  BinarySequence window(std::size_t start, bool negate_wrapped) const;

  std::string to_string() const;
  std::vector<int> to_vector() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Number of positions where a and b differ. Periods must match.
std::size_t hamming_distance(const BinarySequence& a, const BinarySequence& b);

}  // namespace negacorr

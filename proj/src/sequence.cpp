#include "negacorr/sequence.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "negacorr/errors.hpp"
#include "packed.hpp"

namespace negacorr {

namespace detail {

DoubledBits::DoubledBits(const BinarySequence& a, bool negate_second_half)
    : n_(a.size()), words_(word_count(2 * a.size()), 0) {
  const auto src = a.words();
  std::copy(src.begin(), src.end(), words_.begin());
  // Append the second copy at bit offset N.
  const std::size_t offset = n_;
  for (std::size_t k = 0; k < src.size(); ++k) {
    Word w = negate_second_half ? ~src[k] : src[k];
    if (k + 1 == src.size()) w &= tail_mask(n_);
    const std::size_t bit = offset + k * kWordBits;
    const std::size_t q = bit / kWordBits;
    const std::size_t r = bit % kWordBits;
    words_[q] |= w << r;
    if (r != 0 && q + 1 < words_.size()) words_[q + 1] |= w >> (kWordBits - r);
  }
}

}  // namespace detail

BinarySequence::BinarySequence(std::size_t n) : size_(n), words_(detail::word_count(n), 0) {}

BinarySequence::BinarySequence(std::initializer_list<int> bits)
    : BinarySequence(std::span<const int>(bits.begin(), bits.size())) {}

BinarySequence::BinarySequence(std::span<const int> bits) : BinarySequence(bits.size()) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1)
      throw DomainError("sequence element " + std::to_string(i) + " is not 0 or 1");
    set(i, bits[i] == 1);
  }
}

BinarySequence BinarySequence::parse(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    switch (c) {
      case '0':
      case '1':
        bits.push_back(c - '0');
        break;
      case ' ':
      case '\t':
      case '\n':
      case '\r':
      case ',':
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(pos),
                         pos);
    }
  }
  if (bits.empty()) throw ParseError("empty sequence literal", text.size());
  return BinarySequence(std::span<const int>(bits));
}

BinarySequence BinarySequence::from_words(std::size_t n, std::vector<Word> words) {
  if (words.size() != detail::word_count(n))
    throw DomainError("word count does not match period");
  BinarySequence s;
  s.size_ = n;
  s.words_ = std::move(words);
  s.clear_tail();
  return s;
}

bool BinarySequence::at(std::size_t i) const {
  if (i >= size_)
    throw ShiftOutOfRange("index " + std::to_string(i) + " outside [0, " +
                          std::to_string(size_) + ")");
  return (*this)[i];
}

bool BinarySequence::at_mod(std::int64_t i) const noexcept {
  const auto n = static_cast<std::int64_t>(size_);
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return (*this)[static_cast<std::size_t>(r)];
}

std::size_t BinarySequence::weight() const noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += std::popcount(w);
  return count;
}

BinarySequence BinarySequence::window(std::size_t start, bool negate_wrapped) const {
  if (start >= size_)
    throw ShiftOutOfRange("shift " + std::to_string(start) + " outside [0, " +
                          std::to_string(size_) + ")");
  const detail::DoubledBits doubled(*this, negate_wrapped);
  std::vector<Word> out(words_.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = doubled.extract(start + k * kWordBits);
  return from_words(size_, std::move(out));
}

std::string BinarySequence::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

std::vector<int> BinarySequence::to_vector() const {
  std::vector<int> v(size_);
  for (std::size_t i = 0; i < size_; ++i) v[i] = (*this)[i] ? 1 : 0;
  return v;
}

void BinarySequence::clear_tail() noexcept {
  if (!words_.empty()) words_.back() &= detail::tail_mask(size_);
}

std::size_t hamming_distance(const BinarySequence& a, const BinarySequence& b) {
  if (a.size() != b.size()) throw DomainError("period mismatch");
  std::size_t count = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) count += std::popcount(wa[k] ^ wb[k]);
  return count;
}

}  // namespace negacorr

#include "rankmine/bitvector.hpp"

#include "rankmine/error.hpp"

namespace rankmine {

namespace {

void require_same_width(const BitVector& a, const BitVector& b) {
  if (a.width() != b.width()) {
    throw PreconditionError("bit vector width mismatch: " +
                            std::to_string(a.width()) + " vs " +
                            std::to_string(b.width()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t width, bool value)
    : width_(width), words_((width + kWordBits - 1) / kWordBits, value ? ~Word{0} : 0) {
  if (value && width % kWordBits != 0) {
    words_.back() &= (Word{1} << (width % kWordBits)) - 1;
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::none() const noexcept {
  for (Word w : words_) {
    if (w) return false;
  }
  return true;
}

std::optional<std::size_t> BitVector::find_first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> BitVector::find_next(std::size_t i) const noexcept {
  ++i;
  if (i >= width_) return std::nullopt;
  std::size_t w = i / kWordBits;
  Word masked = words_[w] & (~Word{0} << (i % kWordBits));
  while (true) {
    if (masked) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(masked));
    }
    if (++w == words_.size()) return std::nullopt;
    masked = words_[w];
  }
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::subtract(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t BitVector::and_into(const BitVector& a, const BitVector& b,
                                BitVector& out) {
  require_same_width(a, b);
  if (out.width_ != a.width_) out = BitVector(a.width_);
  std::size_t n = 0;
  const std::size_t words = a.words_.size();
  for (std::size_t i = 0; i < words; ++i) {
    Word w = a.words_[i] & b.words_[i];
    out.words_[i] = w;
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

std::size_t BitVector::and_count(const BitVector& a, const BitVector& b) {
  require_same_width(a, b);
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  }
  return n;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::string BitVector::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[width_ - 1 - i] = '1';
  }
  return s;
}

}  // namespace rankmine

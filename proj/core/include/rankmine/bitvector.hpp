#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rankmine {

/// Fixed-width, word-packed bit vector. The width never changes after
/// construction; binary operations require equal widths.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t width, bool value = false);

  std::size_t width() const noexcept { return width_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  /// Index of the lowest set bit.
  std::optional<std::size_t> find_first() const noexcept;
  /// Index of the lowest set bit strictly above `i`.
  std::optional<std::size_t> find_next(std::size_t i) const noexcept;

  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// this &= ~other
  BitVector& subtract(const BitVector& other);

  /// out = a & b without allocating when `out` already has the width.
  /// Returns the population count of the result.
  static std::size_t and_into(const BitVector& a, const BitVector& b,
                              BitVector& out);
  /// popcount(a & b) without materializing it.
  static std::size_t and_count(const BitVector& a, const BitVector& b);

  /// True iff every bit of *this is set in `other`.
  bool is_subset_of(const BitVector& other) const;

  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  /// Bit string with the highest index first, e.g. "0111" for {0,1,2} of 4.
  std::string to_string() const;

 private:
  std::size_t width_ = 0;
  std::vector<Word> words_;
};

/// Subset of a database's transactions; bit i stands for transaction i.
/// Realizes the g-closure of a ranking.
using TransactionSet = BitVector;

}  // namespace rankmine

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcdiag {

/// A short word over the alphabet {1..15}, packed four bits per letter with
/// the first letter in the lowest nibble. Ordered by length, then
/// lexicographically.
class Word {
 public:
  static constexpr unsigned kMaxLength = 16;

  constexpr Word() = default;
  Word(std::initializer_list<unsigned> letters) {
    for (unsigned l : letters) push_back(l);
  }
  explicit Word(const std::vector<unsigned>& letters) {
    for (unsigned l : letters) push_back(l);
  }

  constexpr unsigned size() const { return len_; }
  constexpr bool empty() const { return len_ == 0; }
  constexpr unsigned operator[](unsigned i) const { return static_cast<unsigned>((bits_ >> (4 * i)) & 0xF); }
  constexpr unsigned front() const { return (*this)[0]; }
  constexpr unsigned back() const { return (*this)[len_ - 1]; }

  void push_back(unsigned letter) {
    check_letter(letter);
    if (len_ == kMaxLength) throw std::length_error("word exceeds 16 letters");
    bits_ |= static_cast<std::uint64_t>(letter) << (4 * len_);
    ++len_;
  }
  void push_front(unsigned letter) {
    check_letter(letter);
    if (len_ == kMaxLength) throw std::length_error("word exceeds 16 letters");
    bits_ = (bits_ << 4) | letter;
    ++len_;
  }
  void pop_front() {
    bits_ >>= 4;
    --len_;
  }
  void pop_back() {
    --len_;
    bits_ &= len_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - 4 * len_));
  }

  Word reversed() const {
    Word r;
    for (unsigned i = len_; i-- > 0;) r.push_back((*this)[i]);
    return r;
  }

  friend Word operator+(const Word& a, const Word& b) {
    if (a.len_ + b.len_ > kMaxLength) throw std::length_error("word exceeds 16 letters");
    Word r;
    r.bits_ = a.bits_ | (b.len_ == 0 ? 0 : b.bits_ << (4 * a.len_));
    r.len_ = static_cast<std::uint8_t>(a.len_ + b.len_);
    return r;
  }

  std::vector<unsigned> letters() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < len_; ++i) out.push_back((*this)[i]);
    return out;
  }

  /// Letters as "1,2,3" (empty string for the empty word).
  std::string str() const {
    std::string s;
    for (unsigned i = 0; i < len_; ++i) {
      if (i) s += ',';
      s += std::to_string((*this)[i]);
    }
    return s;
  }

  /// Lexicographic rank key: first letter most significant.
  constexpr std::uint64_t lex_key() const {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < len_; ++i) k = (k << 4) | (*this)[i];
    return k;
  }

  constexpr std::uint64_t bits() const { return bits_; }

  friend constexpr bool operator==(const Word& a, const Word& b) { return a.len_ == b.len_ && a.bits_ == b.bits_; }
  friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.lex_key() <=> b.lex_key();
  }

 private:
  static void check_letter(unsigned letter) {
    if (letter == 0 || letter > 15) throw std::out_of_range("word letter out of range 1..15");
  }

  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

}  // namespace arcdiag

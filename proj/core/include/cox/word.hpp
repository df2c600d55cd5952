#ifndef COX_WORD_HPP_
#define COX_WORD_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cox {

// A word in the generators, one byte per letter; byte value = generator
// index.  The empty word is the identity.  std::string gives cheap copies,
// hashing and concatenation at desk scale.
using Word = std::string;

inline Word word(std::initializer_list<int> letters) {
  Word w;
  w.reserve(letters.size());
  for (int g : letters) w.push_back(static_cast<char>(g));
  return w;
}

// Length first, then lexicographic on letters.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// A subset of the generator indices {0..rank-1}, rank <= 64.
class ParabolicSubset {
 public:
  constexpr ParabolicSubset() : bits_(0) {}

  static ParabolicSubset of(std::initializer_list<int> indices) {
    ParabolicSubset t;
    for (int i : indices) t.bits_ |= (std::uint64_t{1} << i);
    return t;
  }
  static ParabolicSubset full(int rank) {
    ParabolicSubset t;
    t.bits_ = rank == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1;
    return t;
  }
  static ParabolicSubset from_bits(std::uint64_t bits) {
    ParabolicSubset t;
    t.bits_ = bits;
    return t;
  }

  bool contains(int i) const { return (bits_ >> i) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint64_t bits() const { return bits_; }

  ParabolicSubset with(int i) const {
    return from_bits(bits_ | (std::uint64_t{1} << i));
  }
  ParabolicSubset without(int i) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << i));
  }
  bool subset_of(ParabolicSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend bool operator==(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ != b.bits_;
  }
  friend bool operator<(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::uint64_t bits_;
};

// Letter set of a word.
inline ParabolicSubset letter_set(const Word& w) {
  std::uint64_t bits = 0;
  for (char c : w) bits |= (std::uint64_t{1} << static_cast<unsigned char>(c));
  return ParabolicSubset::from_bits(bits);
}

}  // namespace cox

#endif  // COX_WORD_HPP_

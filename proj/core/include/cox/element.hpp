#ifndef COX_ELEMENT_HPP_
#define COX_ELEMENT_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "cox/matrix.hpp"
#include "cox/word.hpp"

namespace cox {

inline constexpr std::size_t kDefaultWordCap = 40;

enum class Parity { Even, Odd };

// A group element in canonical form: the shortlex-least reduced word for it,
// tied to its defining presentation.  Immutable.
class GroupElement {
 public:
  static GroupElement identity(MatrixPtr m) { return GroupElement(std::move(m), Word{}); }

  const Word& word() const { return word_; }
  const MatrixPtr& matrix() const { return matrix_; }

  int length() const { return static_cast<int>(word_.size()); }
  Parity parity() const { return word_.size() % 2 ? Parity::Odd : Parity::Even; }
  bool is_identity() const { return word_.empty(); }

  // Letter set of the canonical word; identical for every reduced word.
  ParabolicSubset support() const { return letter_set(word_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return a.word_ != b.word_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return shortlex_less(a.word_, b.word_);
  }

 private:
  friend GroupElement reduce(const MatrixPtr&, const Word&, std::size_t);
  GroupElement(MatrixPtr m, Word w) : matrix_(std::move(m)), word_(std::move(w)) {}

  MatrixPtr matrix_;
  Word word_;  // shortlex-least reduced word
};

// Canonical form of an arbitrary word by exhaustive closure under braid moves
// (alternating run of length m(s,t), finite m only) and deletion of adjacent
// equal letters.  Throws WordTooLong when the input exceeds `cap`.
Word canonical_word(const CoxeterMatrix& m, const Word& w,
                    std::size_t cap = kDefaultWordCap);

// All reduced words of the element with the given reduced word: its closure
// under braid moves alone.  Throws Error when `reduced` is not reduced or
// the class exceeds `limit`.
std::vector<Word> reduced_words(const CoxeterMatrix& m, const Word& reduced,
                                std::size_t limit = 100000);

GroupElement reduce(const MatrixPtr& m, const Word& w,
                    std::size_t cap = kDefaultWordCap);

// Concatenate-and-reduce.  Throws MatrixMismatch when the presentations
// differ, WordTooLong per the reduction cap.
GroupElement multiply(const GroupElement& a, const GroupElement& b,
                      std::size_t cap = kDefaultWordCap);

// Reverse of the canonical word, re-canonicalized (generators are
// involutions).
GroupElement invert(const GroupElement& a, std::size_t cap = kDefaultWordCap);

// Canonical-form equality; throws MatrixMismatch across presentations.
bool equal(const GroupElement& a, const GroupElement& b);

bool in_parabolic(const GroupElement& a, ParabolicSubset t);

// Longest element of the finite parabolic on `t`, by greedy ascent from the
// identity; the result is certified against the descent criterion
// (length(w0 * t) < length(w0) for every t).  Throws NotSpherical when the
// parabolic is infinite.
GroupElement longest_element(const MatrixPtr& m, ParabolicSubset t,
                             std::size_t cap = kDefaultWordCap);

// True iff a lies in the parabolic on `t` and every t in it is a descent;
// this certifies at once that the parabolic is finite and a is its longest
// element.
bool is_longest_in(const GroupElement& a, ParabolicSubset t,
                   std::size_t cap = kDefaultWordCap);

// Order of `a` as a group element: successive powers until the identity
// returns.  nullopt when `max_power` powers (or the word cap) pass without
// reaching it.
std::optional<int> element_order(const GroupElement& a, int max_power = 64,
                                 std::size_t cap = kDefaultWordCap);

}  // namespace cox

#endif  // COX_ELEMENT_HPP_

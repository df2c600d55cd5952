#ifndef COX_ENUMERATION_HPP_
#define COX_ENUMERATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cox/element.hpp"

namespace cox {

inline constexpr int kDefaultEnumRadius = 12;
inline constexpr int kDefaultEnumSizeCap = 20000;

// BFS-built Cayley ball (or whole finite group).  Elements are stored in
// (length, then shortlex) order; elements[0] is the identity.  `edges`
// holds, for each element and generator, the ordinal of the right-product,
// or kOutside when incomplete and the product lies beyond the ball.
class EnumerationTable {
 public:
  static constexpr int kOutside = -1;

  const MatrixPtr& matrix() const { return matrix_; }
  int size() const { return static_cast<int>(words_.size()); }
  int radius() const { return radius_; }
  bool complete() const { return complete_; }

  const Word& word_of(int ordinal) const { return words_[ordinal]; }
  GroupElement element(int ordinal) const;

  // Ordinal of a canonical word, or -1.
  int ordinal_of(const Word& canonical) const;

  // Right product ordinal, or kOutside.
  int edge(int ordinal, int generator) const {
    return edges_[static_cast<std::size_t>(ordinal) * matrix_->rank() + generator];
  }

  // Follows edges letter-by-letter from the identity: the table's own
  // canonical form of an arbitrary word, independent of whole-word rewriting.
  // nullopt when the walk leaves an incomplete ball.
  std::optional<int> walk(const Word& w) const { return walk_from(0, w); }
  std::optional<int> walk_from(int start, const Word& w) const;

  // Table-side product/inverse; nullopt on ball escape.
  std::optional<int> product(int a, int b) const {
    return walk_from(a, words_[b]);
  }
  std::optional<int> inverse(int a) const {
    Word rev(words_[a].rbegin(), words_[a].rend());
    return walk(rev);
  }

  std::string to_dot() const;
  std::string to_json() const;

 private:
  friend EnumerationTable enumerate(const MatrixPtr&, int, int, std::size_t);
  EnumerationTable() = default;

  MatrixPtr matrix_;
  std::vector<Word> words_;  // canonical words, (length, shortlex) order
  std::unordered_map<Word, int> index_;
  std::vector<int> edges_;  // size() * rank entries
  int radius_ = 0;
  bool complete_ = false;
};

// BFS from the identity by right multiplication, canonicalizing each step;
// stops when the group is exhausted (complete) or a cap hits (incomplete —
// a flagged value, not an error).
EnumerationTable enumerate(const MatrixPtr& m,
                           int radius_cap = kDefaultEnumRadius,
                           int size_cap = kDefaultEnumSizeCap,
                           std::size_t word_cap = kDefaultWordCap);

// Exact group order, or nullopt when the enumeration did not close within
// the caps ("exceeds cap").
std::optional<std::uint64_t> group_order(const MatrixPtr& m,
                                         int size_cap = kDefaultEnumSizeCap,
                                         int radius_cap = kDefaultEnumRadius);

// Closure of the given elements under multiplication.  Throws BallEscape if
// the closure leaves an incomplete ball.  Result in ordinal order.
std::vector<GroupElement> subgroup_elements(const EnumerationTable& table,
                                            const std::vector<GroupElement>& generators);

}  // namespace cox

#endif  // COX_ENUMERATION_HPP_

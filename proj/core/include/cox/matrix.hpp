#ifndef COX_MATRIX_HPP_
#define COX_MATRIX_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cox/errors.hpp"

namespace cox {

// Symmetric order function m(s,t) of a Coxeter presentation.
// Entries are 1 on the diagonal, >= 2 or kInfinity off it.  Generator names
// are display metadata only; all semantics use indices 0..rank-1.
class CoxeterMatrix {
 public:
  using Entry = std::uint32_t;
  static constexpr Entry kInfinity = std::numeric_limits<Entry>::max();

  // Ranks up to this fit the bitmask subset representation used throughout.
  static constexpr int kMaxRank = 64;

  // Validates and builds. `orders` must be square, symmetric, 1 on the
  // diagonal and >= 2 (or kInfinity) off it; throws InvalidMatrix otherwise,
  // never repairs. `labels` may be empty, in which case s1..sn are assigned.
  static CoxeterMatrix validated(std::vector<std::vector<Entry>> orders,
                                 std::vector<std::string> labels = {});

  int rank() const { return rank_; }

  Entry order(int s, int t) const { return orders_[s * rank_ + t]; }
  bool finite(int s, int t) const { return order(s, t) != kInfinity; }

  const std::string& label(int s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of the generator named `name`, or -1.
  int index_of(std::string_view name) const;

  // True when the order tables agree entrywise (labels ignored).
  bool same_presentation(const CoxeterMatrix& other) const {
    return rank_ == other.rank_ && orders_ == other.orders_;
  }

 private:
  CoxeterMatrix(int rank, std::vector<Entry> flat, std::vector<std::string> labels)
      : rank_(rank), orders_(std::move(flat)), labels_(std::move(labels)) {}

  int rank_;
  std::vector<Entry> orders_;  // row-major rank x rank
  std::vector<std::string> labels_;
};

using MatrixPtr = std::shared_ptr<const CoxeterMatrix>;

// Convenience: validate and wrap in a shared pointer.
MatrixPtr make_matrix(std::vector<std::vector<CoxeterMatrix::Entry>> orders,
                      std::vector<std::string> labels = {});

// Rank-2 presentation with m(s,t) = m, generators named s, t.
MatrixPtr make_dihedral(CoxeterMatrix::Entry m);

}  // namespace cox

#endif  // COX_MATRIX_HPP_

#ifndef COX_DAVIS_HPP_
#define COX_DAVIS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cox/enumeration.hpp"
#include "cox/spherical.hpp"

namespace cox {

// A spherical coset w*W_T, stored by its unique minimal-length
// representative.
struct SphericalCoset {
  GroupElement rep;
  ParabolicSubset t;

  int dim() const { return t.size(); }

  friend bool operator==(const SphericalCoset& a, const SphericalCoset& b) {
    return a.t == b.t && a.rep == b.rep;
  }
  friend bool operator<(const SphericalCoset& a, const SphericalCoset& b) {
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
    if (a.t != b.t) return a.t < b.t;
    return a.rep < b.rep;
  }
};

// Minimal-length representative of w*W_T by greedy right descent.  Throws
// NotSpherical.
SphericalCoset canonical_coset(const GroupElement& w, ParabolicSubset t,
                               std::size_t cap = kDefaultWordCap);

// Left translation g . (w W_T) = (g w) W_T, re-canonicalized.
SphericalCoset act(const GroupElement& g, const SphericalCoset& c,
                   std::size_t cap = kDefaultWordCap);

// The poset of spherical cosets lying entirely inside a radius-R ball, with
// covering relations (one-generator extensions of T).  Rank-0 cells are
// exactly the ball elements and rank-<=1 cells form the induced Cayley
// graph.  Complete iff the group itself was exhausted; boundary cells of a
// truncation may lack order relations whose other cell falls outside.
class DavisComplexTruncation {
 public:
  const MatrixPtr& matrix() const { return table_.matrix(); }
  const EnumerationTable& table() const { return table_; }
  int radius() const { return radius_; }
  bool complete() const { return complete_; }

  const std::vector<SphericalCoset>& cells() const { return cells_; }
  // (child, parent) index pairs into cells(), child covered by parent.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  int cell_index(const SphericalCoset& c) const;

  // Index of the translated cell; throws BallEscape when the image left the
  // truncation.
  int act_on_cell(const GroupElement& g, int cell) const;

  std::string to_json() const;
  std::string hasse_dot() const;
  std::string skeleton_dot() const;

 private:
  friend DavisComplexTruncation build_complex(const MatrixPtr&, int, int,
                                              std::size_t);
  DavisComplexTruncation(EnumerationTable t) : table_(std::move(t)) {}

  EnumerationTable table_;
  std::vector<SphericalCoset> cells_;
  std::map<std::pair<std::uint64_t, Word>, int> index_;  // (T bits, rep word)
  std::vector<std::pair<int, int>> covers_;
  int radius_ = 0;
  bool complete_ = false;
};

DavisComplexTruncation build_complex(const MatrixPtr& m, int radius,
                                     int size_cap = kDefaultEnumSizeCap,
                                     std::size_t cap = kDefaultWordCap);

}  // namespace cox

#endif  // COX_DAVIS_HPP_

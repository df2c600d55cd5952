#ifndef COX_SPHERICAL_HPP_
#define COX_SPHERICAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cox/matrix.hpp"
#include "cox/word.hpp"

namespace cox {

// One connected component of the classification graph (edges = finite labels
// >= 3; commuting pairs split components), matched against the finite-type
// catalog.
struct ComponentType {
  std::string name;           // "A3", "B2", "I2(6)", "H4", ...
  std::vector<int> members;   // generator indices, ascending
  std::uint64_t order;        // order of the component's parabolic
};

enum class InfinitenessReason {
  None,
  InfinitePair,        // some pair inside T has m = infinity
  TriangleCriterion,   // connected rank-3 component with 1/p+1/q+1/r <= 1
  NonCatalogComponent  // component matches no finite type
};

struct SphericalVerdict {
  bool finite = false;

  // Finite: the component decomposition; product of component orders.
  std::vector<ComponentType> components;
  std::uint64_t order = 1;

  // Infinite: the reason and the offending generators.
  InfinitenessReason reason = InfinitenessReason::None;
  std::vector<int> witness;

  std::string describe() const;  // short human-readable witness
};

// Decides finiteness of the parabolic subgroup on T by diagram
// classification.  Pure, no enumeration.
SphericalVerdict is_spherical(const CoxeterMatrix& m, ParabolicSubset t);

// Finiteness of the (p,q,r) triangle group: 1/p + 1/q + 1/r > 1.  All labels
// finite.  Exposed so tests can check agreement with the catalog.
bool triangle_criterion_finite(CoxeterMatrix::Entry p, CoxeterMatrix::Entry q,
                               CoxeterMatrix::Entry r);

// All spherical subsets, found by monotone extension (every subset of a
// spherical set is spherical).  Sorted by size, then bit pattern; includes
// the empty set.
std::vector<ParabolicSubset> spherical_subsets(const CoxeterMatrix& m);

// max |T| over spherical subsets T.
int davis_dimension(const CoxeterMatrix& m);

// True iff no 3-subset is spherical and some 2-subset is, i.e. the dimension
// is exactly 2.
bool is_two_dimensional(const CoxeterMatrix& m);

// Generator names of a subset, comma-joined.
std::string subset_names(const CoxeterMatrix& m, ParabolicSubset t);

// The induced presentation on T, generators re-indexed in ascending order.
MatrixPtr restrict_to(const CoxeterMatrix& m, ParabolicSubset t);

}  // namespace cox

#endif  // COX_SPHERICAL_HPP_

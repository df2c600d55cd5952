#ifndef COX_RIGIDITY_HPP_
#define COX_RIGIDITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cox/enumeration.hpp"
#include "cox/spherical.hpp"

namespace cox {

inline constexpr int kDefaultSearchRadius = 8;
inline constexpr int kDefaultPlateauCap = 10000;

// ---------------------------------------------------------------------------
// Generator maps

// A homomorphism candidate given by the image of each source generator as a
// word over the target generators.
struct GeneratorMap {
  MatrixPtr source;
  MatrixPtr target;
  std::vector<Word> images;  // one word per source generator

  // Image of source generator s.
  GroupElement image(int s, std::size_t cap = kDefaultWordCap) const;
  // Letterwise substitution of a source word, reduced in the target.
  GroupElement apply(const Word& w, std::size_t cap = kDefaultWordCap) const;

  static GeneratorMap identity(const MatrixPtr& m);
};

// Exact relator check: image(s)^2 = 1 and (image(s) image(t))^{m(s,t)} = 1
// for finite m(s,t).  Throws InvalidGeneratorMap on failure.
void validate_homomorphism(const GeneratorMap& map,
                           std::size_t cap = kDefaultWordCap);

enum class BijectivityStatus { Verified, Refuted, UnverifiedAtRadius };

// Relators are exact; surjectivity is probed by closing the images inside a
// target ball of the given radius.  Closure that completes without reaching
// every target generator refutes; escaping the ball leaves the question
// open.
BijectivityStatus check_bijectivity(const GeneratorMap& map,
                                    int search_radius = kDefaultSearchRadius,
                                    int size_cap = kDefaultEnumSizeCap);

GeneratorMap parse_generator_map(const std::string& json_text);
GeneratorMap load_generator_map(const std::string& path);
std::string to_json_map(const GeneratorMap& map);

// ---------------------------------------------------------------------------
// Involutions

// v w0 v^-1 decomposition of an involution: core w0 is the longest element
// of the finite parabolic on its own support, of minimal length among the
// conjugates of the input.
struct InvolutionNormalForm {
  GroupElement conjugator;
  GroupElement core;
  ParabolicSubset core_support;
};

// Conjugation descent: breadth-first over single-generator conjugations,
// taking every length-decreasing move and closing length-preserving
// plateaus up to `plateau_cap` states.  The endpoint is certified by the
// descent criterion, never assumed from termination.  Throws NotInvolution,
// DescentStuck.
InvolutionNormalForm involution_normal_form(const GroupElement& a,
                                            int plateau_cap = kDefaultPlateauCap,
                                            std::size_t cap = kDefaultWordCap);

// True iff a is a conjugate of a single generator.
bool is_reflection(const GroupElement& a,
                   int plateau_cap = kDefaultPlateauCap,
                   std::size_t cap = kDefaultWordCap);

struct ReflectionClass {
  GroupElement conjugator;
  int generator;
};
struct RotationClass {
  GroupElement conjugator;
  int s, t;        // core support, s < t
  int half_order;  // m(s,t) / 2; the core is (st)^{half_order}
};
struct OtherInvolutionClass {
  InvolutionNormalForm form;  // core support of size >= 3 (dimension > 2)
};
using InvolutionClass =
    std::variant<ReflectionClass, RotationClass, OtherInvolutionClass>;

InvolutionClass classify_involution(const GroupElement& a,
                                    int plateau_cap = kDefaultPlateauCap,
                                    std::size_t cap = kDefaultWordCap);

// True iff s and t are conjugate: connected through edges with odd finite
// labels.
bool conjugate_generators(const CoxeterMatrix& m, int s, int t);

// ---------------------------------------------------------------------------
// Matching and alignment

// phi(W_T) = w' W'_{T'} w'^-1 with T' unique and w' the first ball element
// (length, then shortlex) realizing the equality.  Throws NotSpherical,
// NotFoundInRadius, AmbiguousMatch.
struct SphericalMatch {
  ParabolicSubset t_prime;
  GroupElement conjugator;
};
SphericalMatch match_spherical_subgroup(const GeneratorMap& phi,
                                        ParabolicSubset t,
                                        int search_radius = kDefaultSearchRadius,
                                        int size_cap = kDefaultEnumSizeCap,
                                        std::size_t cap = kDefaultWordCap);

// The resolution of a generator whose image is not a reflection: the unique
// partner t with m(s,t)=2 and the target pair (s',t') with conjugator w'
// such that phi(s) = w' s' t' w'^-1 and phi(t) = w' t' w'^-1.  All seven
// conclusions are machine-checked; any failure throws TheoremViolation with
// the violated clause.
struct PseudoTranspositionResolution {
  int s;                 // source generator resolved
  int partner_t;         // unique source partner, m(s, partner_t) = 2
  int s_prime, t_prime;  // target pair
  GroupElement conjugator_w;
};
PseudoTranspositionResolution resolve_pseudo_transposition(
    const GeneratorMap& phi, int s, int search_radius = kDefaultSearchRadius,
    int plateau_cap = kDefaultPlateauCap, std::size_t cap = kDefaultWordCap);

// Replaces s by st (m(s,t)=2, every other label of s infinite): the twisted
// presentation and the automorphism psi with psi(s)=st, psi(u)=u.  Throws
// HypothesisViolated.
struct TwistResult {
  MatrixPtr twisted;  // same order table; the twisted generator renamed
  GeneratorMap map;   // source system -> source system
};
TwistResult twist_generating_set(const MatrixPtr& m, int s, int t);

// The constructive alignment: for phi expressing one generating set of a
// group over another (both systems two-dimensional), twists every generator
// whose image is not a reflection by its unique partner.  Images of the
// returned generating set are reflections in the target system, elementwise
// verified.
struct AlignmentResult {
  std::vector<int> pseudo;  // source generators with non-reflection images
  std::vector<PseudoTranspositionResolution> resolutions;
  std::vector<GroupElement> new_generators;  // over the source system
  MatrixPtr aligned_presentation;            // order table equals the source's
  GeneratorMap twist_automorphism;           // source -> source
  std::vector<std::string> warnings;
};
AlignmentResult align_generating_sets(const GeneratorMap& phi,
                                      int search_radius = kDefaultSearchRadius,
                                      int plateau_cap = kDefaultPlateauCap,
                                      std::size_t cap = kDefaultWordCap);

// ---------------------------------------------------------------------------
// Diagram invariants

struct DiagramInvariants {
  int vertex_count = 0;
  int edge_count = 0;                         // pairs with finite label
  std::vector<CoxeterMatrix::Entry> labels;   // sorted multiset of edge labels

  friend bool operator==(const DiagramInvariants&,
                         const DiagramInvariants&) = default;
};

struct InvariantComparison {
  bool vertices_equal = false;
  bool edges_equal = false;
  bool labels_equal = false;
  bool all_equal() const { return vertices_equal && edges_equal && labels_equal; }
};

DiagramInvariants diagram_invariants(const CoxeterMatrix& m);
InvariantComparison compare_invariants(const DiagramInvariants& a,
                                       const DiagramInvariants& b);

}  // namespace cox

#endif  // COX_RIGIDITY_HPP_

#include "cox/rigidity.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cox/presentation.hpp"

namespace cox {

namespace {

// Elements of the (spherical) parabolic on `t`, as elements of the ambient
// system, in the sub-enumeration's BFS order.
std::vector<GroupElement> parabolic_elements(const MatrixPtr& m,
                                             ParabolicSubset t,
                                             std::size_t cap) {
  const auto verdict = is_spherical(*m, t);
  if (!verdict.finite)
    throw NotSpherical("parabolic on {" + subset_names(*m, t) +
                       "} is not spherical: " + verdict.describe());
  const auto sub = restrict_to(*m, t);
  const auto idx = t.indices();
  const int bound = static_cast<int>(std::min<std::uint64_t>(verdict.order, 1u << 20));
  const auto table = enumerate(sub, bound, bound, cap);
  std::vector<GroupElement> out;
  out.reserve(table.size());
  for (int i = 0; i < table.size(); ++i) {
    Word w;
    for (char c : table.word_of(i))
      w.push_back(static_cast<char>(idx[static_cast<unsigned char>(c)]));
    out.push_back(reduce(m, w, cap));
  }
  return out;
}

// {v u v^-1 : u in elems}, as a sorted set of canonical words.
std::vector<Word> conjugated_set(const GroupElement& v,
                                 const std::vector<GroupElement>& elems,
                                 std::size_t cap) {
  Word vrev(v.word().rbegin(), v.word().rend());
  std::vector<Word> out;
  out.reserve(elems.size());
  for (const auto& u : elems)
    out.push_back(canonical_word(*v.matrix(), v.word() + u.word() + vrev, cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word conjugate_by_generator(const CoxeterMatrix& m, const Word& w, int g,
                            std::size_t cap) {
  Word c;
  c.reserve(w.size() + 2);
  c.push_back(static_cast<char>(g));
  c += w;
  c.push_back(static_cast<char>(g));
  return canonical_word(m, c, cap);
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorMap

GroupElement GeneratorMap::image(int s, std::size_t cap) const {
  return reduce(target, images[s], cap);
}

GroupElement GeneratorMap::apply(const Word& w, std::size_t cap) const {
  Word out;
  for (char c : w) out += images[static_cast<unsigned char>(c)];
  return reduce(target, out, cap);
}

GeneratorMap GeneratorMap::identity(const MatrixPtr& m) {
  GeneratorMap map{m, m, {}};
  for (int i = 0; i < m->rank(); ++i)
    map.images.push_back(Word(1, static_cast<char>(i)));
  return map;
}

void validate_homomorphism(const GeneratorMap& map, std::size_t cap) {
  if (!map.source || !map.target)
    throw InvalidGeneratorMap("generator map lacks a presentation");
  if (static_cast<int>(map.images.size()) != map.source->rank())
    throw InvalidGeneratorMap("generator map needs one image per source generator");

  const int n = map.source->rank();
  std::vector<GroupElement> img;
  img.reserve(n);
  for (int s = 0; s < n; ++s) img.push_back(map.image(s, cap));

  for (int s = 0; s < n; ++s)
    if (!multiply(img[s], img[s], cap).is_identity())
      throw InvalidGeneratorMap("image of " + map.source->label(s) +
                                " is not an involution");

  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const auto ord = map.source->order(s, t);
      if (ord == CoxeterMatrix::kInfinity) continue;
      const GroupElement p = multiply(img[s], img[t], cap);
      GroupElement acc = GroupElement::identity(map.target);
      for (CoxeterMatrix::Entry k = 0; k < ord; ++k) acc = multiply(acc, p, cap);
      if (!acc.is_identity())
        throw InvalidGeneratorMap(
            "relator (" + map.source->label(s) + " " + map.source->label(t) +
            ")^" + std::to_string(ord) + " does not map to the identity");
    }
}

BijectivityStatus check_bijectivity(const GeneratorMap& map, int search_radius,
                                    int size_cap) {
  validate_homomorphism(map);

  // Close the images inside a ball of the given radius.  Products that
  // leave the ball are pruned and only remembered in `escaped`: a target
  // generator found inside is a sound certificate either way, and a closure
  // that completes without escaping is exactly the subgroup the images
  // generate.
  std::vector<Word> gens;
  for (int s = 0; s < map.source->rank(); ++s)
    gens.push_back(map.image(s).word());

  std::unordered_set<Word> closure{Word{}};
  std::vector<Word> frontier{Word{}};
  bool escaped = false;
  while (!frontier.empty() && static_cast<int>(closure.size()) <= size_cap) {
    std::vector<Word> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Word y = canonical_word(*map.target, x + g, x.size() + g.size());
        if (static_cast<int>(y.size()) > search_radius) {
          escaped = true;
          continue;
        }
        if (closure.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  if (static_cast<int>(closure.size()) > size_cap) escaped = true;

  bool all_found = true;
  for (int g = 0; g < map.target->rank(); ++g)
    if (!closure.count(Word(1, static_cast<char>(g)))) {
      all_found = false;
      break;
    }
  if (all_found) return BijectivityStatus::Verified;
  return escaped ? BijectivityStatus::UnverifiedAtRadius
                 : BijectivityStatus::Refuted;
}

GeneratorMap parse_generator_map(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON map: ") + e.what());
  }
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("images"))
    throw ParseError("map JSON needs \"source\", \"target\" and \"images\"");

  auto load_side = [](const nlohmann::json& side) {
    return side.is_string() ? parse_presentation(side.get<std::string>())
                            : parse_presentation(side.dump());
  };
  GeneratorMap map{load_side(j["source"]), load_side(j["target"]), {}};
  map.images.resize(map.source->rank());
  std::vector<bool> given(map.source->rank(), false);
  for (const auto& [name, letters] : j["images"].items()) {
    const int s = map.source->index_of(name);
    if (s < 0) throw ParseError("image for unknown source generator '" + name + "'");
    Word w;
    for (const auto& l : letters) {
      const int g = map.target->index_of(l.get<std::string>());
      if (g < 0)
        throw ParseError("image of '" + name + "' uses unknown target generator '" +
                         l.get<std::string>() + "'");
      w.push_back(static_cast<char>(g));
    }
    map.images[s] = std::move(w);
    given[s] = true;
  }
  for (int s = 0; s < map.source->rank(); ++s)
    if (!given[s])
      throw ParseError("no image given for source generator '" +
                       map.source->label(s) + "'");
  return map;
}

GeneratorMap load_generator_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_map(buf.str());
}

std::string to_json_map(const GeneratorMap& map) {
  nlohmann::json j;
  j["source"] = nlohmann::json::parse(to_json_presentation(*map.source));
  j["target"] = nlohmann::json::parse(to_json_presentation(*map.target));
  nlohmann::json images;
  for (int s = 0; s < map.source->rank(); ++s) {
    std::vector<std::string> letters;
    for (char c : map.images[s])
      letters.push_back(map.target->label(static_cast<unsigned char>(c)));
    images[map.source->label(s)] = letters;
  }
  j["images"] = images;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Involutions

InvolutionNormalForm involution_normal_form(const GroupElement& a,
                                            int plateau_cap, std::size_t cap) {
  if (a.is_identity()) throw NotInvolution("the identity has no normal form");
  if (!multiply(a, a, cap).is_identity())
    throw NotInvolution("element does not square to the identity");

  const auto& m = a.matrix();
  const int rank = m->rank();

  GroupElement conj = GroupElement::identity(m);
  Word cur = a.word();

  for (;;) {
    // Close the plateau of length-preserving conjugations.
    struct Node {
      Word word;
      int parent;
      int gen;
    };
    std::vector<Node> nodes{{cur, -1, -1}};
    std::unordered_map<Word, int> seen{{cur, 0}};

    auto path_to = [&](int node) {
      Word path;
      for (int i = node; nodes[i].parent >= 0; i = nodes[i].parent)
        path.push_back(static_cast<char>(nodes[i].gen));
      std::reverse(path.begin(), path.end());
      return path;
    };
    auto commit = [&](const Word& path) {
      for (char g : path)
        conj = reduce(m, conj.word() + g, cap);
    };

    int descent_node = -1, descent_gen = -1;
    Word shorter;
    for (std::size_t qi = 0; qi < nodes.size() && descent_node < 0; ++qi) {
      for (int g = 0; g < rank; ++g) {
        Word next = conjugate_by_generator(*m, nodes[qi].word, g, cap);
        if (next.size() < nodes[qi].word.size()) {
          descent_node = static_cast<int>(qi);
          descent_gen = g;
          shorter = std::move(next);
          break;
        }
        if (next.size() == nodes[qi].word.size() && !seen.count(next)) {
          if (static_cast<int>(nodes.size()) >= plateau_cap)
            throw DescentStuck("conjugation plateau exceeded " +
                               std::to_string(plateau_cap) +
                               " states without a certificate; raise the cap");
          seen.emplace(next, static_cast<int>(nodes.size()));
          nodes.push_back({std::move(next), static_cast<int>(qi), g});
        }
      }
    }

    if (descent_node >= 0) {
      Word path = path_to(descent_node);
      path.push_back(static_cast<char>(descent_gen));
      commit(path);
      cur = std::move(shorter);
      continue;
    }

    // Plateau closed with no descent: its members are the candidates; pick
    // the shortlex-least for determinism.
    int best = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
      if (shortlex_less(nodes[i].word, nodes[best].word))
        best = static_cast<int>(i);
    commit(path_to(best));

    InvolutionNormalForm nf{conj, reduce(m, nodes[best].word, cap),
                            letter_set(nodes[best].word)};
    if (!is_longest_in(nf.core, nf.core_support, cap))
      throw DescentStuck(
          "conjugation descent terminated without the longest-element "
          "certificate; raise the plateau cap");
    // a == conj core conj^-1 by construction of the move path.
    if (!equal(multiply(multiply(nf.conjugator, nf.core, cap),
                        invert(nf.conjugator, cap), cap),
               a))
      throw Error("internal: conjugator reconstruction failed");
    return nf;
  }
}

bool is_reflection(const GroupElement& a, int plateau_cap, std::size_t cap) {
  if (a.is_identity()) return false;
  if (a.length() % 2 == 0) return false;  // reflections have odd length
  if (!multiply(a, a, cap).is_identity()) return false;
  return involution_normal_form(a, plateau_cap, cap).core_support.size() == 1;
}

InvolutionClass classify_involution(const GroupElement& a, int plateau_cap,
                                    std::size_t cap) {
  const auto nf = involution_normal_form(a, plateau_cap, cap);
  const auto support = nf.core_support.indices();
  if (support.size() == 1)
    return ReflectionClass{nf.conjugator, support[0]};
  if (support.size() == 2) {
    const int s = support[0], t = support[1];
    const auto ord = a.matrix()->order(s, t);
    if (ord != CoxeterMatrix::kInfinity && ord % 2 == 0) {
      Word half;
      for (CoxeterMatrix::Entry k = 0; k < ord; ++k)
        half.push_back(static_cast<char>(k % 2 == 0 ? s : t));
      if (nf.core.word() == half)
        return RotationClass{nf.conjugator, s, t, static_cast<int>(ord / 2)};
    }
  }
  return OtherInvolutionClass{nf};
}

bool conjugate_generators(const CoxeterMatrix& m, int s, int t) {
  std::vector<bool> seen(m.rank(), false);
  std::vector<int> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (cur == t) return true;
    for (int g = 0; g < m.rank(); ++g) {
      if (seen[g] || g == cur) continue;
      const auto ord = m.order(cur, g);
      if (ord != CoxeterMatrix::kInfinity && ord % 2 == 1) {
        seen[g] = true;
        stack.push_back(g);
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Matching

SphericalMatch match_spherical_subgroup(const GeneratorMap& phi,
                                        ParabolicSubset t, int search_radius,
                                        int size_cap, std::size_t cap) {
  const auto source_elems = parabolic_elements(phi.source, t, cap);
  std::vector<Word> image_set;
  image_set.reserve(source_elems.size());
  for (const auto& u : source_elems)
    image_set.push_back(phi.apply(u.word(), cap).word());
  std::sort(image_set.begin(), image_set.end());
  image_set.erase(std::unique(image_set.begin(), image_set.end()),
                  image_set.end());

  const auto ball = enumerate(phi.target, search_radius, size_cap, cap);

  std::optional<SphericalMatch> found;
  for (const auto& t_prime : spherical_subsets(*phi.target)) {
    if (t_prime.empty()) continue;
    const auto verdict = is_spherical(*phi.target, t_prime);
    if (verdict.order != image_set.size()) continue;
    const auto target_elems = parabolic_elements(phi.target, t_prime, cap);
    for (int w = 0; w < ball.size(); ++w) {
      const auto conj = ball.element(w);
      if (conjugated_set(conj, target_elems, cap) == image_set) {
        if (found && found->t_prime != t_prime)
          throw AmbiguousMatch("two distinct spherical subsets match " +
                               subset_names(*phi.source, t));
        if (!found) found = SphericalMatch{t_prime, conj};
        break;  // first (length, shortlex) conjugator for this subset
      }
    }
  }
  if (!found)
    throw NotFoundInRadius("no conjugate parabolic matches within radius " +
                           std::to_string(search_radius));
  return *found;
}

PseudoTranspositionResolution resolve_pseudo_transposition(
    const GeneratorMap& phi, int s, int search_radius, int plateau_cap,
    std::size_t cap) {
  if (!is_two_dimensional(*phi.source))
    throw NotTwoDimensional("source system is not two-dimensional");
  if (!is_two_dimensional(*phi.target))
    throw NotTwoDimensional("target system is not two-dimensional");

  const GroupElement fs = phi.image(s, cap);
  if (is_reflection(fs, plateau_cap, cap))
    throw IsReflection("image of " + phi.source->label(s) +
                       " is a reflection; nothing to resolve");

  const auto cls = classify_involution(fs, plateau_cap, cap);
  const auto* rot = std::get_if<RotationClass>(&cls);
  if (!rot)
    throw TheoremViolation("rotation-form",
                           "image of " + phi.source->label(s) +
                               " is not the half-turn of an even dihedral "
                               "parabolic");
  const GroupElement w_prime = rot->conjugator;
  int sp = rot->s, tp = rot->t;

  // The conjugated dihedral that phi(W_{s,t}) must equal.
  const auto pair_elems =
      parabolic_elements(phi.target, ParabolicSubset::of({sp, tp}), cap);
  const auto target_set = conjugated_set(w_prime, pair_elems, cap);

  int partner = -1;
  for (int t = 0; t < phi.source->rank(); ++t) {
    if (t == s || !phi.source->finite(s, t)) continue;
    const auto elems =
        parabolic_elements(phi.source, ParabolicSubset::of({s, t}), cap);
    std::vector<Word> image_set;
    for (const auto& u : elems)
      image_set.push_back(phi.apply(u.word(), cap).word());
    std::sort(image_set.begin(), image_set.end());
    image_set.erase(std::unique(image_set.begin(), image_set.end()),
                    image_set.end());
    if (image_set == target_set) {
      if (partner >= 0)
        throw TheoremViolation("partner-unique",
                               "two partners realize the conjugated dihedral");
      partner = t;
    }
  }
  if (partner < 0)
    throw TheoremViolation(
        "clause(3)",
        "no source pair maps onto the conjugated dihedral parabolic");

  auto fail = [&](const std::string& clause, const std::string& what) {
    throw TheoremViolation(clause, what);
  };

  if (phi.source->order(s, partner) != 2)
    fail("clause(1)", "m(" + phi.source->label(s) + "," +
                          phi.source->label(partner) + ") != 2");
  for (int u = 0; u < phi.source->rank(); ++u)
    if (u != s && u != partner && phi.source->finite(s, u))
      fail("clause(2)", "m(" + phi.source->label(s) + "," +
                            phi.source->label(u) + ") is finite");

  // Clause (7) fixes which member of the pair is t'; swap if needed.
  const GroupElement ft = phi.image(partner, cap);
  Word wrev(w_prime.word().rbegin(), w_prime.word().rend());
  auto conj_gen = [&](int g) {
    return canonical_word(*phi.target,
                          w_prime.word() + static_cast<char>(g) + wrev, cap);
  };
  if (ft.word() == conj_gen(tp)) {
    // naming already satisfies clause (7)
  } else if (ft.word() == conj_gen(sp)) {
    std::swap(sp, tp);
  } else {
    fail("clause(7)", "image of the partner is not the conjugated generator");
  }

  if (phi.target->order(sp, tp) != 2)
    fail("clause(4)", "m'(" + phi.target->label(sp) + "," +
                          phi.target->label(tp) + ") != 2");
  for (int u = 0; u < phi.target->rank(); ++u)
    if (u != sp && u != tp && phi.target->finite(sp, u))
      fail("clause(5)", "m'(" + phi.target->label(sp) + "," +
                            phi.target->label(u) + ") is finite");

  const Word st_conj = canonical_word(
      *phi.target,
      w_prime.word() + static_cast<char>(sp) + static_cast<char>(tp) + wrev,
      cap);
  if (fs.word() != st_conj)
    fail("clause(6)", "image of " + phi.source->label(s) +
                          " is not the conjugated product s't'");

  return PseudoTranspositionResolution{s, partner, sp, tp, w_prime};
}

TwistResult twist_generating_set(const MatrixPtr& m, int s, int t) {
  if (s == t || s < 0 || t < 0 || s >= m->rank() || t >= m->rank())
    throw Error("twist needs two distinct generators");
  if (m->order(s, t) != 2)
    throw HypothesisViolated("m(" + m->label(s) + "," + m->label(t) +
                             ") must be 2");
  for (int u = 0; u < m->rank(); ++u)
    if (u != s && u != t && m->finite(s, u))
      throw HypothesisViolated("m(" + m->label(s) + "," + m->label(u) +
                               ") must be infinite");

  // Same order table; the twisted slot is renamed to the product.
  std::vector<std::vector<CoxeterMatrix::Entry>> orders(m->rank());
  for (int i = 0; i < m->rank(); ++i)
    for (int j = 0; j < m->rank(); ++j) orders[i].push_back(m->order(i, j));
  std::vector<std::string> labels = m->labels();
  std::string candidate = m->label(s) + m->label(t);
  while (std::find(labels.begin(), labels.end(), candidate) != labels.end())
    candidate += "'";
  labels[s] = candidate;

  GeneratorMap psi{m, m, {}};
  for (int i = 0; i < m->rank(); ++i) {
    Word w(1, static_cast<char>(i));
    if (i == s) w.push_back(static_cast<char>(t));
    psi.images.push_back(std::move(w));
  }
  validate_homomorphism(psi);
  return TwistResult{make_matrix(std::move(orders), std::move(labels)), psi};
}

AlignmentResult align_generating_sets(const GeneratorMap& phi,
                                      int search_radius, int plateau_cap,
                                      std::size_t cap) {
  if (!is_two_dimensional(*phi.source))
    throw NotTwoDimensional("source system is not two-dimensional");
  if (!is_two_dimensional(*phi.target))
    throw NotTwoDimensional("target system is not two-dimensional");
  validate_homomorphism(phi, cap);

  AlignmentResult result{{}, {}, {}, nullptr, GeneratorMap{}, {}};

  switch (check_bijectivity(phi, search_radius)) {
    case BijectivityStatus::Verified:
      break;
    case BijectivityStatus::Refuted:
      throw InvalidGeneratorMap(
          "images close on a proper subgroup; the map is not onto");
    case BijectivityStatus::UnverifiedAtRadius:
      result.warnings.push_back("bijectivity unverified at radius " +
                                std::to_string(search_radius));
      break;
  }

  for (int s = 0; s < phi.source->rank(); ++s)
    if (!is_reflection(phi.image(s, cap), plateau_cap, cap))
      result.pseudo.push_back(s);

  for (int s : result.pseudo)
    result.resolutions.push_back(
        resolve_pseudo_transposition(phi, s, search_radius, plateau_cap, cap));

  // Compose the twists; each application re-validates its own hypothesis.
  MatrixPtr aligned = phi.source;
  GeneratorMap psi = GeneratorMap::identity(phi.source);
  for (const auto& r : result.resolutions) {
    auto tw = twist_generating_set(aligned, r.s, r.partner_t);
    aligned = tw.twisted;
    psi.images[r.s] = tw.map.images[r.s];
  }
  validate_homomorphism(psi, cap);
  result.aligned_presentation = aligned;
  result.twist_automorphism = psi;

  std::vector<Word> seen_words;
  for (int s = 0; s < phi.source->rank(); ++s) {
    result.new_generators.push_back(reduce(phi.source, psi.images[s], cap));
    seen_words.push_back(result.new_generators.back().word());
  }
  std::sort(seen_words.begin(), seen_words.end());
  if (std::adjacent_find(seen_words.begin(), seen_words.end()) !=
      seen_words.end())
    throw TheoremViolation("distinctness",
                           "twisted generating set has repeated elements");

  // Every image must now be a reflection in the target system.
  for (int s = 0; s < phi.source->rank(); ++s)
    if (!is_reflection(phi.apply(psi.images[s], cap), plateau_cap, cap))
      throw TheoremViolation("alignment-reflection",
                             "image of twisted generator " +
                                 phi.source->label(s) +
                                 " is not a reflection in the target");

  if (phi.source->rank() != phi.target->rank())
    throw TheoremViolation("size", "generating sets have different sizes");

  return result;
}

// ---------------------------------------------------------------------------
// Invariants

DiagramInvariants diagram_invariants(const CoxeterMatrix& m) {
  DiagramInvariants inv;
  inv.vertex_count = m.rank();
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.finite(i, j)) {
        ++inv.edge_count;
        inv.labels.push_back(m.order(i, j));
      }
  std::sort(inv.labels.begin(), inv.labels.end());
  return inv;
}

InvariantComparison compare_invariants(const DiagramInvariants& a,
                                       const DiagramInvariants& b) {
  return InvariantComparison{a.vertex_count == b.vertex_count,
                             a.edge_count == b.edge_count,
                             a.labels == b.labels};
}

}  // namespace cox

#include <doctest.h>

#include <map>
#include <set>

#include "test_helpers.hpp"

using namespace cox;
using coxtest::INF;

TEST_CASE("canonical_coset: examples") {
  auto i22 = make_dihedral(2);
  auto id = GroupElement::identity(i22);

  auto c0 = canonical_coset(id, ParabolicSubset{});
  CHECK(c0.rep.is_identity());

  // m=2: (st, {t}) -> (s, {t}); the coset {st, s} has minimum length 1
  auto c1 = canonical_coset(reduce(i22, word({0, 1})), ParabolicSubset::of({1}));
  CHECK(c1.rep.word() == word({0}));

  // s W_{s} = W_{s}
  auto c2 = canonical_coset(reduce(i22, word({0})), ParabolicSubset::of({0}));
  CHECK(c2.rep.is_identity());

  // idempotent
  auto c3 = canonical_coset(c1.rep, c1.t);
  CHECK(c3 == c1);

  CHECK_THROWS_AS(canonical_coset(GroupElement::identity(coxtest::twist_rank3()),
                                  ParabolicSubset::of({0, 2})),
                  NotSpherical);
}

TEST_CASE("build_complex: cell counts on complete complexes") {
  auto cx2 = build_complex(make_dihedral(2), 2);
  CHECK(cx2.complete());
  CHECK(cx2.cells().size() == 9);  // 4 + 2 + 2 + 1

  auto cx6 = build_complex(make_dihedral(6), 6);
  CHECK(cx6.complete());
  CHECK(cx6.cells().size() == 25);  // 12 + 6 + 6 + 1

  // infinite dihedral, radius 5: a path of 11 vertices and 10 edges
  auto inf = make_matrix({{1, INF}, {INF, 1}});
  auto cxi = build_complex(inf, 5, 1000);
  CHECK_FALSE(cxi.complete());
  std::map<int, int> by_dim;
  for (const auto& c : cxi.cells()) ++by_dim[c.dim()];
  CHECK(by_dim[0] == 11);
  CHECK(by_dim[1] == 10);
  CHECK(by_dim.count(2) == 0);
}

TEST_CASE("complete complexes satisfy the coset counting identity") {
  for (auto& m : {make_dihedral(2), make_dihedral(6),
                  coxtest::triangle(3, 2, 2)}) {
    const auto order = group_order(m);
    REQUIRE(order.has_value());
    auto cx = build_complex(m, 16);
    REQUIRE(cx.complete());
    std::map<int, std::uint64_t> expected;
    for (const auto& t : spherical_subsets(*m))
      expected[t.size()] += *order / is_spherical(*m, t).order;
    std::map<int, std::uint64_t> got;
    for (const auto& c : cx.cells()) ++got[c.dim()];
    CHECK(got == expected);
  }
}

TEST_CASE("rank-0/1 cells reproduce the Cayley graph") {
  for (auto& m : {make_dihedral(6), coxtest::triangle(3, 2, 2)}) {
    auto cx = build_complex(m, 16);
    REQUIRE(cx.complete());
    const auto& table = cx.table();

    // vertices <-> table elements
    std::map<Word, int> vertex_of;
    int vertices = 0;
    for (std::size_t i = 0; i < cx.cells().size(); ++i)
      if (cx.cells()[i].dim() == 0) {
        vertex_of[cx.cells()[i].rep.word()] = static_cast<int>(i);
        ++vertices;
      }
    CHECK(vertices == table.size());

    // each rank-1 cell joins exactly the pair {w, w g} of the Cayley edge
    std::set<std::pair<Word, Word>> complex_edges, cayley_edges;
    std::map<int, std::vector<Word>> ends;
    for (const auto& [child, parent] : cx.covers())
      if (cx.cells()[child].dim() == 0 && cx.cells()[parent].dim() == 1)
        ends[parent].push_back(cx.cells()[child].rep.word());
    for (auto& [edge, pair] : ends) {
      REQUIRE(pair.size() == 2);
      std::sort(pair.begin(), pair.end(),
                [](const Word& a, const Word& b) { return shortlex_less(a, b); });
      complex_edges.insert({pair[0], pair[1]});
    }
    for (int i = 0; i < table.size(); ++i)
      for (int g = 0; g < m->rank(); ++g) {
        const int j = table.edge(i, g);
        REQUIRE(j >= 0);
        auto a = table.word_of(i), b = table.word_of(j);
        if (shortlex_less(b, a)) std::swap(a, b);
        cayley_edges.insert({a, b});
      }
    CHECK(complex_edges == cayley_edges);
  }
}

TEST_CASE("act: examples and poset automorphism") {
  auto i22 = make_dihedral(2);
  auto s = reduce(i22, word({0}));
  auto id = GroupElement::identity(i22);

  auto c = canonical_coset(id, ParabolicSubset::of({1}));
  CHECK(act(id, c) == c);
  CHECK(act(s, c).rep.word() == word({0}));  // s . (e, {t}) = (s, {t})

  // s fixes its own one-cell: s W_{s} = W_{s}
  auto cs = canonical_coset(id, ParabolicSubset::of({0}));
  CHECK(act(s, cs) == cs);

  // On a complete complex the action permutes cells and preserves covers.
  for (auto& m : {make_dihedral(6), coxtest::triangle(3, 2, 2)}) {
    auto cx = build_complex(m, 16);
    REQUIRE(cx.complete());
    const auto& table = cx.table();
    std::set<std::pair<int, int>> cover_set(cx.covers().begin(),
                                            cx.covers().end());
    for (int gi = 0; gi < table.size(); ++gi) {
      const auto g = table.element(gi);
      std::vector<int> image(cx.cells().size());
      std::set<int> hit;
      for (std::size_t i = 0; i < cx.cells().size(); ++i) {
        image[i] = cx.act_on_cell(g, static_cast<int>(i));
        hit.insert(image[i]);
      }
      CHECK(hit.size() == cx.cells().size());  // bijection
      for (const auto& [child, parent] : cx.covers())
        CHECK(cover_set.count({image[child], image[parent]}) == 1);
    }
  }
}

TEST_CASE("half-turns fix exactly their own two-cell and no vertex") {
  // Two-dimensional complete complexes are the finite dihedral ones.
  for (auto& m : {make_dihedral(2), make_dihedral(4), make_dihedral(6)}) {
    auto cx = build_complex(m, 16);
    REQUIRE(cx.complete());
    const auto& table = cx.table();
    const auto mlabel = m->order(0, 1);
    REQUIRE(mlabel % 2 == 0);

    for (int wi = 0; wi < table.size(); ++wi) {
      const auto w = table.element(wi);
      // v = w (st)^{m/2} w^-1
      Word half;
      for (CoxeterMatrix::Entry k = 0; k < mlabel; ++k)
        half.push_back(static_cast<char>(k % 2 == 0 ? 0 : 1));
      const auto v = multiply(multiply(w, reduce(m, half)), invert(w));

      int fixed_two_cells = 0, fixed_vertices = 0;
      for (std::size_t i = 0; i < cx.cells().size(); ++i) {
        const bool fixed = cx.act_on_cell(v, static_cast<int>(i)) ==
                           static_cast<int>(i);
        if (cx.cells()[i].dim() == 2 && fixed) ++fixed_two_cells;
        if (cx.cells()[i].dim() == 0 && fixed) ++fixed_vertices;
      }
      CHECK(fixed_two_cells == 1);
      CHECK(fixed_vertices == 0);
    }
  }
}

TEST_CASE("act_on_cell escaping the truncation throws") {
  auto inf = make_matrix({{1, INF}, {INF, 1}});
  auto cx = build_complex(inf, 3, 1000);
  REQUIRE_FALSE(cx.complete());
  // Translating the far-right vertex further right leaves the ball.
  const auto far = reduce(inf, word({0, 1, 0}));
  int far_cell = cx.cell_index(SphericalCoset{far, ParabolicSubset{}});
  REQUIRE(far_cell >= 0);
  CHECK_THROWS_AS(cx.act_on_cell(reduce(inf, word({0, 1})), far_cell),
                  BallEscape);
}

TEST_CASE("cell dimension is bounded by the complex dimension") {
  for (auto& m : {make_dihedral(6), coxtest::triangle(3, 2, 2)}) {
    auto cx = build_complex(m, 16);
    REQUIRE(cx.complete());
    int max_dim = 0;
    for (const auto& c : cx.cells()) max_dim = std::max(max_dim, c.dim());
    CHECK(max_dim == davis_dimension(*m));  // equality when complete
  }
  auto inf = make_matrix({{1, INF}, {INF, 1}});
  auto cxi = build_complex(inf, 0, 100);
  CHECK(cxi.cells().size() == 1);  // just the identity vertex
  int max_dim = 0;
  for (const auto& c : cxi.cells()) max_dim = std::max(max_dim, c.dim());
  CHECK(max_dim <= davis_dimension(*inf));
}

TEST_CASE("exports are well-formed and deterministic") {
  auto cx = build_complex(make_dihedral(2), 2);
  CHECK(cx.hasse_dot().find("digraph hasse") != std::string::npos);
  CHECK(cx.skeleton_dot().find("graph skeleton") != std::string::npos);
  CHECK(cx.to_json() == cx.to_json());
  CHECK(cx.to_json().find("\"rep_word\"") != std::string::npos);
  // 9 cells: 4+4 vertex-edge covers plus 4 edge-face covers
  CHECK(cx.covers().size() == 12);
}

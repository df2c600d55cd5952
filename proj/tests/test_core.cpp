#include <doctest.h>

#include <random>

#include "cox/presentation.hpp"
#include "test_helpers.hpp"

using namespace cox;
using coxtest::INF;

TEST_CASE("matrix validation accepts and rejects per the contract") {
  CHECK(make_matrix({{1, 2}, {2, 1}})->rank() == 2);
  CHECK(make_dihedral(6)->order(0, 1) == 6);

  CHECK_THROWS_AS(make_matrix({{1, 1}, {1, 1}}), InvalidMatrix);
  CHECK_THROWS_AS(make_matrix({{2, 3}, {3, 1}}), InvalidMatrix);   // diagonal
  CHECK_THROWS_AS(make_matrix({{1, 3}, {4, 1}}), InvalidMatrix);   // symmetry
  CHECK_THROWS_AS(make_matrix({{1, 3, 2}, {3, 1, 2}}), InvalidMatrix);  // shape
  CHECK_THROWS_AS(make_matrix({}), InvalidMatrix);

  try {
    make_matrix({{1, 1}, {1, 1}});
  } catch (const InvalidMatrix& e) {
    CHECK(e.kind == InvalidMatrix::Kind::BadOffDiagonal);
  }
}

TEST_CASE("reduce matches the frozen dihedral answers and the BFS oracle") {
  auto i22 = make_dihedral(2);
  auto i23 = make_dihedral(3);

  // s s -> identity
  CHECK(reduce(i23, word({0, 0})).is_identity());

  // m=2: s t s -> t, cross-checked against the oracle table walk
  auto t22 = enumerate(i22);
  REQUIRE(t22.complete());
  auto walked = t22.walk(word({0, 1, 0}));
  REQUIRE(walked.has_value());
  CHECK(t22.word_of(*walked) == word({1}));
  CHECK(reduce(i22, word({0, 1, 0})).word() == word({1}));

  // m=3: s t s t -> t s
  auto t23 = enumerate(i23);
  auto walked3 = t23.walk(word({0, 1, 0, 1}));
  REQUIRE(walked3.has_value());
  CHECK(t23.word_of(*walked3) == word({1, 0}));
  CHECK(reduce(i23, word({0, 1, 0, 1})).word() == word({1, 0}));

  CHECK_THROWS_AS(reduce(i23, Word(41, char(0))), WordTooLong);
  CHECK_THROWS_AS(reduce(i23, word({0, 2})), Error);  // letter out of range
}

TEST_CASE("group operations satisfy the algebra on canonical forms") {
  auto i23 = make_dihedral(3);
  auto id = GroupElement::identity(i23);
  auto st = reduce(i23, word({0, 1}));

  CHECK(equal(multiply(st, id), st));
  CHECK(multiply(st, invert(st)).is_identity());
  CHECK(invert(st).word() == word({1, 0}));  // (st)^-1 = ts, both reduced

  auto i22 = make_dihedral(2);
  auto st2 = reduce(i22, word({0, 1}));
  auto t2 = reduce(i22, word({1}));
  CHECK(multiply(st2, t2).word() == word({0}));  // t t cancels

  CHECK_THROWS_AS(equal(st, st2), MatrixMismatch);
  CHECK_THROWS_AS(multiply(st, st2), MatrixMismatch);

  // the concatenation is checked against the cap before reducing
  auto inf = make_matrix({{1, INF}, {INF, 1}});
  Word long_word;
  for (int i = 0; i < 25; ++i) long_word.push_back(static_cast<char>(i % 2));
  auto a = reduce(inf, long_word);
  CHECK(a.length() == 25);
  CHECK_THROWS_AS(multiply(a, invert(a)), WordTooLong);
}

TEST_CASE("length, parity, support, membership") {
  auto i23 = make_dihedral(3);
  auto id = GroupElement::identity(i23);
  CHECK(id.length() == 0);
  CHECK(id.parity() == Parity::Even);
  CHECK(id.support().empty());
  CHECK(in_parabolic(id, ParabolicSubset{}));

  auto s = reduce(i23, word({0}));
  CHECK(s.length() == 1);
  CHECK(s.parity() == Parity::Odd);
  CHECK(s.support() == ParabolicSubset::of({0}));
  CHECK(in_parabolic(s, ParabolicSubset::of({0})));

  auto stst = reduce(i23, word({0, 1, 0, 1}));
  CHECK(stst.length() == 2);
  CHECK(stst.parity() == Parity::Even);

  // m=2: sts = t, support {t}
  auto i22 = make_dihedral(2);
  CHECK(reduce(i22, word({0, 1, 0})).support() == ParabolicSubset::of({1}));

  // ts has support {s,t}, not inside {s}
  auto ts = reduce(i23, word({1, 0}));
  CHECK_FALSE(in_parabolic(ts, ParabolicSubset::of({0})));
}

TEST_CASE("parity of the canonical form equals parity of any representative") {
  std::mt19937 rng(20240817);
  for (auto& m : {make_dihedral(3), coxtest::triangle(3, 2, 2),
                  coxtest::twist_rank3()}) {
    std::uniform_int_distribution<int> len(0, 12), gen(0, m->rank() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      const int l = len(rng);
      for (int i = 0; i < l; ++i) w.push_back(static_cast<char>(gen(rng)));
      auto g = reduce(m, w);
      CHECK(g.length() % 2 == static_cast<int>(w.size()) % 2);
    }
  }
}

TEST_CASE("all reduced words of an element share one letter set") {
  auto a4 = coxtest::a4_path();
  const auto table = enumerate(a4);
  REQUIRE(table.complete());
  for (int i = 0; i < table.size(); ++i) {
    const auto words = reduced_words(*a4, table.word_of(i));
    const auto support = letter_set(table.word_of(i));
    for (const auto& w : words) {
      CHECK(letter_set(w) == support);
      CHECK(w.size() == table.word_of(i).size());
    }
  }
}

TEST_CASE("longest element: examples and the descent certificate") {
  auto i22 = make_dihedral(2);
  auto i23 = make_dihedral(3);

  CHECK(longest_element(i22, ParabolicSubset{}).is_identity());
  CHECK(longest_element(i22, ParabolicSubset::of({0, 1})).word() == word({0, 1}));
  CHECK(longest_element(i23, ParabolicSubset::of({0, 1})).word() ==
        word({0, 1, 0}));

  CHECK_THROWS_AS(
      longest_element(coxtest::twist_rank3(), ParabolicSubset::of({0, 2})),
      NotSpherical);

  // descent-criterion checks
  CHECK(is_longest_in(GroupElement::identity(i22), ParabolicSubset{}));
  CHECK(is_longest_in(reduce(i22, word({0, 1})), ParabolicSubset::of({0, 1})));
  CHECK_FALSE(is_longest_in(reduce(i23, word({0})), ParabolicSubset::of({0, 1})));
}

TEST_CASE("longest element is the unique oracle element passing the descent test") {
  auto tri = coxtest::triangle(3, 2, 2);
  const auto table = enumerate(tri);
  REQUIRE(table.complete());
  for (const auto& t : spherical_subsets(*tri)) {
    if (t.empty()) continue;
    const auto w0 = longest_element(tri, t);
    int count = 0;
    for (int i = 0; i < table.size(); ++i) {
      auto e = table.element(i);
      if (is_longest_in(e, t)) {
        ++count;
        CHECK(equal(e, w0));
      }
    }
    CHECK(count == 1);
  }
}

TEST_CASE("distinct subsets generate distinct parabolic subgroups") {
  auto tri = coxtest::triangle(3, 2, 2);
  const auto table = enumerate(tri);
  const auto subsets = spherical_subsets(*tri);
  std::vector<std::vector<GroupElement>> element_sets;
  for (const auto& t : subsets) {
    std::vector<GroupElement> gens;
    for (int g : t.indices()) gens.push_back(reduce(tri, Word(1, char(g))));
    element_sets.push_back(subgroup_elements(table, gens));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      bool same_size = element_sets[i].size() == element_sets[j].size();
      if (!same_size) continue;
      bool all_equal = true;
      for (std::size_t k = 0; k < element_sets[i].size(); ++k)
        if (!equal(element_sets[i][k], element_sets[j][k])) {
          all_equal = false;
          break;
        }
      CHECK_FALSE(all_equal);
    }
}

TEST_CASE("random products: associativity and agreement with table walks") {
  auto h3 = make_matrix({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});  // order 120
  const auto table = enumerate(h3, 20, 200);
  REQUIRE(table.complete());

  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> pick(0, table.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = table.element(pick(rng));
    const auto b = table.element(pick(rng));
    const auto c = table.element(pick(rng));
    CHECK(equal(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));

    const auto via_table = table.walk_from(*table.walk(a.word()), b.word());
    REQUIRE(via_table.has_value());
    CHECK(table.word_of(*via_table) == multiply(a, b).word());
  }
}

TEST_CASE("element_order") {
  auto i26 = make_dihedral(6);
  CHECK(element_order(GroupElement::identity(i26)) == 1);
  CHECK(element_order(reduce(i26, word({0}))) == 2);
  CHECK(element_order(reduce(i26, word({0, 1}))) == 6);

  auto tw = coxtest::twist_rank3();
  CHECK_FALSE(element_order(reduce(tw, word({0, 2})), 16).has_value());
}

#include <doctest.h>

#include "test_helpers.hpp"

using namespace cox;
using coxtest::INF;

TEST_CASE("enumerate: dihedral examples") {
  auto t2 = enumerate(make_dihedral(2));
  CHECK(t2.complete());
  CHECK(t2.size() == 4);
  CHECK(t2.word_of(0).empty());

  auto t6 = enumerate(make_dihedral(6));
  CHECK(t6.complete());
  CHECK(t6.size() == 12);

  auto inf = make_matrix({{1, INF}, {INF, 1}});
  auto ball = enumerate(inf, 5, 1000);
  CHECK_FALSE(ball.complete());
  CHECK(ball.size() == 11);  // 2*5 + 1
  CHECK(ball.radius() == 5);
}

TEST_CASE("enumerate: BFS order is by length then shortlex") {
  auto table = enumerate(coxtest::triangle(3, 2, 2));
  REQUIRE(table.complete());
  for (int i = 1; i < table.size(); ++i)
    CHECK(shortlex_less(table.word_of(i - 1), table.word_of(i)));
}

TEST_CASE("group_order: fixture orders and cap behavior") {
  CHECK(group_order(coxtest::triangle(3, 2, 2)) == 12);
  CHECK(group_order(coxtest::a4_path()) == 120);
  CHECK(group_order(coxtest::d4_star()) == 192);
  // all labels >= 3: infinite, never closes
  CHECK_FALSE(group_order(coxtest::triangle(3, 3, 3), 500, 40).has_value());
  CHECK_FALSE(group_order(coxtest::triangle(3, 3, 3), 100000, 8).has_value());
}

TEST_CASE("subgroup closure: examples") {
  auto i22 = make_dihedral(2);
  auto table = enumerate(i22);

  auto c1 = subgroup_elements(table, {reduce(i22, word({0}))});
  CHECK(c1.size() == 2);

  auto c2 = subgroup_elements(table, {reduce(i22, word({0, 1})),
                                      reduce(i22, word({1}))});
  CHECK(c2.size() == 4);  // {1, s, t, st}

  auto c3 = subgroup_elements(table, {});
  CHECK(c3.size() == 1);
  CHECK(c3[0].is_identity());
}

TEST_CASE("subgroup closure escaping an incomplete ball throws") {
  auto inf = make_matrix({{1, INF}, {INF, 1}});
  auto ball = enumerate(inf, 4, 1000);
  REQUIRE_FALSE(ball.complete());
  CHECK_THROWS_AS(
      subgroup_elements(ball, {reduce(inf, word({0})), reduce(inf, word({1}))}),
      BallEscape);
}

TEST_CASE("complete tables have even order and involutive edges") {
  for (auto& m : {make_dihedral(2), make_dihedral(3), make_dihedral(6),
                  coxtest::triangle(3, 2, 2), coxtest::a4_path()}) {
    auto table = enumerate(m);
    REQUIRE(table.complete());
    CHECK(table.size() % 2 == 0);
    for (int i = 0; i < table.size(); ++i)
      for (int g = 0; g < m->rank(); ++g) {
        const int j = table.edge(i, g);
        REQUIRE(j != EnumerationTable::kOutside);
        CHECK(table.edge(j, g) == i);
      }
  }
}

TEST_CASE("oracle and engine agree on every table element") {
  for (auto& m : {make_dihedral(4), coxtest::triangle(3, 2, 2)}) {
    auto table = enumerate(m);
    for (int i = 0; i < table.size(); ++i) {
      CHECK(reduce(m, table.word_of(i)).word() == table.word_of(i));
      auto walked = table.walk(table.word_of(i));
      REQUIRE(walked.has_value());
      CHECK(*walked == i);
    }
  }
}

TEST_CASE("table export formats") {
  auto table = enumerate(make_dihedral(2));
  const auto dot = table.to_dot();
  CHECK(dot.find("graph cayley") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);

  const auto js = table.to_json();
  CHECK(js.find("\"complete\": true") != std::string::npos);
  CHECK(table.to_json() == js);  // deterministic
}

#include <doctest.h>

#include <shepkit/groups.hpp>

#include <optional>
#include <set>
#include <vector>

using namespace shepkit;

namespace {

std::optional<uint64_t> order_of(const std::string& text) {
  return group_order(parse_diagram(text));
}

}  // namespace

TEST_CASE("presentations list order and braid relators") {
  auto d = parse_diagram("3[4]2");
  auto pres = presentation(d);
  CHECK(pres.ngens == 2);
  // Two generator orders plus one braid relator.
  REQUIRE(pres.relators.size() == 3);
  std::multiset<size_t> lens;
  for (const auto& r : pres.relators) lens.insert(r.size());
  CHECK(lens == std::multiset<size_t>{2, 3, 8});
  for (const auto& r : pres.relators)
    for (int s : r) {
      CHECK(s >= 0);
      CHECK(s < 4);
    }

  auto free_ish = presentation(parse_diagram("3[inf]3"));
  CHECK(free_ish.ngens == 2);
  CHECK(free_ish.relators.size() == 2);

  auto vertex = presentation(parse_diagram("5"));
  CHECK(vertex.ngens == 1);
  REQUIRE(vertex.relators.size() == 1);
  CHECK(vertex.relators[0].size() == 5);
}

TEST_CASE("coset enumeration over the trivial subgroup is regular") {
  auto d = parse_diagram("3[3]3");
  auto t = coset_enumerate(presentation(d), {});
  CHECK(t.ngens() == 2);
  CHECK(t.size() == 24);
  // Row 0 is the subgroup and the table is closed: acting stays in range.
  for (int c = 0; c < t.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      int img = t.at(c, s);
      CHECK(img >= 0);
      CHECK(img < t.size());
    }
  // Symbols 2g and 2g+1 are mutually inverse actions.
  for (int c = 0; c < t.size(); ++c)
    for (int g = 0; g < 2; ++g) {
      CHECK(t.at(t.at(c, 2 * g), 2 * g + 1) == c);
      CHECK(t.at(t.at(c, 2 * g + 1), 2 * g) == c);
    }
}

TEST_CASE("parabolic cosets have index order/parabolic order") {
  auto d = parse_diagram("3[3]3[3]3");
  auto pres = presentation(d);
  CHECK(coset_enumerate(pres, GeneratorSubset{0}).size() == 648 / 3);
  CHECK(coset_enumerate(pres, GeneratorSubset{0, 1}).size() == 648 / 24);
  CHECK(coset_enumerate(pres, GeneratorSubset::full(3)).size() == 1);
}

TEST_CASE("coset tables are standardized") {
  auto d = parse_diagram("2[4]3[3]3");
  auto pres = presentation(d);
  auto a = coset_enumerate(pres, GeneratorSubset{2});
  auto b = coset_enumerate(pres, GeneratorSubset{2});
  REQUIRE(a.size() == b.size());
  for (int c = 0; c < a.size(); ++c)
    for (int s = 0; s < 2 * a.ngens(); ++s) CHECK(a.at(c, s) == b.at(c, s));
}

TEST_CASE("the coset cap throws with the cap value") {
  auto d = parse_diagram("3[inf]3");
  try {
    coset_enumerate(presentation(d), {}, 100);
    FAIL("expected CosetLimitExceeded");
  } catch (const CosetLimitExceeded& e) {
    CHECK(e.cap() == 100);
  }
  CHECK_THROWS_AS(coset_enumerate(presentation(parse_diagram("3[3]3")), {}, 10),
                  CosetLimitExceeded);
}

TEST_CASE("permutation groups expand to their element lists") {
  PermutationGroup s3(3, {{1, 0, 2}, {0, 2, 1}});
  CHECK(s3.degree() == 3);
  CHECK(s3.order() == 6);
  REQUIRE(s3.elements().size() == 6);
  CHECK(s3.elements()[0] == std::vector<int>{0, 1, 2});

  PermutationGroup z5(5, {{1, 2, 3, 4, 0}});
  CHECK(z5.order() == 5);
}

TEST_CASE("parabolic actions realize the regular representation") {
  auto d = parse_diagram("3[4]2");
  auto t = coset_enumerate(presentation(d), {});
  auto g = parabolic_action(t);
  CHECK(g.degree() == 18);
  CHECK(g.order() == 18);
}

TEST_CASE("action isomorphism finds equivariant bijections") {
  // Z4 acting by +1 versus by -1: x -> c - x intertwines them.
  std::vector<std::vector<int>> plus = {{1, 2, 3, 0}};
  std::vector<std::vector<int>> minus = {{3, 0, 1, 2}};
  auto f = action_isomorphism(plus, minus);
  REQUIRE(f.has_value());
  for (int x = 0; x < 4; ++x) CHECK((*f)[plus[0][x]] == minus[0][(*f)[x]]);

  CHECK(!action_isomorphism(plus, {{0, 1, 2, 3}}).has_value());
  CHECK(action_isomorphism(plus, plus, {2}).has_value());
}

TEST_CASE("group orders match the classification tables") {
  CHECK(order_of("5") == 5);
  CHECK(order_of("2[4]2") == 8);
  CHECK(order_of("3[3]3") == 24);
  CHECK(order_of("3[4]2") == 18);
  CHECK(order_of("3[5]3") == 360);
  CHECK(order_of("5[4]3") == 1800);
  CHECK(order_of("3[3]3[3]3") == 648);
  CHECK(order_of("2[4]3[3]3") == 1296);
  CHECK(order_of("3[3]3[4]2") == 1296);
  CHECK(order_of("3[4]2[3]2") == 162);
  CHECK(order_of("4[4]2[3]2") == 384);
  CHECK(order_of("2[5]2[3]2") == 120);
}

TEST_CASE("infinite diagrams report no order without enumerating") {
  CHECK(!order_of("3[inf]3").has_value());
  CHECK(!order_of("inf[4]2").has_value());
  CHECK(!order_of("6[3]6").has_value());
  CHECK(!order_of("3[3]3[3]3[3]3[3]3").has_value());
  // Euclidean triangle group.
  auto tri = parse_diagram(
      "vertex a 2\n"
      "vertex b 2\n"
      "vertex c 2\n"
      "edge a b 3\n"
      "edge b c 3\n"
      "edge a c 3\n");
  CHECK(!group_order(tri).has_value());
}

TEST_CASE("disconnected orders multiply") {
  ExtendedCoxeterDiagram d(
      {{"a", Label::finite(3)},
       {"b", Label::finite(2)},
       {"c", Label::finite(2)},
       {"d", Label::finite(2)}},
      {{0, 1, Label::finite(4)}, {2, 3, Label::finite(4)}});
  CHECK(group_order(d) == 18 * 8);
}

TEST_CASE("group_order forwards the coset cap") {
  CHECK_THROWS_AS(group_order(parse_diagram("3[3]3[3]3"), 20),
                  CosetLimitExceeded);
}

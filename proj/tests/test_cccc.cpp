#include <doctest.h>

#include <shepkit/cccc.hpp>
#include <shepkit/milnor.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

using namespace shepkit;

namespace {

MarkedA3Complex marked_hessian_theta() {
  auto m = milnor_complex(parse_diagram("3[3]3[3]3"));
  auto po = m.diagram.path_order();
  std::map<std::string, std::string> names;
  names[std::to_string(po[0])] = "a";
  names[std::to_string(po[1])] = "b";
  names[std::to_string(po[2])] = "c";
  return mark_a3(m.complex.retyped(names));
}

const LoopClass* census_find(const std::vector<LoopClass>& v, int j, int k) {
  for (const auto& lc : v)
    if (lc.j == j && lc.k == k) return &lc;
  return nullptr;
}

}  // namespace

TEST_CASE("edge lengths solve the spherical chamber") {
  auto len = edge_lengths();
  CHECK(len.len_b == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
  CHECK(len.len_a ==
        doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-12));
  CHECK(len.len_c == len.len_a);

  auto sw = swapped_edge_lengths();
  CHECK(sw.len_b == len.len_a);
  CHECK(sw.len_a == len.len_b);
  CHECK(sw.len_c == len.len_b);

  // The boundary identity both censuses hinge on.
  CHECK(2 * len.len_b + 4 * len.len_a ==
        doctest::Approx(2 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("the loop audit buckets short closed shapes") {
  auto census = loop_audit(edge_lengths());
  REQUIRE(census.admitted.size() == 3);
  CHECK(census_find(census.admitted, 0, 3) != nullptr);
  CHECK(census_find(census.admitted, 2, 1) != nullptr);
  CHECK(census_find(census.admitted, 4, 0) != nullptr);
  CHECK(census_find(census.admitted, 0, 3)->length ==
        doctest::Approx(6 * std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-9));
  CHECK(census_find(census.admitted, 4, 0)->length ==
        doctest::Approx(4 * std::acos(1.0 / 3.0)).epsilon(1e-9));
  REQUIRE(census.boundary.size() == 1);
  CHECK(census.boundary[0].j == 2);
  CHECK(census.boundary[0].k == 2);

  auto sw = loop_audit(swapped_edge_lengths());
  REQUIRE(sw.admitted.size() == 3);
  CHECK(census_find(sw.admitted, 2, 1) != nullptr);
  CHECK(census_find(sw.admitted, 4, 0) != nullptr);
  CHECK(census_find(sw.admitted, 6, 0) != nullptr);
  REQUIRE(sw.boundary.size() == 1);
  CHECK(sw.boundary[0].j == 4);
  CHECK(sw.boundary[0].k == 1);
}

TEST_CASE("marking accepts the hessian milnor complex") {
  auto marked = marked_hessian_theta();
  int a = 0, b = 0, c = 0;
  for (int v : marked.complex.vertex_ids()) {
    const auto& t = marked.complex.type_of(v);
    if (t == "a") ++a;
    if (t == "b") ++b;
    if (t == "c") ++c;
  }
  CHECK(a == 27);
  CHECK(b == 72);
  CHECK(c == 27);
  // Chamber count: one per flag.
  CHECK(marked.complex.simplices_of_dim(2).size() == 648);

  // Edge letters name the missing type.
  auto tri = marked.complex.simplices_of_dim(2)[0];
  std::map<std::string, int> by_type;
  for (int v : tri) by_type[marked.complex.type_of(v)] = v;
  CHECK(marked.edge_letter(by_type["a"], by_type["b"]) == "c");
  CHECK(marked.edge_letter(by_type["a"], by_type["c"]) == "b");
  CHECK(marked.edge_letter(by_type["b"], by_type["c"]) == "a");
}

TEST_CASE("marking rejects complexes with missing or clashing types") {
  SimplicialComplex untyped({{0, 1, 2}});
  try {
    mark_a3(untyped);
    FAIL("expected MarkingError");
  } catch (const MarkingError& e) {
    CHECK(!e.violations().empty());
  }

  // Edge not in any chamber.
  SimplicialComplex dangling({{0, 1, 2}, {0, 3}},
                             {{0, "a"}, {1, "b"}, {2, "c"}, {3, "b"}});
  CHECK_THROWS_AS(mark_a3(dangling), MarkingError);

  // Chamber with a repeated type.
  SimplicialComplex doubled({{0, 1, 2}}, {{0, "a"}, {1, "a"}, {2, "b"}});
  CHECK_THROWS_AS(mark_a3(doubled), MarkingError);
}

TEST_CASE("a single chamber fails the b-link condition") {
  SimplicialComplex one({{0, 1, 2}}, {{0, "a"}, {1, "b"}, {2, "c"}});
  auto rep = check_cccc(mark_a3(one));
  CHECK(!rep.pass());
  REQUIRE(rep.cond2.size() == 1);
  CHECK(rep.cond2[0].sides == std::pair{1, 1});
  CHECK(!rep.cond2[0].pass);
}

TEST_CASE("the coxeter a3 complex passes with doubled chambers") {
  auto m = milnor_complex(parse_diagram("2[3]2[3]2"));
  auto po = m.diagram.path_order();
  std::map<std::string, std::string> names;
  names[std::to_string(po[0])] = "a";
  names[std::to_string(po[1])] = "b";
  names[std::to_string(po[2])] = "c";
  auto marked = mark_a3(m.complex.retyped(names));
  CHECK(marked.complex.simplices_of_dim(2).size() == 24);
  auto rep = check_cccc(marked);
  CHECK(rep.pass());
  for (const auto& b : rep.cond2) CHECK(b.sides == std::pair{2, 2});
}

TEST_CASE("the hessian milnor complex satisfies cccc") {
  auto rep = check_cccc(marked_hessian_theta());
  CHECK(rep.pass());
  CHECK(rep.cond1.size() == 54);
  for (const auto& g : rep.cond1) {
    CHECK(g.girth.has_value());
    CHECK(*g.girth >= 6);
  }
  CHECK(rep.cond2.size() == 72);
  for (const auto& b : rep.cond2) CHECK(b.sides == std::pair{3, 3});
  REQUIRE(rep.cond3.size() == 5);
  for (const auto& p : rep.cond3) {
    CHECK(p.cycles == 648);
    CHECK(p.filled == 648);
    CHECK(p.unique_fillers);
    CHECK(p.pass);
  }
  CHECK(rep.loop_audit.admitted.size() == 3);
}

TEST_CASE("the hessian cat(1) certificate passes end to end") {
  auto rep = certify_hessian_cat1(false);
  CHECK(!rep.checks.empty());
  CHECK(rep.pass());
  bool saw_pattern = false, saw_census = false, saw_coset = false;
  for (const auto& e : rep.checks) {
    if (e.name.rfind("pattern-", 0) == 0) saw_pattern = true;
    if (e.name == "loop-audit-census") saw_census = true;
    if (e.name == "models-isomorphic") saw_coset = true;
  }
  CHECK(saw_pattern);
  CHECK(saw_census);
  CHECK(!saw_coset);
}

#include <doctest.h>

#include <shepkit/polytopes.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace shepkit;

namespace {

bool all_pass(const Report& r) { return r.pass(); }

}  // namespace

TEST_CASE("the coset polytope of 3[3]3 is the complex equilateral") {
  auto p = polytope_from_group(parse_diagram("3[3]3"));
  REQUIRE(p.rank() == 2);
  CHECK(p.count(0) == 8);
  CHECK(p.count(1) == 8);
  CHECK(p.total_proper() == 16);
  CHECK(p.flag_count() == 24);
  CHECK(all_pass(p.validate()));
  // Every edge carries 3 vertices and every vertex lies on 3 edges.
  std::vector<int> up(8, 0), down(8, 0);
  for (auto [i, j] : p.covers(0)) {
    ++up[i];
    ++down[j];
  }
  for (int i = 0; i < 8; ++i) {
    CHECK(up[i] == 3);
    CHECK(down[i] == 3);
  }
}

TEST_CASE("generalized cubes have p^k 2^(n-k)-ish face counts") {
  auto square3 = generalized_cube(2, 3);
  REQUIRE(square3.rank() == 2);
  CHECK(square3.count(0) == 9);
  CHECK(square3.count(1) == 6);
  CHECK(square3.flag_count() == 18);
  CHECK(all_pass(square3.validate()));

  auto cube = generalized_cube(3, 2);
  REQUIRE(cube.rank() == 3);
  CHECK(cube.count(0) == 8);
  CHECK(cube.count(1) == 12);
  CHECK(cube.count(2) == 6);
  CHECK(cube.flag_count() == 48);

  // Matches the coset model of its diagram.
  CHECK(poset_isomorphic(generalized_cube(2, 4),
                         polytope_from_group(parse_diagram("4[4]2"))));
  CHECK(poset_isomorphic(cube,
                         polytope_from_group(parse_diagram("2[4]2[3]2"))));
}

TEST_CASE("duals reverse the rank sequence") {
  auto cube = generalized_cube(3, 2);
  auto oct = dual(cube);
  CHECK(oct.count(0) == 6);
  CHECK(oct.count(1) == 12);
  CHECK(oct.count(2) == 8);
  CHECK(oct.flag_count() == 48);
  CHECK(poset_isomorphic(dual(oct), cube));
  CHECK(!poset_isomorphic(oct, cube));
  CHECK(all_pass(oct.validate()));
}

TEST_CASE("products add ranks and multiply flags") {
  auto seg = generalized_cube(1, 2);
  auto sq = product(seg, seg);
  CHECK(sq.rank() == 2);
  CHECK(sq.count(0) == 4);
  CHECK(sq.count(1) == 4);
  CHECK(poset_isomorphic(sq, generalized_cube(2, 2)));
  auto c = product(sq, seg);
  CHECK(poset_isomorphic(c, generalized_cube(3, 2)));
  CHECK(c.flag_count() == 48);
}

TEST_CASE("proper posets are rank-major with payload overrides") {
  auto seg = generalized_cube(1, 3);
  auto p = seg.proper_poset();
  CHECK(p.size() == 3);
  CHECK(p.payload(0) == "0");
  auto q = seg.proper_poset({"v"});
  CHECK(q.payload(2) == "v");

  auto sq = generalized_cube(2, 2);
  auto pp = sq.proper_poset();
  CHECK(pp.size() == 8);
  // Vertices first, then edges; each edge has two vertices below.
  int below = 0;
  for (int v = 0; v < 4; ++v)
    if (pp.less(v, 4)) ++below;
  CHECK(below == 2);
  CHECK(pp.rank(0) == 0);
  CHECK(pp.rank(7) == 1);
}

TEST_CASE("incidence graphs join consecutive ranks") {
  auto square = generalized_cube(2, 2);
  auto g = incidence_graph(square);
  CHECK(g.size() == 4 + 4);
  CHECK(g.edges().size() == 8);
  // A rank-one polytope has no cover pairs among its proper faces.
  auto seg = incidence_graph(generalized_cube(1, 4));
  CHECK(seg.size() == 4);
  CHECK(seg.edges().empty());
}

TEST_CASE("validate flags broken medial figures") {
  // A "digon" with a single edge: vertex-top incidences
  // have only one intermediate face.
  FacePoset bad({{"v0", "v1"}, {"e"}}, {{{0, 0}, {1, 0}}});
  CHECK(!all_pass(bad.validate()));
  FacePoset good({{"v0", "v1"}, {"e", "f"}},
                 {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}});
  CHECK(all_pass(good.validate()));
}

TEST_CASE("the hessian tables have the expected shape") {
  auto [data, poset] = hessian();
  CHECK(data.symbols.size() == 27);
  CHECK(data.edges.size() == 72);
  CHECK(data.faces.size() == 27);
  CHECK(data.symbol_index(data.symbols[5]) == 5);
  CHECK_THROWS_AS(data.symbol_index("not a symbol"), std::out_of_range);

  REQUIRE(poset.rank() == 3);
  CHECK(poset.count(0) == 27);
  CHECK(poset.count(1) == 72);
  CHECK(poset.count(2) == 27);
  CHECK(poset.flag_count() == 648);
  CHECK(all_pass(poset.validate()));

  CHECK(poset.incident(0, 0, 1, 0) ==
        (std::find(data.edges[0].begin(), data.edges[0].end(), 0) !=
         data.edges[0].end()));
}

TEST_CASE("hessian verification passes without the coset model") {
  auto rep = verify_hessian(false);
  CHECK(!rep.checks.empty());
  CHECK(all_pass(rep));
  bool has_coset = false;
  for (const auto& e : rep.checks)
    if (e.name == "coset-model-isomorphic") has_coset = true;
  CHECK(!has_coset);
}

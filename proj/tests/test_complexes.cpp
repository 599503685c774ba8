#include <doctest.h>

#include <shepkit/complexes.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace shepkit;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex({{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("simplicial complexes close under faces") {
  SimplicialComplex sc({{0, 1, 2}, {2, 3}});
  CHECK(sc.num_vertices() == 4);
  CHECK(sc.dimension() == 2);
  CHECK(sc.has_simplex({0, 1, 2}));
  CHECK(sc.has_simplex({1, 2}));
  CHECK(sc.has_simplex({3}));
  CHECK(!sc.has_simplex({0, 3}));
  CHECK(sc.simplices_of_dim(0).size() == 4);
  CHECK(sc.simplices_of_dim(1).size() == 4);
  CHECK(sc.simplices_of_dim(2).size() == 1);
  // 4 - 4 + 1
  CHECK(sc.euler_characteristic() == 1);
  CHECK(sc.is_connected());

  // Vertex ids need not be contiguous.
  SimplicialComplex sparse({{10, 20}, {30}});
  CHECK(sparse.vertex_ids() == std::vector<int>{10, 20, 30});
  CHECK(!sparse.is_connected());

  CHECK(SimplicialComplex{}.dimension() == -1);
  CHECK(SimplicialComplex{}.is_connected());
}

TEST_CASE("links collect the residual faces") {
  SimplicialComplex sc({{0, 1, 2}, {0, 1, 3}, {1, 4}});
  auto lk1 = sc.link({1});
  CHECK(lk1.has_simplex({0, 2}));
  CHECK(lk1.has_simplex({0, 3}));
  CHECK(lk1.has_simplex({4}));
  CHECK(!lk1.has_simplex({2, 3}));
  auto lk01 = sc.link({0, 1});
  CHECK(lk01.num_vertices() == 2);
  CHECK(lk01.dimension() == 0);
  // Links inherit types.
  SimplicialComplex typed({{0, 1}}, {{0, "a"}, {1, "b"}});
  CHECK(typed.link({0}).type_of(1) == "b");
}

TEST_CASE("one skeleton reindexes vertices") {
  SimplicialComplex sc({{5, 7, 9}});
  auto g = sc.one_skeleton();
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("retyped renames tags and keeps unmapped ones") {
  SimplicialComplex sc({{0, 1}}, {{0, "x"}, {1, "y"}});
  auto r = sc.retyped({{"x", "left"}});
  CHECK(r.type_of(0) == "left");
  CHECK(r.type_of(1) == "y");
}

TEST_CASE("joins multiply simplices") {
  auto j = join(SimplicialComplex({{0}, {1}}), SimplicialComplex({{0}, {1}}));
  // Two-point joined with two-point is a 4-cycle.
  CHECK(isomorphic(j, cycle_complex(4)));

  auto square = join(SimplicialComplex({{0, 1}}), SimplicialComplex({{0, 1}}));
  CHECK(square.dimension() == 3);
  CHECK(square.num_vertices() == 4);
  CHECK(square.has_simplex({0, 1, 2, 3}));

  // Types carry through the id shift.
  SimplicialComplex a({{0}}, {{0, "a"}});
  SimplicialComplex b({{0}}, {{0, "b"}});
  auto ab = join(a, b);
  CHECK(ab.type_of(0) == "a");
  CHECK(ab.type_of(1) == "b");
}

TEST_CASE("flag detection reports empty cliques") {
  auto tri = hollow_triangle();
  auto r = is_flag(tri);
  CHECK(!r.flag);
  CHECK(r.witness == std::vector<int>{0, 1, 2});

  SimplicialComplex filled({{0, 1, 2}});
  CHECK(is_flag(filled).flag);
  CHECK(is_flag(filled).witness.empty());
  CHECK(is_flag(cycle_complex(4)).flag);
  CHECK(is_flag(complete_bipartite_complex(3, 3)).flag);
}

TEST_CASE("cones are recognized by their apex") {
  SimplicialComplex c({{0, 1, 2}, {0, 3}});
  CHECK(is_cone_with_apex(c, 0));
  CHECK(!is_cone_with_apex(c, 1));
  CHECK(!is_cone_with_apex(hollow_triangle(), 0));
}

TEST_CASE("posets expose order, payloads, and ranks") {
  // 0 < 1 < 3, 0 < 2 < 3, given non-transitively.
  Poset p(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"bot", "l", "r", "top"},
          {0, 1, 1, 2});
  CHECK(p.less(0, 3));
  CHECK(!p.less(1, 2));
  CHECK(!p.less(3, 0));
  CHECK(p.leq(2, 2));
  CHECK(p.payload(1) == "l");
  CHECK(p.rank(3) == 2);
  CHECK(p.maximal_elements() == std::vector<int>{3});

  auto prod = poset_product(p, p);
  CHECK(prod.size() == 16);
  CHECK(prod.less(0, 15));
  CHECK(!prod.less(1 * 4 + 0, 0 * 4 + 3));

  auto coned = cone(p, "hat");
  CHECK(coned.size() == 5);
  CHECK(coned.less(3, 4));
  CHECK(coned.payload(4) == "hat");
  CHECK(coned.maximal_elements() == std::vector<int>{4});
}

TEST_CASE("derived complexes are flag complexes of chains") {
  Poset p(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"bot", "l", "r", "top"});
  auto d = derived_complex(p);
  CHECK(d.num_vertices() == 4);
  CHECK(d.has_simplex({0, 1, 3}));
  CHECK(d.has_simplex({0, 2, 3}));
  CHECK(!d.has_simplex({1, 2}));
  CHECK(d.type_of(0) == "bot");
  CHECK(is_flag(d).flag);
}

TEST_CASE("barycentric subdivision of a triangle boundary is a hexagon") {
  auto b = bary_subdivision(hollow_triangle());
  CHECK(isomorphic(b, cycle_complex(6)));
  // Cell dimensions become vertex types.
  int zeros = 0, ones = 0;
  for (int v : b.vertex_ids()) {
    if (b.type_of(v) == "0") ++zeros;
    if (b.type_of(v) == "1") ++ones;
  }
  CHECK(zeros == 3);
  CHECK(ones == 3);
  CHECK(is_flag(b).flag);

  auto bt = bary_subdivision(SimplicialComplex({{0, 1, 2}}));
  CHECK(bt.num_vertices() == 7);
  CHECK(bt.euler_characteristic() == 1);
}

TEST_CASE("girth scans short cycles") {
  CHECK(graph_girth(cycle_graph(5)) == 5);
  CHECK(graph_girth(complete_bipartite_graph(3, 3)) == 4);
  CHECK(graph_girth(moebius_kantor_graph()) == 6);
  Graph tree(4, {{0, 1}, {0, 2}, {2, 3}});
  CHECK(!graph_girth(tree).has_value());
  CHECK(!graph_girth(Graph(1, {})).has_value());
}

TEST_CASE("complete bipartite graphs are recognized with their sides") {
  CHECK(is_complete_bipartite(complete_bipartite_graph(3, 3)) ==
        std::pair{3, 3});
  CHECK(is_complete_bipartite(complete_bipartite_graph(4, 2)) ==
        std::pair{2, 4});
  CHECK(is_complete_bipartite(cycle_graph(4)) == std::pair{2, 2});
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(is_complete_bipartite(p3) == std::pair{1, 2});
  CHECK(!is_complete_bipartite(cycle_graph(6)).has_value());
  CHECK(!is_complete_bipartite(cycle_graph(5)).has_value());
  Graph disconnected(4, {{0, 1}, {2, 3}});
  CHECK(!is_complete_bipartite(disconnected).has_value());
}

TEST_CASE("isomorphism respects structure and optionally types") {
  CHECK(isomorphic(cycle_complex(6), bary_subdivision(hollow_triangle())));
  CHECK(!isomorphic(cycle_complex(6), cycle_complex(5)));
  CHECK(!isomorphic(complete_bipartite_complex(3, 3), cycle_complex(6)));

  SimplicialComplex a({{0, 1}}, {{0, "x"}, {1, "y"}});
  SimplicialComplex b({{0, 1}}, {{0, "y"}, {1, "x"}});
  SimplicialComplex c({{0, 1}}, {{0, "x"}, {1, "x"}});
  CHECK(isomorphic(a, b));
  CHECK(isomorphic(a, b, true));
  CHECK(!isomorphic(a, c, true));

  CHECK(isomorphic(cycle_graph(4), complete_bipartite_graph(2, 2)));
  CHECK(!isomorphic(cycle_graph(4), cycle_graph(5)));
}

TEST_CASE("the moebius kantor graph is cubic with girth six") {
  auto g = moebius_kantor_graph();
  CHECK(g.size() == 16);
  CHECK(g.edges().size() == 24);
  for (const auto& row : g.adjacency()) CHECK(row.size() == 3);
  CHECK(graph_girth(g) == 6);
  CHECK(!is_complete_bipartite(g).has_value());
}

TEST_CASE("derived and joined flag complexes stay flag") {
  // Property spot checks on small instances.
  for (int n : {3, 4, 5}) {
    auto d = derived_complex(
        Poset(n, [n] {
          std::vector<std::pair<int, int>> rel;
          for (int i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
          return rel;
        }()));
    CHECK(is_flag(d).flag);
  }
  auto j = join(cycle_complex(4), complete_bipartite_complex(2, 2));
  CHECK(is_flag(j).flag);
  CHECK(is_flag(bary_subdivision(join(
                    hollow_triangle(),
                    SimplicialComplex(std::vector<std::vector<int>>{{0}}))))
            .flag);
}

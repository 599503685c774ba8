#include <doctest.h>

#include <shepkit/davis.hpp>

#include <string>
#include <vector>

using namespace shepkit;

namespace {

bool all_pass(const Report& r) { return r.pass(); }

const CheckEntry* find_entry(const Report& r, const std::string& name) {
  for (const auto& e : r.checks)
    if (e.name == name) return &e;
  return nullptr;
}

ExtendedCoxeterDiagram pentagon(int p) {
  std::vector<Vertex> vs;
  for (int i = 0; i < 5; ++i)
    vs.push_back({"v" + std::to_string(i), Label::finite(p)});
  std::vector<ExtendedCoxeterDiagram::Edge> es;
  for (int i = 0; i < 5; ++i)
    es.emplace_back(i, (i + 1) % 5, Label::infinity());
  return ExtendedCoxeterDiagram(vs, es);
}

}  // namespace

TEST_CASE("a single vertex yields the interval complex") {
  auto k = build_k(parse_diagram("4"));
  CHECK(k.sfs == std::vector<uint32_t>{0, 1});
  CHECK(k.cells.size() == 3);
  CHECK(k.index_of(1) == 1);
  CHECK(k.index_of(2) == -1);
  CHECK(k.derived.num_vertices() == 2);
  CHECK(k.derived.dimension() == 1);
}

TEST_CASE("spherical subsets of a finite diagram fill the power set") {
  auto k = build_k(parse_diagram("3[3]3"));
  CHECK(k.sfs.size() == 4);
  CHECK(k.cells.size() == 9);
  CHECK(k.derived.euler_characteristic() == 1);
  CHECK(is_cone_with_apex(k.derived, k.index_of(0)));
  CHECK(k.derived.type_of(k.index_of(0)) == "{}");
  CHECK(k.derived.type_of(k.index_of(3)) == "{0,1}");
}

TEST_CASE("k drops subsets that are only coxeter-spherical") {
  auto k = build_k(parse_diagram("inf[4]2"));
  // {} and {1} survive; {0} has an infinite label, {0,1} follows.
  CHECK(k.sfs == std::vector<uint32_t>{0, 2});
  auto k66 = build_k(parse_diagram("6[3]6"));
  // The full pair is Coxeter-finite but not Shephard-finite.
  CHECK(k66.sfs == std::vector<uint32_t>{0, 1, 2});
  CHECK(k66.index_of(3) == -1);
}

TEST_CASE("k is always a connected cone over the empty subset") {
  for (const char* text : {"3[inf]3", "2[4]3[3]3", "inf[4]2[3]2"}) {
    auto k = build_k(parse_diagram(text));
    CHECK(k.derived.is_connected());
    CHECK(k.derived.euler_characteristic() == 1);
    CHECK(k.index_of(0) == 0);
    CHECK(is_cone_with_apex(k.derived, 0));
  }
  auto kp = build_k(pentagon(3));
  CHECK(kp.derived.is_connected());
  CHECK(kp.derived.euler_characteristic() == 1);
  // Pentagon: empty, 5 singletons, 5 non-adjacent pairs (absent edges
  // commute, so those pairs generate finite products).
  CHECK(kp.sfs.size() == 11);
  CHECK(kp.cells.size() == 1 + 5 + 5 + 5 + 10 + 5);
}

TEST_CASE("the sfs nerve of the pentagon is the complement pentagon") {
  auto n = sfs_nerve(pentagon(3));
  CHECK(n.num_vertices() == 5);
  CHECK(n.simplices_of_dim(1).size() == 5);
  CHECK(n.simplices_of_dim(2).empty());
  CHECK(graph_girth(n.one_skeleton()) == 5);
  auto square = sfs_nerve(parse_diagram("3[3]3"));
  CHECK(square.has_simplex({0, 1}));
}

TEST_CASE("upper links subdivide nerve links") {
  // Pentagon, T = one vertex: strictly above {v} sit the two pairs joining
  // it to its non-neighbours, which do not touch each other.
  auto up = upper_link(pentagon(3), GeneratorSubset{0});
  CHECK(up.num_vertices() == 2);
  CHECK(up.simplices_of_dim(1).empty());

  auto d = parse_diagram("3[3]3[3]3");
  auto u0 = upper_link(d, GeneratorSubset{0});
  // Strictly above {0}: {0,1}, {0,2}, {0,1,2}. Chains of length two pair
  // the triple with either pair.
  CHECK(u0.num_vertices() == 3);
  CHECK(u0.simplices_of_dim(1).size() == 2);
  auto ue = upper_link(d, GeneratorSubset{});
  CHECK(ue.num_vertices() == 7);
  CHECK(is_flag(ue).flag);
}

TEST_CASE("local developments join both sides of the center") {
  auto d = parse_diagram("3[inf]3");
  auto dev = local_development(d, GeneratorSubset{0});
  CHECK(dev.center == GeneratorSubset{0});
  // Nothing spherical strictly above {0}.
  CHECK(dev.upper.num_vertices() == 0);
  // The subdiagram on {0} is one generator of order 3.
  CHECK(dev.lower.num_vertices() == 3);
  for (int v : dev.lower.vertex_ids()) CHECK(dev.lower.type_of(v) == "0");
  CHECK(dev.link.num_vertices() == 3);

  auto full = local_development(parse_diagram("3[3]3[3]3"),
                                GeneratorSubset{0, 1, 2});
  CHECK(full.upper.num_vertices() == 0);
  // All proper faces of the Hessian polyhedron.
  CHECK(full.lower.num_vertices() == 27 + 72 + 27);

  auto empty_center = local_development(d, GeneratorSubset{});
  CHECK(empty_center.lower.num_vertices() == 0);
  CHECK(isomorphic(empty_center.link, empty_center.upper, true));
}

TEST_CASE("cubical certification accepts the table families") {
  CHECK(all_pass(certify_cubical(parse_diagram("3[3]3[3]3"))));
  CHECK(all_pass(certify_cubical(parse_diagram("3[inf]3"))));
  CHECK(all_pass(certify_cubical(parse_diagram("4[inf]2[4]3"))));
  CHECK(all_pass(certify_cubical(pentagon(3))));
}

TEST_CASE("cubical certification rejects euclidean triangles") {
  auto tri = parse_diagram(
      "vertex a 2\n"
      "vertex b 2\n"
      "vertex c 2\n"
      "edge a b 3\n"
      "edge b c 3\n"
      "edge a c 3\n");
  auto rep = certify_cubical(tri);
  CHECK(!all_pass(rep));
  auto* fc = find_entry(rep, "fc");
  REQUIRE(fc != nullptr);
  CHECK(!fc->pass);
  CHECK(fc->detail.find("{0,1,2}") != std::string::npos);
}

TEST_CASE("cubical certification rejects sf/sfs mismatches") {
  auto rep = certify_cubical(parse_diagram("6[3]6"));
  CHECK(!all_pass(rep));
  auto* sf = find_entry(rep, "sf-equals-sfs");
  REQUIRE(sf != nullptr);
  CHECK(!sf->pass);
  CHECK(sf->detail.find("{0,1}") != std::string::npos);
}

TEST_CASE("moussong certification gates on a4(3) subdiagrams") {
  CHECK(all_pass(certify_moussong(parse_diagram("3[3]3[3]3"))));
  CHECK(all_pass(certify_moussong(parse_diagram("2[4]3[3]3[4]2"))));
  auto rep = certify_moussong(parse_diagram("3[3]3[3]3[3]3"));
  CHECK(!all_pass(rep));
  auto* a4 = find_entry(rep, "no-a4-3-subdiagram");
  REQUIRE(a4 != nullptr);
  CHECK(!a4->pass);
  CHECK(a4->detail.find("{0,1,2,3}") != std::string::npos);
}

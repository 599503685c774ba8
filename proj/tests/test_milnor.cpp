#include <doctest.h>

#include <shepkit/milnor.hpp>

#include <string>
#include <vector>

using namespace shepkit;

namespace {

bool all_pass(const Report& r) { return r.pass(); }

MilnorComplex theta(const std::string& text) {
  return milnor_complex(parse_diagram(text));
}

}  // namespace

TEST_CASE("the complex of a product of two points is a square") {
  auto m = theta("3[2]3");
  CHECK(!m.diagram.has_edge(0, 1));
  CHECK(isomorphic(m.complex, complete_bipartite_complex(3, 3)));
  CHECK(isomorphic(theta("2[2]2").complex, cycle_complex(4)));
}

TEST_CASE("rank-two complexes subdivide the polytope boundary") {
  // p[4]2 gives the barycentric subdivision of K_{p,p}.
  for (int p : {2, 3, 4}) {
    auto d = "[4]2";
    auto m = theta(std::to_string(p) + d);
    CHECK(isomorphic(m.complex,
                     bary_subdivision(complete_bipartite_complex(p, p))));
  }
  // 2[4]2 is also the 8-cycle directly.
  CHECK(isomorphic(theta("2[4]2").complex, cycle_complex(8)));
}

TEST_CASE("the 3[3]3 skeleton is the moebius kantor graph") {
  auto m = theta("3[3]3");
  CHECK(m.complex.num_vertices() == 16);
  CHECK(isomorphic(m.complex.one_skeleton(), moebius_kantor_graph()));
}

TEST_CASE("vertex types name the omitted generator") {
  auto m = theta("3[3]3");
  int zeros = 0, ones = 0;
  for (int v : m.complex.vertex_ids()) {
    if (m.complex.type_of(v) == "0") ++zeros;
    if (m.complex.type_of(v) == "1") ++ones;
  }
  CHECK(zeros == 8);
  CHECK(ones == 8);
  REQUIRE(m.source.has_value());
  CHECK(m.source->flag_count() == 24);
}

TEST_CASE("girth doubles the edge label") {
  CHECK(theta_girth(parse_diagram("3[3]3")) == 6);
  CHECK(theta_girth(parse_diagram("3[4]2")) == 8);
  CHECK(theta_girth(parse_diagram("2[5]2")) == 10);
  CHECK(theta_girth(parse_diagram("4[6]2")) == 12);
  CHECK(theta_girth(parse_diagram("3[2]3")) == 4);
  CHECK(!theta_girth(parse_diagram("4")).has_value());
}

TEST_CASE("links realize subdiagram complexes") {
  auto m = theta("3[3]3[3]3");
  CHECK(m.complex.dimension() == 2);
  auto rep = check_link_theorem(m);
  CHECK(!rep.checks.empty());
  CHECK(all_pass(rep));

  // One concrete instance: the link of a type-0 vertex is the complex of
  // the subdiagram on generators 1 and 2.
  int v0 = -1;
  for (int v : m.complex.vertex_ids())
    if (m.complex.type_of(v) == "0") {
      v0 = v;
      break;
    }
  REQUIRE(v0 >= 0);
  auto lk = m.complex.link({v0});
  auto sub = theta("3[3]3");
  CHECK(isomorphic(lk, sub.complex));
}

TEST_CASE("joins split over diagram components") {
  auto m = theta("3[2]3[2]3");
  CHECK(m.complex.num_vertices() == 9);
  CHECK(isomorphic(m.complex, join(join(SimplicialComplex({{0}, {1}, {2}}),
                                        SimplicialComplex({{0}, {1}, {2}})),
                                   SimplicialComplex({{0}, {1}, {2}}))));
  CHECK(all_pass(check_link_theorem(m)));
}

TEST_CASE("bn complexes match their alternative constructions") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    auto rep = check_bn_structure(n, p);
    CHECK(!rep.checks.empty());
    CHECK(all_pass(rep));
  }
}

TEST_CASE("b3 splits down the shephard line") {
  auto rep = check_b3_splitting();
  CHECK(!rep.checks.empty());
  CHECK(all_pass(rep));
}

TEST_CASE("branched coxeter diagrams build through the flag nerve") {
  auto d4 = parse_diagram(
      "vertex c 2\n"
      "vertex x 2\n"
      "vertex y 2\n"
      "vertex z 2\n"
      "edge c x 3\n"
      "edge c y 3\n"
      "edge c z 3\n");
  auto m = milnor_complex(d4);
  CHECK(!m.source.has_value());
  CHECK(m.complex.dimension() == 3);
  CHECK(m.complex.is_connected());
  // Vertices of a given type are cosets of the maximal parabolic omitting
  // that generator: dropping the center leaves three commuting involutions.
  int type_c = 0;
  for (int v : m.complex.vertex_ids())
    if (m.complex.type_of(v) == "0") ++type_c;
  CHECK(type_c == 192 / 8);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shepkit/diagram.hpp"
#include "shepkit/forms.hpp"

using namespace shepkit;
using std::numbers::pi;

namespace {

double quad(const SymmetricRealMatrix& h, const std::vector<double>& x) {
  double v = 0;
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j) v += x[i] * h.at(i, j) * x[j];
  return v;
}

ExtendedCoxeterDiagram d4_star(int p) {
  std::vector<Vertex> vs;
  for (int i = 0; i < 4; ++i)
    vs.push_back({"v" + std::to_string(i), Label::finite(p)});
  std::vector<ExtendedCoxeterDiagram::Edge> es;
  for (int i = 1; i < 4; ++i) es.emplace_back(0, i, Label::finite(3));
  return {vs, es};
}

}  // namespace

TEST_CASE("symmetric matrix storage") {
  SymmetricRealMatrix m(3);
  CHECK(m.size() == 3);
  m.set(0, 2, -0.5);
  CHECK(m.at(0, 2) == -0.5);
  CHECK(m.at(2, 0) == -0.5);
}

TEST_CASE("cosine matrix") {
  auto c = cosine_matrix(parse_diagram("3[4]2[3]2"));
  CHECK(c.at(0, 0) == doctest::Approx(1.0));
  CHECK(c.at(0, 1) == doctest::Approx(-std::cos(pi / 4)));
  CHECK(c.at(1, 2) == doctest::Approx(-0.5));
  CHECK(c.at(0, 2) == doctest::Approx(0.0));
  auto ci = cosine_matrix(parse_diagram("2[inf]2"));
  CHECK(ci.at(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("hermitian matrix entries") {
  SUBCASE("equal labels, odd edge") {
    auto h = hermitian_matrix(parse_diagram("3[3]3"));
    CHECK(h.at(0, 0) == doctest::Approx(1.0));
    CHECK(h.at(0, 1) == doctest::Approx(-1.0 / std::sqrt(3.0)));
  }
  SUBCASE("p[4]2 reduces to the Coxeter cosine") {
    for (int p : {2, 3, 4, 7}) {
      auto d = parse_diagram(std::to_string(p) + "[4]2");
      auto h = hermitian_matrix(d);
      CHECK(h.at(0, 1) == doctest::Approx(-std::cos(pi / 4)));
    }
  }
  SUBCASE("coxeter diagrams give the cosine matrix") {
    auto d = parse_diagram("2[3]2[5]2");
    auto h = hermitian_matrix(d);
    auto c = cosine_matrix(d);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(h.at(i, j) == doctest::Approx(c.at(i, j)));
  }
  SUBCASE("infinite labels are rejected") {
    CHECK_THROWS_AS(hermitian_matrix(parse_diagram("inf[4]2")),
                    InfiniteLabelError);
    CHECK_THROWS_AS(hermitian_matrix(parse_diagram("3[inf]3")),
                    InfiniteLabelError);
  }
}

TEST_CASE("positive definiteness") {
  SUBCASE("finite types are positive definite") {
    for (const char* s : {"3[3]3", "3[3]3[3]3", "2[4]3[3]3", "4[4]2[3]2",
                          "3[3]3[3]3[3]3", "2[3]2[3]2"}) {
      auto v = is_positive_definite(hermitian_matrix(parse_diagram(s)));
      CHECK_MESSAGE(v.positive_definite, s);
      CHECK(v.witness.empty());
      for (double m : v.leading_minors) CHECK(m > 0);
    }
  }
  SUBCASE("a failing form yields a checkable witness") {
    auto h = hermitian_matrix(parse_diagram("3[3]3[3]3[3]3[3]3"));
    auto v = is_positive_definite(h);
    REQUIRE(!v.positive_definite);
    REQUIRE(v.witness.size() == 5);
    CHECK(v.leading_minors.back() <= 1e-9);
    CHECK(v.witness_value <= 1e-9);
    CHECK(quad(h, v.witness) == doctest::Approx(v.witness_value).epsilon(1e-9));
  }
  SUBCASE("minors stop at the first failure") {
    SymmetricRealMatrix m(3);
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    m.set(2, 2, 1);
    m.set(0, 1, 2);
    auto v = is_positive_definite(m);
    REQUIRE(!v.positive_definite);
    CHECK(v.leading_minors.size() == 2);
    CHECK(v.leading_minors.back() == doctest::Approx(-3.0));
    CHECK(quad(m, v.witness) <= 1e-9);
  }
}

TEST_CASE("determinant agrees with minors") {
  auto h = hermitian_matrix(parse_diagram("2[3]2"));
  CHECK(determinant(h) == doctest::Approx(0.75));
  auto g = hermitian_matrix(parse_diagram("3[3]3[3]3"));
  auto v = is_positive_definite(g);
  REQUIRE(v.positive_definite);
  CHECK(determinant(g) == doctest::Approx(v.leading_minors.back()));
}

TEST_CASE("d4(p) determinant follows the closed form") {
  for (int p = 3; p <= 8; ++p) {
    double s = std::sin(pi / p);
    double expected = 1.0 - 3.0 / (4.0 * s * s);
    CHECK(determinant(hermitian_matrix(d4_star(p))) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(std::abs(determinant(hermitian_matrix(d4_star(3)))) < 1e-9);
  CHECK(determinant(hermitian_matrix(d4_star(2))) > 0);
}

TEST_CASE("alpha versus c audit") {
  CHECK(audit_alpha_leq_c(Label::finite(3), Label::finite(3),
                          Label::finite(3)));
  CHECK(audit_alpha_leq_c(Label::finite(5), Label::finite(4),
                          Label::finite(2)));
  CHECK(audit_alpha_leq_c(Label::finite(12), Label::finite(24),
                          Label::finite(7)));
  CHECK_THROWS_AS(audit_alpha_leq_c(Label::finite(3), Label::finite(3),
                                    Label::finite(4)),
                  ValidationError);
  CHECK_THROWS_AS(audit_alpha_leq_c(Label::finite(1), Label::finite(4),
                                    Label::finite(2)),
                  ValidationError);
  CHECK_THROWS_AS(audit_alpha_leq_c(Label::infinity(), Label::finite(4),
                                    Label::finite(2)),
                  InfiniteLabelError);
}

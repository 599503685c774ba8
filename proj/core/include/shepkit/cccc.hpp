#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shepkit/complexes.hpp"
#include "shepkit/report.hpp"

namespace shepkit {

// A 2-complex whose vertices carry the types "a", "b", "c", every simplex
// lies in a chamber, and every chamber sees all three types. Chambers model
// the spherical triangle with angles pi/3 at a, pi/2 at b, pi/3 at c.
struct MarkedA3Complex {
  SimplicialComplex complex;

  // Letter of an edge: the one type absent from its endpoints.
  std::string edge_letter(int u, int v) const;
};

// Thrown by mark_a3; carries every violation, each naming a simplex.
class MarkingError : public std::runtime_error {
 public:
  explicit MarkingError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

MarkedA3Complex mark_a3(const SimplicialComplex& sc);

// Side lengths (radians) of the chamber triangle; each field is the side
// opposite the vertex of that letter (len_b joins a to c, and so on).
struct A3EdgeLengths {
  double len_a;
  double len_b;
  double len_c;
};

// Derived from the chamber angles by the spherical law of cosines.
A3EdgeLengths edge_lengths();
// The same two values with the roles exchanged (len_b <-> the leg length).
A3EdgeLengths swapped_edge_lengths();

// A combinatorial loop shape: j edges joining a to c and k two-edge detours
// through b, with its total length under some A3EdgeLengths.
struct LoopClass {
  int j = 0;
  int k = 0;
  double length = 0;
};

struct LoopCensus {
  std::vector<LoopClass> admitted;  // total length < 2*pi
  std::vector<LoopClass> boundary;  // total length = 2*pi within tol
};

// Enumerates closed loop shapes (j even, not the empty loop, no bigons:
// j = 0 needs k >= 3 and k = 0 needs j >= 4) and buckets them by length.
LoopCensus loop_audit(const A3EdgeLengths& lengths, double tol = 1e-9);

struct LinkGirthResult {
  int vertex = -1;
  std::string type;
  std::optional<int> girth;  // nullopt: the link is a forest
  bool pass = false;
};

struct BipartiteResult {
  int vertex = -1;
  std::optional<std::pair<int, int>> sides;  // nullopt: not complete bipartite
  bool pass = false;
};

struct PatternResult {
  std::string pattern;  // acac, bababa, bcbcbc, bcac, baca
  long long cycles = 0;
  long long filled = 0;
  bool unique_fillers = true;
  std::vector<int> witness;  // an unfilled cycle, in cyclic order
  bool pass = false;
};

struct CCCCReport {
  std::vector<LinkGirthResult> cond1;  // a/c links have girth >= 6
  std::vector<BipartiteResult> cond2;  // b links are K_{m,n}, m,n >= 2
  std::vector<PatternResult> cond3;    // short loops are filled
  LoopCensus loop_audit;
  bool pass() const;
};

CCCCReport check_cccc(const MarkedA3Complex& m);

// Certifies the Milnor fiber complex of the Hessian group: marks both the
// tabulated and the coset-built models, checks them isomorphic, runs the
// full CCCC check on each, and cross-references the loop-filling counts
// against the face-intersection sweeps of the polytope verification.
Report certify_hessian_cat1(bool include_coset_model = true);

}  // namespace shepkit

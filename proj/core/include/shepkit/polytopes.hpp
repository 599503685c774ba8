#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shepkit/complexes.hpp"
#include "shepkit/diagram.hpp"
#include "shepkit/report.hpp"

namespace shepkit {

// Ranked face lattice of a regular complex polytope. Proper ranks
// 0..rank()-1 are stored explicitly; the empty face and the top face are
// implicit bounds. The order is the transitive closure of the cover
// relation between consecutive ranks.
class FacePoset {
public:
  // labels[r] names the rank-r faces (unique within a rank); covers[r]
  // holds the pairs (i, j) with face i of rank r below face j of rank r+1.
  FacePoset(std::vector<std::vector<std::string>> labels,
            std::vector<std::vector<std::pair<int, int>>> covers);

  int rank() const { return static_cast<int>(labels_.size()); }
  int count(int r) const;
  long long total_proper() const;
  const std::string& label(int r, int i) const;
  const std::vector<std::pair<int, int>>& covers(int r) const;
  bool incident(int r1, int i1, int r2, int i2) const;  // strict, r1 < r2

  // The proper faces as a Poset, indexed rank-major. Payloads default to
  // the decimal rank; rank_payloads overrides them per rank.
  Poset proper_poset(const std::vector<std::string>& rank_payloads = {}) const;

  // Number of maximal chains of proper faces.
  unsigned long long flag_count() const;

  // Structural spot-checks: nonempty ranks, saturated chains, and the
  // medial-figure axiom (every rank-(r,r+2) incidence, bounds included,
  // has at least two intermediate faces).
  Report validate() const;

private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::pair<int, int>>> covers_;
  // reach_[{r1,r2}][i][j]: rank-r1 face i below rank-r2 face j.
  std::map<std::pair<int, int>, std::vector<std::vector<bool>>> reach_;
};

// Faces of rank i = cosets of the parabolic omitting the i-th path vertex
// (left end of the path = rank 0); incidence = nonempty coset intersection,
// decided in the regular representation. Group order capped by max_order.
FacePoset polytope_from_group(const ExtendedCoxeterDiagram& d,
                              long long max_order = 200000);

// Product polytope: faces are pairs of nonempty faces plus a single empty
// face; order componentwise; ranks add.
FacePoset product(const FacePoset& p, const FacePoset& q);

// The generalized cube: the n-fold product of the rank-1 polytope with p
// vertices.
FacePoset generalized_cube(int n, int p);

// Order reversed, ranks reflected.
FacePoset dual(const FacePoset& p);

// Proper faces (rank-major ids) joined along the cover relation.
Graph incidence_graph(const FacePoset& p);

// Rank-preserving order isomorphism, decided on the rank-typed cover graph.
bool poset_isomorphic(const FacePoset& a, const FacePoset& b);

// The 27 vertex symbols, generator permutations, computed edges, and
// tabulated faces of the Hessian polyhedron.
struct HessianData {
  std::vector<std::string> symbols;         // sorted
  std::vector<int> perm_a, perm_b, perm_c;  // images by symbol index
  std::vector<std::array<int, 3>> edges;    // 72 sorted triples, sorted
  std::vector<std::array<int, 8>> faces;    // 27 rows in table order, each sorted

  int symbol_index(const std::string& s) const;
};

std::pair<HessianData, FacePoset> hessian();

// Exhaustive verification of the tabulated Hessian: counts, permutation
// invariance, orbit structure, the empty-triangle and face-intersection
// propositions, incidence degrees, flag transitivity, self-duality, and
// (optionally) isomorphism with the coset-built polytope.
Report verify_hessian(bool include_coset_model = true);

}  // namespace shepkit

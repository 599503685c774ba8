#pragma once

#include <optional>

#include "shepkit/complexes.hpp"
#include "shepkit/diagram.hpp"
#include "shepkit/polytopes.hpp"
#include "shepkit/report.hpp"

namespace shepkit {

// The extended Coxeter complex of a finite diagram: the derived complex of
// the polytope's proper face poset for path components, a coset flag nerve
// for branched Coxeter components, and the join across components. Each
// vertex is typed by the decimal id of the diagram vertex its rank omits.
struct MilnorComplex {
  ExtendedCoxeterDiagram diagram;
  SimplicialComplex complex;
  // The face poset behind the complex, when the diagram is one path.
  std::optional<FacePoset> source;
};

MilnorComplex milnor_complex(const ExtendedCoxeterDiagram& d,
                             long long max_order = 200000);

// For one representative simplex per type, the link must be the Milnor
// complex of the subdiagram on the generators the type omits.
Report check_link_theorem(const MilnorComplex& m, long long max_order = 200000);

// Three routes to the same complex for p[4]2[3]2...: the group construction,
// the subdivided n-fold join of p points, and the generalized-cube product.
Report check_bn_structure(int n, int p);

// Order and chamber-count doubling from 2[4]3[3]3 down to 3[3]3[3]3.
Report check_b3_splitting();

// Girth of the 1-skeleton; nullopt when it is a forest.
std::optional<int> theta_girth(const ExtendedCoxeterDiagram& d,
                               long long max_order = 200000);

}  // namespace shepkit

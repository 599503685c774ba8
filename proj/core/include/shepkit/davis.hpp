#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shepkit/complexes.hpp"
#include "shepkit/diagram.hpp"
#include "shepkit/report.hpp"

namespace shepkit {

// The cubical fundamental domain. Cubes are the pairs T1 ⊆ T2 of spherical
// subsets (dimension |T2| - |T1|); the vertex v_T is the pair (T, T). The
// derived member is the simplicial chain complex of the subset poset, with
// each vertex carrying its subset as the type tag.
struct KComplex {
  ExtendedCoxeterDiagram diagram;
  std::vector<uint32_t> sfs;  // member bitmasks, ascending
  std::vector<std::pair<uint32_t, uint32_t>> cells;
  SimplicialComplex derived;

  // Position of a member in sfs, -1 when absent.
  int index_of(uint32_t bits) const;
};

KComplex build_k(const ExtendedCoxeterDiagram& d);

// Nerve of the nonempty spherical subsets on the generator vertices; each
// vertex is typed by its decimal id.
SimplicialComplex sfs_nerve(const ExtendedCoxeterDiagram& d);

// The chain complex of the subsets strictly above T, typed by subset. Always
// the barycentric subdivision of lk(T, sfs_nerve(d)); the identification is
// machine-checked on every call.
SimplicialComplex upper_link(const ExtendedCoxeterDiagram& d,
                             const GeneratorSubset& T);

struct LocalDevelopment {
  GeneratorSubset center;
  SimplicialComplex upper;  // chains above the center
  SimplicialComplex lower;  // Milnor complex of the center's subdiagram
  SimplicialComplex link;   // their join
};

LocalDevelopment local_development(const ExtendedCoxeterDiagram& d,
                                   const GeneratorSubset& T,
                                   long long max_order = 200000);

// Cube-complex certificate: spherical sets agree with their Coxeter shadows,
// the flag-like condition on full subdiagrams holds, and every local link
// (both sides) is flag.
Report certify_cubical(const ExtendedCoxeterDiagram& d,
                       long long max_order = 200000);

// Piecewise-spherical certificate hypotheses: spherical sets agree and no
// A4(3) subdiagram occurs.
Report certify_moussong(const ExtendedCoxeterDiagram& d);

}  // namespace shepkit

#pragma once

#include "shepkit/polytopes.hpp"

namespace shepkit::detail {

// Symbols, generator permutations, collinearity-derived edges, and the
// tabulated faces. Throws std::logic_error on any internal inconsistency.
HessianData build_hessian_data();

}  // namespace shepkit::detail

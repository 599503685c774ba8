#pragma once

#include "shepkit/classify.hpp"
#include "shepkit/diagram.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shepkit {

// Words are flat symbol arrays: symbol 2g is generator g, symbol 2g+1 its
// inverse.
struct Presentation {
  int ngens = 0;
  std::vector<std::vector<int>> relators;
};

// Generator order relators g_i^{p_i} (finite p only) and braid relators
// prod(s_i,s_j;m) prod(s_j,s_i;m)^{-1} (finite m only; m = 2 gives the
// commutator).
Presentation presentation(const ExtendedCoxeterDiagram& d);

class CosetLimitExceeded : public std::runtime_error {
public:
  explicit CosetLimitExceeded(long long cap)
      : std::runtime_error("coset enumeration exceeded " +
                           std::to_string(cap) + " cosets"),
        cap_(cap) {}
  long long cap() const { return cap_; }

private:
  long long cap_;
};

// Complete right-coset table: row 0 is the subgroup, entry (r, s) the image
// of coset r under symbol s. Standardized by breadth-first renumbering, so
// equal group/subgroup data yields an identical table.
class CosetTable {
public:
  CosetTable(int ngens, std::vector<int> subgroup_generators,
             std::vector<int32_t> table);

  int ngens() const { return ngens_; }
  int size() const {
    if (ngens_ == 0) return 1;
    return static_cast<int>(table_.size()) / (2 * ngens_);
  }
  int at(int coset, int symbol) const {
    return table_[size_t(coset) * 2 * ngens_ + symbol];
  }
  int act(int coset, int gen) const { return at(coset, 2 * gen); }
  const std::vector<int>& subgroup_generators() const { return subgroup_gens_; }

private:
  int ngens_;
  std::vector<int> subgroup_gens_;
  std::vector<int32_t> table_;
};

CosetTable coset_enumerate(const Presentation& p, const GeneratorSubset& t,
                           long long max_cosets = 2'000'000);

class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<std::vector<int>> generators);

  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }
  uint64_t order() const;
  // All elements as image vectors, in breadth-first order from the identity.
  const std::vector<std::vector<int>>& elements() const;

private:
  int degree_;
  std::vector<std::vector<int>> gens_;
  mutable std::vector<std::vector<int>> elements_;
};

// The action of the generators on the cosets of a table.
PermutationGroup parabolic_action(const CosetTable& t);

// A bijection f with f(x . g) = f(x) . g for transitive actions given as
// generator image lists; tries each candidate image of point 0 (all points
// when none are given).
std::optional<std::vector<int>> action_isomorphism(
    const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
    const std::vector<int>& base_candidates = {});

// classify + per-component regular enumeration, orders multiplied; nullopt
// when some component is infinite. The enumerated count is cross-checked
// against the classification's closed form.
std::optional<uint64_t> group_order(const ExtendedCoxeterDiagram& d,
                                    long long max_cosets = 2'000'000);

}  // namespace shepkit

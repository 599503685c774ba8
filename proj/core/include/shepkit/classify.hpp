#pragma once

#include "shepkit/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shepkit {

enum class FiniteKind {
  Infinite,
  // Coxeter families (all vertex labels 2)
  A,
  B,
  D,
  E6,
  E7,
  E8,
  F4,
  H3,
  H4,
  I2m,
  // Non-Coxeter Shephard families
  Bn_p2,   // p[4]2[3]2...[3]2; n = 1 is the cyclic group of order p
  B3_23,   // 2[4]3[3]3
  A3_3,    // 3[3]3[3]3
  A4_3,    // 3[3]3[3]3[3]3
  I2_pmq,  // p[m]q with 1/p + 1/q + 2/m > 1
};

struct FiniteType {
  FiniteKind kind = FiniteKind::Infinite;
  int n = 0;                  // rank (vertex count) where applicable
  int p = 0, m = 0, q = 0;    // extra parameters where applicable

  bool finite() const { return kind != FiniteKind::Infinite; }
  uint64_t order() const;     // closed form; throws for Infinite
  std::string str() const;

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

// Theorem-table matching for a connected diagram.
FiniteType classify_component(const ExtendedCoxeterDiagram& d);

struct ComponentClassification {
  GeneratorSubset support;
  FiniteType type;
};

struct Classification {
  std::vector<ComponentClassification> components;
  bool is_finite() const;
  // Product of component orders; nullopt when infinite.
  std::optional<uint64_t> order() const;
};

Classification classify(const ExtendedCoxeterDiagram& d);

enum class SubsetKind { SF, SFS };

struct SubsetPoset {
  SubsetKind kind;
  // Bitmasks of the member subsets, ascending. Downward closed; always
  // contains the empty set.
  std::vector<uint32_t> members;
  bool contains(uint32_t bits) const;
};

// All T with W_{Gamma(T)} finite (SF) or G_{Gamma(T)} finite (SFS).
SubsetPoset enumerate_subsets(const ExtendedCoxeterDiagram& d, SubsetKind kind);

// FC: every subset spanning no inf-labeled edge is in SF. Both the Coxeter
// and the Shephard phrasing are computed; they must agree whenever
// SF = SFS (asserted internally).
bool check_fc(const ExtendedCoxeterDiagram& d);

struct HypothesisReport {
  bool sf_equals_sfs = false;
  bool fc = false;
  bool has_a4_3_subdiagram = false;
  // Union of the offending subsets for all three checks: SF-members missing
  // from SFS, FC violators, and A4(3) supports.
  std::vector<GeneratorSubset> offending_subsets;

  std::vector<GeneratorSubset> sf_minus_sfs;
  std::vector<GeneratorSubset> fc_violations;
  std::vector<GeneratorSubset> a4_3_subsets;

  bool moussong_ok() const { return sf_equals_sfs && !has_a4_3_subdiagram; }
  bool cube_ok() const { return sf_equals_sfs && fc; }
};

HypothesisReport check_theorem_hypotheses(const ExtendedCoxeterDiagram& d);

}  // namespace shepkit

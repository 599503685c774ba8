#include "shepkit/davis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "shepkit/classify.hpp"
#include "shepkit/milnor.hpp"

namespace shepkit {

namespace {

std::string subset_str(uint32_t bits) {
  return GeneratorSubset::from_bits(bits).str();
}

// Poset of the given subsets under strict inclusion, payload = subset text.
Poset inclusion_poset(const std::vector<uint32_t>& members) {
  const int n = static_cast<int>(members.size());
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (members[i] != members[j] && (members[i] & ~members[j]) == 0)
        less.emplace_back(i, j);
  std::vector<std::string> payloads;
  payloads.reserve(members.size());
  for (uint32_t b : members) payloads.push_back(subset_str(b));
  return Poset(n, less, std::move(payloads));
}

std::string join_names(const std::vector<GeneratorSubset>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += " ";
    out += x.str();
  }
  return out;
}

std::string witness_str(const std::vector<int>& vs) {
  std::string out = "(";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + ")";
}

}  // namespace

int KComplex::index_of(uint32_t bits) const {
  auto it = std::lower_bound(sfs.begin(), sfs.end(), bits);
  if (it == sfs.end() || *it != bits) return -1;
  return static_cast<int>(it - sfs.begin());
}

KComplex build_k(const ExtendedCoxeterDiagram& d) {
  KComplex k;
  k.diagram = d;
  k.sfs = enumerate_subsets(d, SubsetKind::SFS).members;
  for (uint32_t t1 : k.sfs)
    for (uint32_t t2 : k.sfs)
      if ((t1 & ~t2) == 0) k.cells.emplace_back(t1, t2);
  std::sort(k.cells.begin(), k.cells.end());
  k.derived = derived_complex(inclusion_poset(k.sfs));
  return k;
}

SimplicialComplex sfs_nerve(const ExtendedCoxeterDiagram& d) {
  auto sp = enumerate_subsets(d, SubsetKind::SFS);
  std::vector<std::vector<int>> simplices;
  std::map<int, std::string> types;
  for (uint32_t b : sp.members) {
    if (b == 0) continue;
    auto els = GeneratorSubset::from_bits(b).elements();
    if (els.size() == 1) types[els[0]] = std::to_string(els[0]);
    simplices.push_back(std::move(els));
  }
  return SimplicialComplex(simplices, std::move(types));
}

SimplicialComplex upper_link(const ExtendedCoxeterDiagram& d,
                             const GeneratorSubset& T) {
  auto sp = enumerate_subsets(d, SubsetKind::SFS);
  if (!sp.contains(T.bits()))
    throw std::invalid_argument("upper_link: " + T.str() + " is not in S^fs");
  std::vector<uint32_t> above;
  for (uint32_t b : sp.members)
    if (b != T.bits() && (T.bits() & ~b) == 0) above.push_back(b);
  SimplicialComplex chains = derived_complex(inclusion_poset(above));
  SimplicialComplex nerve_link = sfs_nerve(d).link(T.elements());
  if (!isomorphic(chains, bary_subdivision(nerve_link)))
    throw std::logic_error(
        "upper link of " + T.str() +
        " does not match the subdivided nerve link");
  return chains;
}

LocalDevelopment local_development(const ExtendedCoxeterDiagram& d,
                                   const GeneratorSubset& T,
                                   long long max_order) {
  LocalDevelopment ld;
  ld.center = T;
  ld.upper = upper_link(d, T);

  auto local = milnor_complex(d.subdiagram(T), max_order);
  std::map<std::string, std::string> to_global;
  auto els = T.elements();
  for (size_t i = 0; i < els.size(); ++i)
    to_global[std::to_string(i)] = std::to_string(els[i]);
  ld.lower = local.complex.retyped(to_global);

  ld.link = join(ld.lower, ld.upper);
  size_t nl = ld.lower.simplices().size();
  size_t nu = ld.upper.simplices().size();
  if (ld.link.simplices().size() != nl + nu + nl * nu)
    throw std::logic_error("local development join has the wrong size");
  if (!is_flag(ld.lower).flag)
    throw std::logic_error("lower link of " + T.str() + " is not flag");
  return ld;
}

Report certify_cubical(const ExtendedCoxeterDiagram& d, long long max_order) {
  Report r;
  r.title = "cubical certificate";
  r.checks_version = "cube-checks/1";

  auto hyp = check_theorem_hypotheses(d);
  r.add("sf-equals-sfs", hyp.sf_equals_sfs,
        hyp.sf_equals_sfs ? "" : "spherical only as Coxeter: " +
                                     join_names(hyp.sf_minus_sfs));
  r.add("fc", hyp.fc, hyp.fc ? "" : "violated by " +
                                        join_names(hyp.fc_violations));

  auto sp = enumerate_subsets(d, SubsetKind::SFS);
  auto nerve = sfs_nerve(d);
  for (uint32_t b : sp.members) {
    GeneratorSubset t = GeneratorSubset::from_bits(b);
    auto lower = milnor_complex(d.subdiagram(t), max_order);
    auto fl = is_flag(lower.complex);
    r.add("lower-link-flag " + t.str(), fl.flag,
          fl.flag ? "" : "unfilled clique " + witness_str(fl.witness));
    auto fu = is_flag(nerve.link(t.elements()));
    r.add("upper-link-flag " + t.str(), fu.flag,
          fu.flag ? "" : "unfilled clique " + witness_str(fu.witness));
  }
  return r;
}

Report certify_moussong(const ExtendedCoxeterDiagram& d) {
  Report r;
  r.title = "piecewise-spherical certificate";
  r.checks_version = "moussong-checks/1";
  auto hyp = check_theorem_hypotheses(d);
  r.add("sf-equals-sfs", hyp.sf_equals_sfs,
        hyp.sf_equals_sfs ? "" : "spherical only as Coxeter: " +
                                     join_names(hyp.sf_minus_sfs));
  r.add("no-a4-3-subdiagram", !hyp.has_a4_3_subdiagram,
        hyp.has_a4_3_subdiagram ? "found at " + join_names(hyp.a4_3_subsets)
                                : "");
  return r;
}

}  // namespace shepkit

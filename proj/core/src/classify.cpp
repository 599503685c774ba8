#include "shepkit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace shepkit {

namespace {

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// |p[m]q| = (8/m) * (1/p + 1/q + 2/m - 1)^(-2); an integer for every finite
// type of the table.
uint64_t dihedral_shephard_order(int p, int m, int q) {
  double s = 1.0 / p + 1.0 / q + 2.0 / m - 1.0;
  double val = (8.0 / m) / (s * s);
  auto rounded = static_cast<uint64_t>(std::llround(val));
  if (std::abs(val - double(rounded)) > 1e-6)
    throw std::logic_error("non-integral dihedral order");
  return rounded;
}

bool i2_finite(int p, int m, int q) {
  // 1/p + 1/q + 2/m > 1, exactly: qm + pm + 2pq > pqm.
  long long P = p, M = m, Q = q;
  return Q * M + P * M + 2 * P * Q > P * Q * M;
}

}  // namespace

uint64_t FiniteType::order() const {
  switch (kind) {
    case FiniteKind::Infinite:
      throw std::logic_error("order() of an infinite type");
    case FiniteKind::A:
      return factorial(n + 1);
    case FiniteKind::B:
      return ipow(2, n) * factorial(n);
    case FiniteKind::D:
      return ipow(2, n - 1) * factorial(n);
    case FiniteKind::E6:
      return 51840;
    case FiniteKind::E7:
      return 2903040;
    case FiniteKind::E8:
      return 696729600;
    case FiniteKind::F4:
      return 1152;
    case FiniteKind::H3:
      return 120;
    case FiniteKind::H4:
      return 14400;
    case FiniteKind::I2m:
      return 2 * uint64_t(m);
    case FiniteKind::Bn_p2:
      return ipow(p, n) * factorial(n);
    case FiniteKind::B3_23:
      return 1296;
    case FiniteKind::A3_3:
      return 648;
    case FiniteKind::A4_3:
      return 155520;
    case FiniteKind::I2_pmq:
      return dihedral_shephard_order(p, m, q);
  }
  throw std::logic_error("unreachable");
}

std::string FiniteType::str() const {
  switch (kind) {
    case FiniteKind::Infinite:
      return "Infinite";
    case FiniteKind::A:
      return "A" + std::to_string(n);
    case FiniteKind::B:
      return "B" + std::to_string(n);
    case FiniteKind::D:
      return "D" + std::to_string(n);
    case FiniteKind::E6:
      return "E6";
    case FiniteKind::E7:
      return "E7";
    case FiniteKind::E8:
      return "E8";
    case FiniteKind::F4:
      return "F4";
    case FiniteKind::H3:
      return "H3";
    case FiniteKind::H4:
      return "H4";
    case FiniteKind::I2m:
      return "I2(" + std::to_string(m) + ")";
    case FiniteKind::Bn_p2:
      return "B" + std::to_string(n) + "(" + std::to_string(p) + ",2)";
    case FiniteKind::B3_23:
      return "B3(2,3)";
    case FiniteKind::A3_3:
      return "A3(3)";
    case FiniteKind::A4_3:
      return "A4(3)";
    case FiniteKind::I2_pmq:
      return "I2(" + std::to_string(p) + "," + std::to_string(m) + "," +
             std::to_string(q) + ")";
  }
  return "?";
}

namespace {

constexpr FiniteType kInfinite{};

FiniteType classify_path(const ExtendedCoxeterDiagram& d) {
  const int n = d.size();
  std::vector<int> order = d.path_order();
  auto try_orientation = [&](const std::vector<int>& ord) -> FiniteType {
    std::vector<int> ps, ms;
    for (int v : ord) ps.push_back(d.p(v).value());
    for (int i = 0; i + 1 < n; ++i)
      ms.push_back(d.m(ord[i], ord[i + 1]).value());
    bool coxeter = std::all_of(ps.begin(), ps.end(), [](int p) { return p == 2; });
    auto all3_from = [&](size_t k) {
      return std::all_of(ms.begin() + k, ms.end(), [](int m) { return m == 3; });
    };
    if (coxeter) {
      if (all3_from(0)) return {FiniteKind::A, n};
      if (ms[0] == 4 && all3_from(1)) return {FiniteKind::B, n};
      if (n == 3 && ms == std::vector<int>{5, 3}) return {FiniteKind::H3, 3};
      if (n == 4 && ms == std::vector<int>{5, 3, 3}) return {FiniteKind::H4, 4};
      if (n == 4 && ms == std::vector<int>{3, 4, 3}) return {FiniteKind::F4, 4};
      return kInfinite;
    }
    if (ps[0] >= 3 && ms[0] == 4 && all3_from(1) &&
        std::all_of(ps.begin() + 1, ps.end(), [](int p) { return p == 2; }))
      return {FiniteKind::Bn_p2, n, ps[0]};
    if (n == 3 && ps == std::vector<int>{2, 3, 3} && ms == std::vector<int>{4, 3})
      return {FiniteKind::B3_23, 3};
    if (n == 3 && ps == std::vector<int>{3, 3, 3} && ms == std::vector<int>{3, 3})
      return {FiniteKind::A3_3, 3};
    if (n == 4 && ps == std::vector<int>{3, 3, 3, 3} &&
        ms == std::vector<int>{3, 3, 3})
      return {FiniteKind::A4_3, 4};
    return kInfinite;
  };
  FiniteType t = try_orientation(order);
  if (t.finite()) return t;
  std::reverse(order.begin(), order.end());
  return try_orientation(order);
}

FiniteType classify_branched_coxeter(const ExtendedCoxeterDiagram& d) {
  const int n = d.size();
  if (static_cast<int>(d.edges().size()) != n - 1) return kInfinite;  // cycle
  int center = -1;
  for (int i = 0; i < n; ++i) {
    int deg = d.degree(i);
    if (deg > 3) return kInfinite;
    if (deg == 3) {
      if (center >= 0) return kInfinite;
      center = i;
    }
  }
  if (center < 0) return kInfinite;
  for (const auto& [a, b, m] : d.edges())
    if (m != Label::finite(3)) return kInfinite;
  // Walk the three arms from the center; lengths in vertices.
  std::vector<int> arms;
  for (int w = 0; w < n; ++w) {
    if (!d.has_edge(center, w)) continue;
    int len = 0, prev = center, cur = w;
    for (;;) {
      ++len;
      int next = -1;
      for (int x = 0; x < n; ++x)
        if (x != prev && d.has_edge(cur, x)) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {FiniteKind::D, n};
  if (arms == std::vector<int>{1, 2, 2}) return {FiniteKind::E6, 6};
  if (arms == std::vector<int>{1, 2, 3}) return {FiniteKind::E7, 7};
  if (arms == std::vector<int>{1, 2, 4}) return {FiniteKind::E8, 8};
  return kInfinite;
}

}  // namespace

FiniteType classify_component(const ExtendedCoxeterDiagram& d) {
  const int n = d.size();
  if (n == 0) throw ValidationError("classify_component: empty diagram");
  if (!d.is_connected())
    throw ValidationError("classify_component: diagram is not connected");
  for (int i = 0; i < n; ++i)
    if (d.p(i).is_infinite()) return kInfinite;
  for (const auto& [a, b, m] : d.edges())
    if (m.is_infinite()) return kInfinite;

  if (n == 1) {
    int p = d.p(0).value();
    if (p == 2) return {FiniteKind::A, 1};
    return {FiniteKind::Bn_p2, 1, p};
  }
  if (n == 2) {
    int p = d.p(0).value(), q = d.p(1).value(), m = d.m(0, 1).value();
    if (p == 2 && q == 2) return {FiniteKind::I2m, 2, 0, m};
    if (!i2_finite(p, m, q)) return kInfinite;
    return {FiniteKind::I2_pmq, 2, std::max(p, q), m, std::min(p, q)};
  }
  if (d.is_path()) return classify_path(d);
  bool coxeter = true;
  for (int i = 0; i < n; ++i)
    if (d.p(i) != Label::finite(2)) coxeter = false;
  if (coxeter) return classify_branched_coxeter(d);
  return kInfinite;
}

bool Classification::is_finite() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentClassification& c) { return c.type.finite(); });
}

std::optional<uint64_t> Classification::order() const {
  uint64_t total = 1;
  for (const auto& c : components) {
    if (!c.type.finite()) return std::nullopt;
    total *= c.type.order();
  }
  return total;
}

Classification classify(const ExtendedCoxeterDiagram& d) {
  Classification out;
  for (const GeneratorSubset& comp : d.components())
    out.components.push_back({comp, classify_component(d.subdiagram(comp))});
  return out;
}

bool SubsetPoset::contains(uint32_t bits) const {
  return std::binary_search(members.begin(), members.end(), bits);
}

namespace {

struct SubsetSweep {
  std::vector<uint32_t> sf;
  std::vector<uint32_t> sfs;
};

SubsetSweep sweep_subsets(const ExtendedCoxeterDiagram& d) {
  const int n = d.size();
  SubsetSweep out;
  ExtendedCoxeterDiagram coxeter = d.underlying_coxeter();
  for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits) {
    GeneratorSubset t = GeneratorSubset::from_bits(bits);
    if (!classify(coxeter.subdiagram(t)).is_finite()) continue;
    out.sf.push_back(bits);
    if (classify(d.subdiagram(t)).is_finite()) out.sfs.push_back(bits);
  }
  // Downward closure is a theorem (parabolic subgroups of finite groups are
  // finite); a violation here means the classifier is broken.
  auto check_closed = [n](const std::vector<uint32_t>& members) {
    std::set<uint32_t> s(members.begin(), members.end());
    for (uint32_t t : members)
      for (int i = 0; i < n; ++i)
        if ((t >> i) & 1)
          if (!s.count(t & ~(uint32_t(1) << i)))
            throw std::logic_error("subset family not downward closed");
  };
  check_closed(out.sf);
  check_closed(out.sfs);
  return out;
}

bool spans_no_inf_edge(const ExtendedCoxeterDiagram& d, uint32_t bits) {
  for (const auto& [a, b, m] : d.edges())
    if (m.is_infinite() && ((bits >> a) & 1) && ((bits >> b) & 1)) return false;
  return true;
}

}  // namespace

SubsetPoset enumerate_subsets(const ExtendedCoxeterDiagram& d, SubsetKind kind) {
  SubsetSweep sweep = sweep_subsets(d);
  return {kind, kind == SubsetKind::SF ? std::move(sweep.sf) : std::move(sweep.sfs)};
}

bool check_fc(const ExtendedCoxeterDiagram& d) {
  SubsetSweep sweep = sweep_subsets(d);
  std::set<uint32_t> sf(sweep.sf.begin(), sweep.sf.end());
  std::set<uint32_t> sfs(sweep.sfs.begin(), sweep.sfs.end());
  bool fc_w = true, fc_s = true;
  for (uint32_t bits = 0; bits < (uint32_t(1) << d.size()); ++bits) {
    if (!spans_no_inf_edge(d, bits)) continue;
    if (!sf.count(bits)) fc_w = false;
    if (!sfs.count(bits)) fc_s = false;
  }
  if (sf == sfs && fc_w != fc_s)
    throw std::logic_error("FC phrasings disagree despite SF = SFS");
  return fc_w;
}

HypothesisReport check_theorem_hypotheses(const ExtendedCoxeterDiagram& d) {
  const int n = d.size();
  HypothesisReport r;
  SubsetSweep sweep = sweep_subsets(d);
  std::set<uint32_t> sf(sweep.sf.begin(), sweep.sf.end());
  std::set<uint32_t> sfs(sweep.sfs.begin(), sweep.sfs.end());

  r.sf_equals_sfs = sf == sfs;
  for (uint32_t bits : sweep.sf)
    if (!sfs.count(bits)) r.sf_minus_sfs.push_back(GeneratorSubset::from_bits(bits));

  r.fc = true;
  for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits)
    if (spans_no_inf_edge(d, bits) && !sf.count(bits)) {
      r.fc = false;
      r.fc_violations.push_back(GeneratorSubset::from_bits(bits));
    }

  for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits) {
    GeneratorSubset t = GeneratorSubset::from_bits(bits);
    if (t.size() != 4) continue;
    ExtendedCoxeterDiagram sub = d.subdiagram(t);
    if (sub.is_connected() &&
        classify_component(sub).kind == FiniteKind::A4_3)
      r.a4_3_subsets.push_back(t);
  }
  r.has_a4_3_subdiagram = !r.a4_3_subsets.empty();

  std::set<GeneratorSubset> offending;
  offending.insert(r.sf_minus_sfs.begin(), r.sf_minus_sfs.end());
  offending.insert(r.fc_violations.begin(), r.fc_violations.end());
  offending.insert(r.a4_3_subsets.begin(), r.a4_3_subsets.end());
  r.offending_subsets.assign(offending.begin(), offending.end());
  return r;
}

}  // namespace shepkit

#include "shepkit/milnor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "shepkit/classify.hpp"
#include "shepkit/groups.hpp"

namespace shepkit {

namespace {

// Flag nerve over one coset table per generator: vertices are parabolic
// cosets, one maximal simplex per group element. Agrees with the derived
// complex of the face poset on path diagrams and extends it to forks.
SimplicialComplex flag_nerve(const ExtendedCoxeterDiagram& d,
                             const std::vector<int>& global_ids,
                             long long max_order) {
  Classification cls = classify(d);
  if (!cls.is_finite()) throw std::invalid_argument("flag nerve needs a finite group");
  uint64_t expected = *cls.order();
  if (expected > static_cast<uint64_t>(max_order)) throw CosetLimitExceeded(max_order);
  long long cap = std::max<long long>(4 * static_cast<long long>(expected), 10000);

  Presentation pres = presentation(d);
  CosetTable reg = coset_enumerate(pres, GeneratorSubset{}, cap);
  if (static_cast<uint64_t>(reg.size()) != expected)
    throw std::logic_error("regular enumeration disagrees with the closed-form order");

  int n = d.size();
  std::vector<int> offset(n + 1, 0);
  std::vector<std::vector<int>> phi(n);
  for (int i = 0; i < n; ++i) {
    GeneratorSubset t = GeneratorSubset::full(n);
    t.remove(i);
    CosetTable par = coset_enumerate(pres, t, cap);
    offset[i + 1] = offset[i] + par.size();
    std::vector<int> f(reg.size(), -1);
    f[0] = 0;
    for (int x = 0; x < reg.size(); ++x) {
      if (f[x] < 0) throw std::logic_error("regular table is not breadth-first");
      for (int s = 0; s < 2 * pres.ngens; ++s) {
        int y = reg.at(x, s);
        int fy = par.at(f[x], s);
        if (f[y] < 0)
          f[y] = fy;
        else if (f[y] != fy)
          throw std::logic_error("coset projection is not well defined");
      }
    }
    phi[i] = std::move(f);
  }

  std::vector<std::vector<int>> simplices;
  for (int x = 0; x < reg.size(); ++x) {
    std::vector<int> flag(n);
    for (int i = 0; i < n; ++i) flag[i] = offset[i] + phi[i][x];
    simplices.push_back(std::move(flag));
  }
  std::map<int, std::string> types;
  for (int i = 0; i < n; ++i)
    for (int c = offset[i]; c < offset[i + 1]; ++c)
      types[c] = std::to_string(global_ids[i]);
  return SimplicialComplex(simplices, std::move(types));
}

}  // namespace

MilnorComplex milnor_complex(const ExtendedCoxeterDiagram& d, long long max_order) {
  Classification cls = classify(d);
  if (!cls.is_finite())
    throw std::invalid_argument("milnor complex needs a finite diagram");

  SimplicialComplex total;
  std::optional<FacePoset> source;
  bool first = true;
  for (const GeneratorSubset& comp : d.components()) {
    ExtendedCoxeterDiagram sub = d.subdiagram(comp);
    std::vector<int> global_ids = comp.elements();
    SimplicialComplex piece;
    if (sub.is_path()) {
      FacePoset poset = polytope_from_group(sub, max_order);
      std::vector<std::string> payloads;
      for (int r : sub.path_order()) payloads.push_back(std::to_string(global_ids[r]));
      piece = derived_complex(poset.proper_poset(payloads));
      if (first && d.components().size() == 1) source = std::move(poset);
    } else {
      piece = flag_nerve(sub, global_ids, max_order);
    }
    total = first ? std::move(piece) : join(total, piece);
    first = false;
  }
  return {d, std::move(total), std::move(source)};
}

Report check_link_theorem(const MilnorComplex& m, long long max_order) {
  Report rep;
  rep.title = "link theorem check";
  rep.checks_version = "link-checks/1";
  const ExtendedCoxeterDiagram& d = m.diagram;
  const int n = d.size();

  std::map<uint32_t, std::vector<int>> reps;  // present-rank bitmask -> simplex
  for (const auto& s : m.complex.simplices()) {
    uint32_t present = 0;
    for (int v : s) present |= uint32_t(1) << std::stoi(m.complex.type_of(v));
    if (GeneratorSubset::from_bits(present).size() != static_cast<int>(s.size()))
      throw std::logic_error("simplex with a repeated vertex type");
    reps.emplace(present, s);
  }

  for (const auto& [present, delta] : reps) {
    GeneratorSubset that = GeneratorSubset::full(n).minus(GeneratorSubset::from_bits(present));
    SimplicialComplex link = m.complex.link(delta);
    SimplicialComplex expected =
        milnor_complex(d.subdiagram(that), max_order).complex;
    std::map<std::string, std::string> to_global;
    std::vector<int> ids = that.elements();
    for (size_t i = 0; i < ids.size(); ++i)
      to_global[std::to_string(i)] = std::to_string(ids[i]);
    bool ok = isomorphic(link, expected.retyped(to_global), true);
    rep.add("link-" + that.str(), ok,
            std::to_string(link.simplices().size()) + " simplices");
  }
  return rep;
}

Report check_bn_structure(int n, int p) {
  if (n < 1 || p < 2) throw std::invalid_argument("need n >= 1, p >= 2");
  Report rep;
  rep.title = "bn structure check";
  rep.checks_version = "bn-checks/1";

  std::vector<Vertex> vertices;
  vertices.push_back({"s1", Label::finite(p)});
  for (int i = 1; i < n; ++i)
    vertices.push_back({"s" + std::to_string(i + 1), Label::finite(2)});
  std::vector<ExtendedCoxeterDiagram::Edge> edges;
  if (n > 1) edges.push_back({0, 1, Label::finite(4)});
  for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1, Label::finite(3)});
  ExtendedCoxeterDiagram d(vertices, edges);

  SimplicialComplex theta = milnor_complex(d).complex;

  SimplicialComplex points;
  {
    std::vector<std::vector<int>> verts;
    for (int i = 0; i < p; ++i) verts.push_back({i});
    points = SimplicialComplex(verts);
  }
  SimplicialComplex joined = points;
  for (int k = 1; k < n; ++k) joined = join(joined, points);
  // Cell dimension q in the join matches polytope rank n-1-q.
  std::map<std::string, std::string> flip;
  for (int q = 0; q < n; ++q) flip[std::to_string(q)] = std::to_string(n - 1 - q);
  SimplicialComplex subdivided = bary_subdivision(joined).retyped(flip);

  std::vector<std::string> payloads;
  for (int r = 0; r < n; ++r) payloads.push_back(std::to_string(r));
  SimplicialComplex product_route =
      derived_complex(generalized_cube(n, p).proper_poset(payloads));

  uint64_t chambers = 1;  // p^n n!
  for (int i = 0; i < n; ++i) chambers *= static_cast<uint64_t>(p);
  for (int i = 2; i <= n; ++i) chambers *= static_cast<uint64_t>(i);

  rep.add("vertex-counts",
          theta.num_vertices() == subdivided.num_vertices() &&
              theta.num_vertices() == product_route.num_vertices(),
          std::to_string(theta.num_vertices()) + " vertices");
  rep.add("chamber-count",
          theta.simplices_of_dim(n - 1).size() == chambers,
          std::to_string(theta.simplices_of_dim(n - 1).size()) + " of " +
              std::to_string(chambers));
  rep.add("iso-subdivided-join", isomorphic(theta, subdivided, true));
  rep.add("iso-cube-product", isomorphic(theta, product_route, true));
  return rep;
}

Report check_b3_splitting() {
  Report rep;
  rep.title = "b3(2,3) splitting check";
  rep.checks_version = "b3-splitting-checks/1";

  ExtendedCoxeterDiagram b3 = parse_diagram("2[4]3[3]3");
  ExtendedCoxeterDiagram a3 = parse_diagram("3[3]3[3]3");
  auto order_b = group_order(b3);
  auto order_a = group_order(a3);
  rep.add("order-1296", order_b && *order_b == 1296,
          order_b ? std::to_string(*order_b) : "infinite");
  rep.add("a33-baseline-648", order_a && *order_a == 648,
          order_a ? std::to_string(*order_a) : "infinite");
  rep.add("order-ratio-2", order_a && order_b && *order_b == 2 * *order_a);

  unsigned long long flags_b = polytope_from_group(b3).flag_count();
  unsigned long long flags_a = polytope_from_group(a3).flag_count();
  rep.add("chamber-ratio-2", flags_b == 2 * flags_a,
          std::to_string(flags_b) + " vs " + std::to_string(flags_a));
  return rep;
}

std::optional<int> theta_girth(const ExtendedCoxeterDiagram& d, long long max_order) {
  return graph_girth(milnor_complex(d, max_order).complex.one_skeleton());
}

}  // namespace shepkit

#include "shepkit/complexes.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace shepkit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

namespace {

void insert_closed(std::set<std::vector<int>>& out, const std::vector<int>& s) {
  if (s.empty() || out.count(s)) return;
  out.insert(s);
  if (s.size() == 1) return;
  std::vector<int> face(s.size() - 1);
  for (size_t drop = 0; drop < s.size(); ++drop) {
    size_t k = 0;
    for (size_t i = 0; i < s.size(); ++i)
      if (i != drop) face[k++] = s[i];
    insert_closed(out, face);
  }
}

// Merge two sorted vertex tuples; nullopt when they intersect.
std::optional<std::vector<int>> disjoint_union(const std::vector<int>& a,
                                               const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    out.push_back(a[i] < b[j] ? a[i++] : b[j++]);
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    const std::vector<std::vector<int>>& simplices,
    std::map<int, std::string> types) {
  for (const std::vector<int>& s : simplices) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw std::invalid_argument("repeated vertex in simplex");
    if (!t.empty() && t.front() < 0)
      throw std::invalid_argument("negative vertex id");
    insert_closed(simplices_, t);
  }
  for (const std::vector<int>& s : simplices_)
    if (s.size() == 1) vertex_ids_.push_back(s[0]);
  for (const auto& [v, tag] : types) {
    if (!std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), v))
      throw std::invalid_argument("type tag on a vertex not in the complex");
    if (!tag.empty()) types_[v] = tag;
  }
}

const std::string& SimplicialComplex::type_of(int v) const {
  static const std::string none;
  if (!std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), v))
    throw std::out_of_range("no such vertex");
  auto it = types_.find(v);
  return it == types_.end() ? none : it->second;
}

bool SimplicialComplex::has_simplex(std::vector<int> s) const {
  if (s.empty()) return true;
  std::sort(s.begin(), s.end());
  return simplices_.count(s) > 0;
}

std::vector<std::vector<int>> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<std::vector<int>> out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, int(s.size()) - 1);
  return d;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::is_connected() const {
  if (vertex_ids_.empty()) return true;
  std::map<int, int> comp;
  for (int v : vertex_ids_) comp[v] = v;
  auto root = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (const auto& s : simplices_)
    if (s.size() == 2) comp[root(s[0])] = root(s[1]);
  int r0 = root(vertex_ids_[0]);
  for (int v : vertex_ids_)
    if (root(v) != r0) return false;
  return true;
}

SimplicialComplex SimplicialComplex::link(const std::vector<int>& s) const {
  std::vector<int> sigma = s;
  std::sort(sigma.begin(), sigma.end());
  if (!has_simplex(sigma)) throw std::out_of_range("simplex not in complex");
  std::vector<std::vector<int>> faces;
  for (const auto& tau : simplices_) {
    auto u = disjoint_union(tau, sigma);
    if (u && simplices_.count(*u)) faces.push_back(tau);
  }
  std::map<int, std::string> types;
  for (const auto& tau : faces)
    if (tau.size() == 1) {
      auto it = types_.find(tau[0]);
      if (it != types_.end()) types.insert(*it);
    }
  return SimplicialComplex(faces, std::move(types));
}

Graph SimplicialComplex::one_skeleton() const {
  auto index = [&](int v) {
    return int(std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), v) -
               vertex_ids_.begin());
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& s : simplices_)
    if (s.size() == 2) edges.emplace_back(index(s[0]), index(s[1]));
  return Graph(num_vertices(), std::move(edges));
}

SimplicialComplex SimplicialComplex::retyped(
    const std::map<std::string, std::string>& m) const {
  std::map<int, std::string> types;
  for (const auto& [v, tag] : types_) {
    auto it = m.find(tag);
    types[v] = it == m.end() ? tag : it->second;
  }
  std::vector<std::vector<int>> simpl(simplices_.begin(), simplices_.end());
  return SimplicialComplex(simpl, std::move(types));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  int off = a.vertex_ids().empty() ? 0 : a.vertex_ids().back() + 1;
  std::vector<std::vector<int>> simpl(a.simplices().begin(),
                                      a.simplices().end());
  std::vector<std::vector<int>> bshift;
  for (const auto& s : b.simplices()) {
    std::vector<int> t = s;
    for (int& v : t) v += off;
    bshift.push_back(t);
    simpl.push_back(t);
  }
  for (const auto& sa : a.simplices())
    for (const auto& sb : bshift) {
      std::vector<int> u = sa;
      u.insert(u.end(), sb.begin(), sb.end());
      simpl.push_back(std::move(u));
    }
  std::map<int, std::string> types = a.types();
  for (const auto& [v, tag] : b.types()) types[v + off] = tag;
  return SimplicialComplex(simpl, std::move(types));
}

FlagReport is_flag(const SimplicialComplex& sc) {
  std::set<std::pair<int, int>> adj;
  std::map<int, std::vector<int>> nbrs;
  for (const auto& s : sc.simplices())
    if (s.size() == 2) {
      adj.insert({s[0], s[1]});
      nbrs[s[0]].push_back(s[1]);
      nbrs[s[1]].push_back(s[0]);
    }
  for (auto& [v, ns] : nbrs) std::sort(ns.begin(), ns.end());
  auto adjacent = [&](int u, int v) {
    return adj.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  // Candidate cliques in increasing size: a simplex plus one later vertex
  // adjacent to all of it. The first miss whose facets are all present is an
  // inclusion-minimal non-simplex clique.
  int maxd = sc.dimension();
  for (int d = 1; d <= maxd + 1; ++d) {
    for (const auto& s : sc.simplices()) {
      if (static_cast<int>(s.size()) != d) continue;
      for (int v : nbrs[s.back()]) {
        if (v <= s.back()) continue;
        bool clique = true;
        for (int u : s)
          if (!adjacent(u, v)) {
            clique = false;
            break;
          }
        if (!clique) continue;
        std::vector<int> tau = s;
        tau.push_back(v);
        if (sc.has_simplex(tau)) continue;
        bool facets_ok = true;
        for (size_t drop = 0; drop + 1 < tau.size() && facets_ok; ++drop) {
          std::vector<int> f;
          for (size_t i = 0; i < tau.size(); ++i)
            if (i != drop) f.push_back(tau[i]);
          facets_ok = sc.has_simplex(f);
        }
        if (facets_ok) return {false, tau};
      }
    }
  }
  return {true, {}};
}

bool is_cone_with_apex(const SimplicialComplex& sc, int apex) {
  if (!sc.has_simplex({apex})) return false;
  for (const auto& s : sc.simplices()) {
    if (std::binary_search(s.begin(), s.end(), apex)) continue;
    std::vector<int> t = s;
    t.push_back(apex);
    if (!sc.has_simplex(t)) return false;
  }
  return true;
}

Poset::Poset(int n, const std::vector<std::pair<int, int>>& strict_less,
             std::vector<std::string> payloads, std::vector<int> ranks)
    : n_(n),
      less_(n, std::vector<bool>(n, false)),
      payloads_(std::move(payloads)),
      ranks_(std::move(ranks)) {
  if (n < 0) throw std::invalid_argument("negative poset size");
  if (!payloads_.empty() && static_cast<int>(payloads_.size()) != n)
    throw std::invalid_argument("payload count mismatch");
  if (!ranks_.empty() && static_cast<int>(ranks_.size()) != n)
    throw std::invalid_argument("rank count mismatch");
  for (auto [a, b] : strict_less) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::out_of_range("relation endpoint out of range");
    if (a == b) throw std::invalid_argument("reflexive relation");
    less_[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (less_[i][k])
        for (int j = 0; j < n; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (less_[i][i]) throw std::invalid_argument("order relation has a cycle");
  if (!ranks_.empty())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (less_[i][j] && ranks_[i] >= ranks_[j])
          throw std::invalid_argument("rank not monotone");
}

bool Poset::less(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw std::out_of_range("poset index");
  return less_[a][b];
}

const std::string& Poset::payload(int i) const {
  static const std::string none;
  if (i < 0 || i >= n_) throw std::out_of_range("poset index");
  return payloads_.empty() ? none : payloads_[i];
}

std::optional<int> Poset::rank(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("poset index");
  if (ranks_.empty()) return std::nullopt;
  return ranks_[i];
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool maximal = true;
    for (int j = 0; j < n_ && maximal; ++j)
      if (less_[i][j]) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

Poset poset_product(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  const int n = np * nq;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < np; ++k)
        for (int l = 0; l < nq; ++l) {
          if (i == k && j == l) continue;
          if (p.leq(i, k) && q.leq(j, l)) rel.emplace_back(i * nq + j, k * nq + l);
        }
  std::vector<std::string> payloads(n);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      payloads[i * nq + j] = "(" + p.payload(i) + "," + q.payload(j) + ")";
  std::vector<int> ranks;
  if (p.ranked() && q.ranked()) {
    ranks.resize(n);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nq; ++j) ranks[i * nq + j] = *p.rank(i) + *q.rank(j);
  }
  return Poset(n, rel, std::move(payloads), std::move(ranks));
}

Poset cone(const Poset& p, const std::string& apex_payload) {
  const int n = p.size();
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) rel.emplace_back(i, j);
  for (int i = 0; i < n; ++i) rel.emplace_back(i, n);
  std::vector<std::string> payloads;
  for (int i = 0; i < n; ++i) payloads.push_back(p.payload(i));
  payloads.push_back(apex_payload);
  std::vector<int> ranks;
  if (p.ranked() || n == 0) {
    int top = 0;
    for (int i = 0; i < n; ++i) top = std::max(top, *p.rank(i) + 1);
    for (int i = 0; i < n; ++i) ranks.push_back(*p.rank(i));
    ranks.push_back(top);
  }
  return Poset(n + 1, rel, std::move(payloads), std::move(ranks));
}

SimplicialComplex derived_complex(const Poset& p) {
  std::vector<std::vector<int>> simpl;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    simpl.push_back(chain);
    for (int j = 0; j < p.size(); ++j)
      if (p.less(top, j)) self(self, j);
    chain.pop_back();
  };
  for (int i = 0; i < p.size(); ++i) extend(extend, i);
  std::map<int, std::string> types;
  for (int i = 0; i < p.size(); ++i)
    if (!p.payload(i).empty()) types[i] = p.payload(i);
  return SimplicialComplex(simpl, std::move(types));
}

SimplicialComplex bary_subdivision(const SimplicialComplex& sc) {
  std::vector<std::vector<int>> cells(sc.simplices().begin(),
                                      sc.simplices().end());
  const int n = static_cast<int>(cells.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (cells[i].size() >= cells[j].size()) continue;
      if (std::includes(cells[j].begin(), cells[j].end(), cells[i].begin(),
                        cells[i].end()))
        rel.emplace_back(i, j);
    }
  std::vector<std::string> payloads;
  std::vector<int> ranks;
  for (const auto& c : cells) {
    payloads.push_back(std::to_string(c.size() - 1));
    ranks.push_back(static_cast<int>(c.size()) - 1);
  }
  return derived_complex(Poset(n, rel, std::move(payloads), std::move(ranks)));
}

std::optional<int> graph_girth(const Graph& g) {
  auto adj = g.adjacency();
  int best = INT_MAX;
  for (int r = 0; r < g.size(); ++r) {
    std::vector<int> dist(g.size(), -1), parent(g.size(), -1);
    std::deque<int> bfs{r};
    dist[r] = 0;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          bfs.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g) {
  if (g.size() < 2) return std::nullopt;
  auto adj = g.adjacency();
  std::vector<int> color(g.size(), -1);
  std::deque<int> bfs{0};
  color[0] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (int w : adj[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        bfs.push_back(w);
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  long long sides[2] = {0, 0};
  for (int c : color) {
    if (c < 0) return std::nullopt;  // disconnected
    ++sides[c];
  }
  if (sides[0] == 0 || sides[1] == 0) return std::nullopt;
  if (static_cast<long long>(g.edges().size()) != sides[0] * sides[1])
    return std::nullopt;
  int m = static_cast<int>(std::min(sides[0], sides[1]));
  int n = static_cast<int>(std::max(sides[0], sides[1]));
  return std::make_pair(m, n);
}

namespace {

struct IsoSide {
  std::vector<int> ids;                     // position -> vertex id
  std::vector<std::vector<bool>> adj;       // by position
  std::vector<std::string> color;
  std::set<std::vector<int>> simplices;     // by position, sorted
  // Simplices of dimension >= 2 through each position; edges are handled by
  // the adjacency matrix.
  std::vector<std::vector<const std::vector<int>*>> big_at;
};

IsoSide prepare(const SimplicialComplex& sc, bool respect_types) {
  IsoSide side;
  side.ids = sc.vertex_ids();
  const int n = static_cast<int>(side.ids.size());
  auto pos = [&](int v) {
    return int(std::lower_bound(side.ids.begin(), side.ids.end(), v) -
               side.ids.begin());
  };
  side.adj.assign(n, std::vector<bool>(n, false));
  side.big_at.assign(n, {});
  int maxd = sc.dimension();
  std::vector<std::vector<int>> per_dim(n, std::vector<int>(maxd + 1, 0));
  for (const auto& s : sc.simplices()) {
    std::vector<int> t;
    for (int v : s) t.push_back(pos(v));
    std::sort(t.begin(), t.end());
    for (int u : t) ++per_dim[u][s.size() - 1];
    if (t.size() == 2) side.adj[t[0]][t[1]] = side.adj[t[1]][t[0]] = true;
    auto [it, fresh] = side.simplices.insert(std::move(t));
    if (fresh && it->size() >= 3)
      for (int u : *it) side.big_at[u].push_back(&*it);
  }
  for (int i = 0; i < n; ++i) {
    std::string c = respect_types ? sc.type_of(side.ids[i]) : std::string();
    for (int k : per_dim[i]) c += ":" + std::to_string(k);
    side.color.push_back(std::move(c));
  }
  return side;
}

// One round of neighborhood color refinement shared across both sides; new
// colors are re-keyed to short canonical ids so they stay bounded.
bool refine(IsoSide& a, IsoSide& b) {
  auto keys = [](const IsoSide& s) {
    std::vector<std::string> out(s.color.size());
    for (size_t i = 0; i < s.color.size(); ++i) {
      std::vector<std::string> nb;
      for (size_t j = 0; j < s.color.size(); ++j)
        if (s.adj[i][j]) nb.push_back(s.color[j]);
      std::sort(nb.begin(), nb.end());
      std::string c = s.color[i] + "|";
      for (const auto& x : nb) c += x + ";";
      out[i] = std::move(c);
    }
    return out;
  };
  std::vector<std::string> ka = keys(a), kb = keys(b);
  std::set<std::string> all(ka.begin(), ka.end());
  all.insert(kb.begin(), kb.end());
  std::map<std::string, std::string> id;
  int next = 0;
  for (const auto& k : all) id[k] = std::to_string(next++);
  size_t before = std::set<std::string>(a.color.begin(), a.color.end()).size();
  for (size_t i = 0; i < ka.size(); ++i) a.color[i] = id[ka[i]];
  for (size_t i = 0; i < kb.size(); ++i) b.color[i] = id[kb[i]];
  size_t after = std::set<std::string>(a.color.begin(), a.color.end()).size();
  return after > before;
}

// Simplices of every dimension are accounted for incrementally: vertices by
// the color histogram, edges by the adjacency consistency scan, and higher
// simplices the moment their last vertex is assigned. Together with the
// per-dimension count equality checked by the caller, reaching a full
// assignment is a certificate.
bool extend_map(const IsoSide& a, const IsoSide& b, std::vector<int>& f,
                std::vector<bool>& used, const std::vector<int>& order,
                size_t k) {
  if (k == order.size()) return true;
  int u = order[k];
  const int n = static_cast<int>(b.color.size());
  for (int v = 0; v < n; ++v) {
    if (used[v] || b.color[v] != a.color[u]) continue;
    bool ok = true;
    for (size_t kk = 0; kk < k && ok; ++kk)
      if (a.adj[u][order[kk]] != b.adj[v][f[order[kk]]]) ok = false;
    if (!ok) continue;
    f[u] = v;
    for (const auto* s : a.big_at[u]) {
      std::vector<int> img;
      for (int w : *s) {
        if (f[w] < 0) break;
        img.push_back(f[w]);
      }
      if (img.size() != s->size()) continue;
      std::sort(img.begin(), img.end());
      if (!b.simplices.count(img)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      f[u] = -1;
      continue;
    }
    used[v] = true;
    if (extend_map(a, b, f, used, order, k + 1)) return true;
    used[v] = false;
    f[u] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                bool respect_types) {
  if (a.simplices().size() > 2000 || b.simplices().size() > 2000)
    throw std::length_error("isomorphic: more than 2000 simplices");
  if (a.num_vertices() != b.num_vertices()) return false;
  if (a.simplices().size() != b.simplices().size()) return false;
  IsoSide sa = prepare(a, respect_types), sb = prepare(b, respect_types);
  for (int round = 0; round < a.num_vertices(); ++round)
    if (!refine(sa, sb)) break;
  auto histogram = [](const IsoSide& s) {
    std::map<std::string, int> m;
    for (const auto& c : s.color) ++m[c];
    return m;
  };
  if (histogram(sa) != histogram(sb)) return false;
  auto dim_hist = [](const SimplicialComplex& c) {
    std::map<size_t, int> m;
    for (const auto& s : c.simplices()) ++m[s.size()];
    return m;
  };
  if (dim_hist(a) != dim_hist(b)) return false;
  std::map<std::string, int> size_of;
  for (const auto& [c, k] : histogram(sa)) size_of[c] = k;
  // Order vertices so each one touches as much of the mapped prefix as
  // possible; ties go to the rarer color.
  const int n = a.num_vertices();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  std::vector<int> conn(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (placed[u]) continue;
      if (best < 0 || conn[u] > conn[best] ||
          (conn[u] == conn[best] && size_of[sa.color[u]] < size_of[sa.color[best]]))
        best = u;
    }
    order.push_back(best);
    placed[best] = true;
    for (int u = 0; u < n; ++u)
      if (!placed[u] && sa.adj[best][u]) ++conn[u];
  }
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  return extend_map(sa, sb, f, used, order, 0);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return isomorphic(graph_complex(a), graph_complex(b), false);
}

SimplicialComplex graph_complex(const Graph& g) {
  std::vector<std::vector<int>> simpl;
  for (int v = 0; v < g.size(); ++v) simpl.push_back({v});
  for (auto [a, b] : g.edges()) simpl.push_back({a, b});
  return SimplicialComplex(simpl);
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("empty bipartite side");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, std::move(edges));
}

SimplicialComplex complete_bipartite_complex(int m, int n) {
  return graph_complex(complete_bipartite_graph(m, n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

SimplicialComplex cycle_complex(int n) { return graph_complex(cycle_graph(n)); }

Graph moebius_kantor_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 8; ++i) {
    edges.emplace_back(i, (i + 1) % 8);
    edges.emplace_back(i, 8 + i);
    edges.emplace_back(8 + i, 8 + (i + 3) % 8);
  }
  return Graph(16, std::move(edges));
}

}  // namespace shepkit

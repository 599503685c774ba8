#include "shepkit/polytopes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "shepkit/classify.hpp"
#include "shepkit/groups.hpp"
#include "hessian_internal.hpp"

namespace shepkit {

namespace {

std::vector<std::vector<bool>> bool_matrix(int rows, int cols) {
  return std::vector<std::vector<bool>>(rows, std::vector<bool>(cols, false));
}

}  // namespace

FacePoset::FacePoset(std::vector<std::vector<std::string>> labels,
                     std::vector<std::vector<std::pair<int, int>>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  size_t want = labels_.empty() ? 0 : labels_.size() - 1;
  if (covers_.size() != want)
    throw std::invalid_argument("face poset needs one cover list per consecutive rank pair");
  for (const auto& rank : labels_) {
    std::set<std::string> seen(rank.begin(), rank.end());
    if (seen.size() != rank.size())
      throw std::invalid_argument("repeated face label within a rank");
  }
  for (size_t r = 0; r < covers_.size(); ++r) {
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : covers_[r]) {
      if (i < 0 || i >= count(static_cast<int>(r)) || j < 0 ||
          j >= count(static_cast<int>(r) + 1))
        throw std::invalid_argument("cover index out of range");
      if (!seen.insert({i, j}).second)
        throw std::invalid_argument("duplicate cover pair");
    }
  }
  for (int r1 = 0; r1 + 1 < rank(); ++r1) {
    auto step = bool_matrix(count(r1), count(r1 + 1));
    for (auto [i, j] : covers_[r1]) step[i][j] = true;
    reach_[{r1, r1 + 1}] = std::move(step);
  }
  for (int span = 2; span < rank(); ++span)
    for (int r1 = 0; r1 + span < rank(); ++r1) {
      int r2 = r1 + span;
      const auto& lo = reach_[{r1, r2 - 1}];
      auto m = bool_matrix(count(r1), count(r2));
      for (int i = 0; i < count(r1); ++i)
        for (int k = 0; k < count(r2 - 1); ++k) {
          if (!lo[i][k]) continue;
          for (auto [a, b] : covers_[r2 - 1])
            if (a == k) m[i][b] = true;
        }
      reach_[{r1, r2}] = std::move(m);
    }
}

int FacePoset::count(int r) const {
  return static_cast<int>(labels_.at(r).size());
}

long long FacePoset::total_proper() const {
  long long t = 0;
  for (const auto& rank : labels_) t += static_cast<long long>(rank.size());
  return t;
}

const std::string& FacePoset::label(int r, int i) const {
  return labels_.at(r).at(i);
}

const std::vector<std::pair<int, int>>& FacePoset::covers(int r) const {
  return covers_.at(r);
}

bool FacePoset::incident(int r1, int i1, int r2, int i2) const {
  if (r1 >= r2) throw std::invalid_argument("incident() wants r1 < r2");
  const auto& m = reach_.at({r1, r2});
  return m.at(i1).at(i2);
}

Poset FacePoset::proper_poset(const std::vector<std::string>& rank_payloads) const {
  if (!rank_payloads.empty() && static_cast<int>(rank_payloads.size()) != rank())
    throw std::invalid_argument("need one payload per rank");
  std::vector<int> offset(rank() + 1, 0);
  for (int r = 0; r < rank(); ++r) offset[r + 1] = offset[r] + count(r);
  std::vector<std::pair<int, int>> less;
  for (int r = 0; r + 1 < rank(); ++r)
    for (auto [i, j] : covers_[r]) less.push_back({offset[r] + i, offset[r + 1] + j});
  std::vector<std::string> payloads;
  std::vector<int> ranks;
  for (int r = 0; r < rank(); ++r)
    for (int i = 0; i < count(r); ++i) {
      payloads.push_back(rank_payloads.empty() ? std::to_string(r) : rank_payloads[r]);
      ranks.push_back(r);
    }
  return Poset(offset[rank()], less, std::move(payloads), std::move(ranks));
}

unsigned long long FacePoset::flag_count() const {
  if (rank() == 0) return 1;
  std::vector<unsigned long long> cnt(count(0), 1);
  for (int r = 0; r + 1 < rank(); ++r) {
    std::vector<unsigned long long> next(count(r + 1), 0);
    for (auto [i, j] : covers_[r]) next[j] += cnt[i];
    cnt = std::move(next);
  }
  unsigned long long total = 0;
  for (unsigned long long c : cnt) total += c;
  return total;
}

Report FacePoset::validate() const {
  Report rep;
  rep.title = "face poset validation";
  rep.checks_version = "poset-checks/1";
  int n = rank();

  bool nonempty = true;
  for (int r = 0; r < n; ++r) nonempty = nonempty && count(r) > 0;
  rep.add("ranks-nonempty", nonempty);

  bool saturated = true;
  std::string sat_detail;
  for (int r = 0; r < n && saturated; ++r) {
    std::vector<bool> up(count(r), r + 1 >= n);
    std::vector<bool> down(count(r), r == 0);
    if (r + 1 < n)
      for (auto [i, j] : covers_[r]) up[i] = true;
    if (r > 0)
      for (auto [i, j] : covers_[r - 1]) down[j] = true;
    for (int i = 0; i < count(r); ++i)
      if (!up[i] || !down[i]) {
        saturated = false;
        sat_detail = "face " + label(r, i) + " at rank " + std::to_string(r);
        break;
      }
  }
  rep.add("chains-saturated", saturated, sat_detail);

  // Every incidence two ranks apart, the empty and top faces included, has
  // at least two intermediates.
  bool medial = true;
  std::string med_detail;
  auto record = [&](int r, int i, int j, int mids) {
    medial = false;
    med_detail = "ranks (" + std::to_string(r) + "," + std::to_string(r + 2) +
                 ") pair (" + std::to_string(i) + "," + std::to_string(j) +
                 ") has " + std::to_string(mids) + " intermediates";
  };
  for (int r = -1; r <= n - 2 && medial; ++r) {
    if (r == -1 && n == 1) {
      if (count(0) < 2) record(r, -1, -1, count(0));
      continue;
    }
    if (r == -1) {
      for (int j = 0; j < count(1) && medial; ++j) {
        int mids = 0;
        for (auto [a, b] : covers_[0])
          if (b == j) ++mids;
        if (mids < 2) record(r, -1, j, mids);
      }
      continue;
    }
    if (r == n - 2) {
      for (int i = 0; i < count(n - 2) && medial; ++i) {
        int mids = 0;
        for (auto [a, b] : covers_[n - 2])
          if (a == i) ++mids;
        if (mids < 2) record(r, i, -1, mids);
      }
      continue;
    }
    for (int i = 0; i < count(r) && medial; ++i)
      for (int j = 0; j < count(r + 2) && medial; ++j) {
        if (!incident(r, i, r + 2, j)) continue;
        int mids = 0;
        for (int k = 0; k < count(r + 1); ++k)
          if (incident(r, i, r + 1, k) && incident(r + 1, k, r + 2, j)) ++mids;
        if (mids < 2) record(r, i, j, mids);
      }
  }
  rep.add("medial-at-least-2", medial, med_detail);
  return rep;
}

FacePoset polytope_from_group(const ExtendedCoxeterDiagram& d, long long max_order) {
  if (d.size() == 0) throw std::invalid_argument("polytope needs at least one vertex");
  if (!d.is_path()) throw std::invalid_argument("polytope needs a path diagram");
  Classification cls = classify(d);
  if (!cls.is_finite()) throw std::invalid_argument("polytope needs a finite group");
  uint64_t expected = *cls.order();
  if (expected > static_cast<uint64_t>(max_order)) throw CosetLimitExceeded(max_order);
  long long cap = std::max<long long>(4 * static_cast<long long>(expected), 10000);

  Presentation pres = presentation(d);
  CosetTable reg = coset_enumerate(pres, GeneratorSubset{}, cap);
  if (static_cast<uint64_t>(reg.size()) != expected)
    throw std::logic_error("regular enumeration disagrees with the closed-form order");

  std::vector<int> path = d.path_order();
  int n = d.size();
  std::vector<int> counts(n);
  std::vector<std::vector<int>> phi(n);
  for (int r = 0; r < n; ++r) {
    GeneratorSubset t = GeneratorSubset::full(n);
    t.remove(path[r]);
    CosetTable par = coset_enumerate(pres, t, cap);
    counts[r] = par.size();
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
    phi[r] = std::move(f);
  }

  std::map<std::pair<int, int>, std::vector<std::vector<bool>>> meets;
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      meets[{r1, r2}] = bool_matrix(counts[r1], counts[r2]);
  for (int x = 0; x < reg.size(); ++x)
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2)
        meets[{r1, r2}][phi[r1][x]][phi[r2][x]] = true;

  std::vector<std::vector<std::string>> labels(n);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < counts[r]; ++i) labels[r].push_back(std::to_string(i));
  std::vector<std::vector<std::pair<int, int>>> covers(n - 1);
  for (int r = 0; r + 1 < n; ++r)
    for (int i = 0; i < counts[r]; ++i)
      for (int j = 0; j < counts[r + 1]; ++j)
        if (meets[{r, r + 1}][i][j]) covers[r].push_back({i, j});

  FacePoset p(std::move(labels), std::move(covers));
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 2; r2 < n; ++r2)
      for (int i = 0; i < counts[r1]; ++i)
        for (int j = 0; j < counts[r2]; ++j)
          if (meets[{r1, r2}][i][j] != p.incident(r1, i, r2, j))
            throw std::logic_error("coset incidence is not graded");
  return p;
}

FacePoset product(const FacePoset& p, const FacePoset& q) {
  // Work with the factors augmented by their top face; proper faces of the
  // product are the pairs short of (top, top).
  struct Aug {
    std::vector<int> counts;                            // per rank, top included
    std::vector<std::vector<std::string>> labels;       // top labeled "top"
    std::vector<std::vector<std::pair<int, int>>> covers;
  };
  auto augment = [](const FacePoset& f) {
    Aug a;
    int n = f.rank();
    for (int r = 0; r < n; ++r) {
      a.counts.push_back(f.count(r));
      std::vector<std::string> row;
      for (int i = 0; i < f.count(r); ++i) row.push_back(f.label(r, i));
      a.labels.push_back(std::move(row));
    }
    a.counts.push_back(1);
    a.labels.push_back({"top"});
    for (int r = 0; r + 1 < n; ++r) a.covers.push_back(f.covers(r));
    std::vector<std::pair<int, int>> last;
    for (int i = 0; i < (n == 0 ? 0 : f.count(n - 1)); ++i) last.push_back({i, 0});
    a.covers.push_back(std::move(last));
    return a;
  };
  Aug ap = augment(p), aq = augment(q);
  int np = p.rank(), nq = q.rank(), N = np + nq;

  std::map<std::tuple<int, int, int, int>, int> index;  // (rp, rq, ip, iq) -> index in rank
  std::vector<std::vector<std::string>> labels(N);
  for (int t = 0; t < N; ++t)
    for (int rp = std::max(0, t - nq); rp <= std::min(t, np); ++rp) {
      int rq = t - rp;
      for (int ip = 0; ip < ap.counts[rp]; ++ip)
        for (int iq = 0; iq < aq.counts[rq]; ++iq) {
          index[{rp, rq, ip, iq}] = static_cast<int>(labels[t].size());
          labels[t].push_back("(" + std::to_string(rp) + ":" + ap.labels[rp][ip] + "," +
                              std::to_string(rq) + ":" + aq.labels[rq][iq] + ")");
        }
    }

  std::vector<std::vector<std::pair<int, int>>> covers(N - 1);
  for (int t = 0; t + 1 < N; ++t)
    for (int rp = std::max(0, t - nq); rp <= std::min(t, np); ++rp) {
      int rq = t - rp;
      for (int ip = 0; ip < ap.counts[rp]; ++ip)
        for (int iq = 0; iq < aq.counts[rq]; ++iq) {
          int from = index.at({rp, rq, ip, iq});
          if (rp + 1 <= np)
            for (auto [a, b] : ap.covers[rp])
              if (a == ip) covers[t].push_back({from, index.at({rp + 1, rq, b, iq})});
          if (rq + 1 <= nq)
            for (auto [a, b] : aq.covers[rq])
              if (a == iq) covers[t].push_back({from, index.at({rp, rq + 1, ip, b})});
        }
    }
  return FacePoset(std::move(labels), std::move(covers));
}

FacePoset generalized_cube(int n, int p) {
  if (n < 1 || p < 2) throw std::invalid_argument("generalized cube needs n >= 1, p >= 2");
  std::vector<std::string> points;
  for (int i = 0; i < p; ++i) points.push_back(std::to_string(i));
  FacePoset edge({points}, {});
  FacePoset cube = edge;
  for (int k = 1; k < n; ++k) cube = product(cube, edge);
  return cube;
}

FacePoset dual(const FacePoset& p) {
  int n = p.rank();
  std::vector<std::vector<std::string>> labels(n);
  for (int r = 0; r < n; ++r) {
    int old = n - 1 - r;
    for (int i = 0; i < p.count(old); ++i) labels[r].push_back(p.label(old, i));
  }
  std::vector<std::vector<std::pair<int, int>>> covers(std::max(0, n - 1));
  for (int r = 0; r + 1 < n; ++r)
    for (auto [i, j] : p.covers(n - 2 - r)) covers[r].push_back({j, i});
  return FacePoset(std::move(labels), std::move(covers));
}

Graph incidence_graph(const FacePoset& p) {
  std::vector<int> offset(p.rank() + 1, 0);
  for (int r = 0; r < p.rank(); ++r) offset[r + 1] = offset[r] + p.count(r);
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r + 1 < p.rank(); ++r)
    for (auto [i, j] : p.covers(r)) edges.push_back({offset[r] + i, offset[r + 1] + j});
  return Graph(offset[p.rank()], std::move(edges));
}

bool poset_isomorphic(const FacePoset& a, const FacePoset& b) {
  if (a.rank() != b.rank()) return false;
  for (int r = 0; r < a.rank(); ++r)
    if (a.count(r) != b.count(r)) return false;
  auto cover_complex = [](const FacePoset& p) {
    std::vector<int> offset(p.rank() + 1, 0);
    for (int r = 0; r < p.rank(); ++r) offset[r + 1] = offset[r] + p.count(r);
    std::vector<std::vector<int>> simplices;
    std::map<int, std::string> types;
    for (int r = 0; r < p.rank(); ++r)
      for (int i = 0; i < p.count(r); ++i) {
        simplices.push_back({offset[r] + i});
        types[offset[r] + i] = std::to_string(r);
      }
    for (int r = 0; r + 1 < p.rank(); ++r)
      for (auto [i, j] : p.covers(r))
        simplices.push_back({offset[r] + i, offset[r + 1] + j});
    return SimplicialComplex(simplices, std::move(types));
  };
  return isomorphic(cover_complex(a), cover_complex(b), true);
}

int HessianData::symbol_index(const std::string& s) const {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
  if (it == symbols.end() || *it != s)
    throw std::out_of_range("unknown hessian symbol: " + s);
  return static_cast<int>(it - symbols.begin());
}

std::pair<HessianData, FacePoset> hessian() {
  HessianData h = detail::build_hessian_data();
  std::vector<std::vector<std::string>> labels(3);
  labels[0] = h.symbols;
  for (const auto& e : h.edges)
    labels[1].push_back(h.symbols[e[0]] + "+" + h.symbols[e[1]] + "+" + h.symbols[e[2]]);
  for (size_t f = 0; f < h.faces.size(); ++f)
    labels[2].push_back("f" + std::to_string(f + 1));

  auto edge_in_face = [&](int e, int f) {
    for (int v : h.edges[e])
      if (!std::binary_search(h.faces[f].begin(), h.faces[f].end(), v)) return false;
    return true;
  };
  std::vector<std::vector<std::pair<int, int>>> covers(2);
  for (size_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e]) covers[0].push_back({v, static_cast<int>(e)});
  for (size_t f = 0; f < h.faces.size(); ++f)
    for (size_t e = 0; e < h.edges.size(); ++e)
      if (edge_in_face(static_cast<int>(e), static_cast<int>(f)))
        covers[1].push_back({static_cast<int>(e), static_cast<int>(f)});
  FacePoset poset(std::move(labels), std::move(covers));
  return {std::move(h), std::move(poset)};
}

namespace {

std::array<int, 3> apply_edge(const std::vector<int>& perm, const std::array<int, 3>& e) {
  std::array<int, 3> out{perm[e[0]], perm[e[1]], perm[e[2]]};
  std::sort(out.begin(), out.end());
  return out;
}

std::array<int, 8> apply_face(const std::vector<int>& perm, const std::array<int, 8>& f) {
  std::array<int, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = perm[f[k]];
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Report verify_hessian(bool include_coset_model) {
  auto [h, poset] = hessian();
  Report rep;
  rep.title = "hessian polyhedron verification";
  rep.checks_version = "hessian-checks/1";

  rep.add("counts",
          h.symbols.size() == 27 && h.edges.size() == 72 && h.faces.size() == 27,
          std::to_string(h.symbols.size()) + " vertices, " +
              std::to_string(h.edges.size()) + " edges, " +
              std::to_string(h.faces.size()) + " faces");

  std::set<std::array<int, 3>> edge_set(h.edges.begin(), h.edges.end());
  std::set<std::array<int, 8>> face_set(h.faces.begin(), h.faces.end());
  auto on_common_edge = [&](int u, int v) {
    for (const auto& e : h.edges)
      if (std::count(e.begin(), e.end(), u) && std::count(e.begin(), e.end(), v))
        return true;
    return false;
  };
  int v013 = h.symbol_index("013"), v023 = h.symbol_index("023"),
      v022 = h.symbol_index("022");
  rep.add("worked-pair-013-023-edge", on_common_edge(v013, v023));
  rep.add("worked-pair-013-022-no-edge", !on_common_edge(v013, v022));
  rep.add("generator-a-101-to-201",
          h.perm_a[h.symbol_index("101")] == h.symbol_index("201"));

  const std::vector<const std::vector<int>*> perms{&h.perm_a, &h.perm_b, &h.perm_c};
  bool edges_ok = true;
  for (const auto* g : perms)
    for (const auto& e : h.edges) edges_ok = edges_ok && edge_set.count(apply_edge(*g, e));
  rep.add("perms-preserve-edges", edges_ok);
  bool faces_ok = true;
  for (const auto* g : perms)
    for (const auto& f : h.faces) faces_ok = faces_ok && face_set.count(apply_face(*g, f));
  rep.add("perms-preserve-faces", faces_ok);

  {
    std::set<int> orbit{h.symbol_index("012")};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v : std::vector<int>(orbit.begin(), orbit.end()))
        for (const auto* g : {&h.perm_a, &h.perm_b})
          if (orbit.insert((*g)[v]).second) grew = true;
    }
    std::set<int> face1(h.faces[0].begin(), h.faces[0].end());
    rep.add("face1-is-orbit-of-012-under-ab",
            std::vector<int>(orbit.begin(), orbit.end()) ==
                std::vector<int>(face1.begin(), face1.end()),
            "orbit size " + std::to_string(orbit.size()));
  }
  {
    std::set<std::array<int, 8>> orbit{h.faces[0]};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& f : std::vector<std::array<int, 8>>(orbit.begin(), orbit.end()))
        for (const auto* g : perms)
          if (orbit.insert(apply_face(*g, f)).second) grew = true;
    }
    rep.add("face-table-is-orbit-of-face1", orbit == face_set,
            "orbit size " + std::to_string(orbit.size()));
  }

  {
    // Pairwise intersecting edge triples with no common vertex span exactly
    // one face.
    auto common = [&](int e1, int e2) -> int {
      for (int u : h.edges[e1])
        for (int v : h.edges[e2])
          if (u == v) return u;
      return -1;
    };
    auto edge_in_face = [&](int e, int f) {
      for (int v : h.edges[e])
        if (!std::binary_search(h.faces[f].begin(), h.faces[f].end(), v)) return false;
      return true;
    };
    long long triangles = 0;
    bool ok = true;
    for (int e1 = 0; e1 < 72 && ok; ++e1)
      for (int e2 = e1 + 1; e2 < 72 && ok; ++e2) {
        int a = common(e1, e2);
        if (a < 0) continue;
        for (int e3 = e2 + 1; e3 < 72 && ok; ++e3) {
          int b = common(e1, e3), c = common(e2, e3);
          if (b < 0 || c < 0) continue;
          if (a == b && b == c) continue;
          ++triangles;
          int fills = 0;
          for (int f = 0; f < 27; ++f)
            if (edge_in_face(e1, f) && edge_in_face(e2, f) && edge_in_face(e3, f)) ++fills;
          if (fills != 1) ok = false;
        }
      }
    rep.add("prop-a1-empty-triangles", ok,
            "triples=" + std::to_string(triangles));
  }
  {
    long long empty = 0, point = 0, line = 0;
    bool ok = true;
    for (int f1 = 0; f1 < 27 && ok; ++f1)
      for (int f2 = f1 + 1; f2 < 27 && ok; ++f2) {
        std::vector<int> both;
        std::set_intersection(h.faces[f1].begin(), h.faces[f1].end(),
                              h.faces[f2].begin(), h.faces[f2].end(),
                              std::back_inserter(both));
        if (both.empty()) {
          ++empty;
        } else if (both.size() == 1) {
          ++point;
        } else if (both.size() == 3) {
          std::array<int, 3> e{both[0], both[1], both[2]};
          if (edge_set.count(e))
            ++line;
          else
            ok = false;
        } else {
          ok = false;
        }
      }
    rep.add("prop-a2-face-intersections", ok,
            "empty=" + std::to_string(empty) + " vertex=" + std::to_string(point) +
                " edge=" + std::to_string(line));
  }

  {
    bool ok = true;
    for (int f = 0; f < 27; ++f) {
      int inside = 0;
      for (size_t e = 0; e < h.edges.size(); ++e) {
        bool in = true;
        for (int v : h.edges[e])
          in = in && std::binary_search(h.faces[f].begin(), h.faces[f].end(), v);
        if (in) ++inside;
      }
      ok = ok && inside == 8;
    }
    rep.add("face-degrees-8-8", ok);
  }
  {
    bool ok = true;
    for (size_t e = 0; e < h.edges.size(); ++e) {
      int holders = 0;
      for (int f = 0; f < 27; ++f) {
        bool in = true;
        for (int v : h.edges[e])
          in = in && std::binary_search(h.faces[f].begin(), h.faces[f].end(), v);
        if (in) ++holders;
      }
      ok = ok && holders == 3;
    }
    rep.add("edge-in-3-faces", ok);
  }

  rep.add("flag-count-648", poset.flag_count() == 648,
          std::to_string(poset.flag_count()) + " flags");

  PermutationGroup sym(27, {h.perm_a, h.perm_b, h.perm_c});
  rep.add("symmetry-order-648", sym.order() == 648,
          "order " + std::to_string(sym.order()));

  {
    std::map<std::array<int, 3>, int> edge_index;
    for (size_t e = 0; e < h.edges.size(); ++e) edge_index[h.edges[e]] = static_cast<int>(e);
    std::map<std::array<int, 8>, int> face_index;
    for (size_t f = 0; f < h.faces.size(); ++f) face_index[h.faces[f]] = static_cast<int>(f);
    int e0 = -1;
    for (size_t e = 0; e < h.edges.size() && e0 < 0; ++e) {
      bool in = true;
      for (int v : h.edges[e])
        in = in && std::binary_search(h.faces[0].begin(), h.faces[0].end(), v);
      if (in) e0 = static_cast<int>(e);
    }
    std::set<std::array<int, 3>> orbit{{h.edges[e0][0], e0, 0}};
    std::vector<std::array<int, 3>> queue(orbit.begin(), orbit.end());
    while (!queue.empty()) {
      auto [v, e, f] = queue.back();
      queue.pop_back();
      for (const auto* g : perms) {
        std::array<int, 3> img{(*g)[v], edge_index.at(apply_edge(*g, h.edges[e])),
                               face_index.at(apply_face(*g, h.faces[f]))};
        if (orbit.insert(img).second) queue.push_back(img);
      }
    }
    rep.add("flag-simply-transitive", orbit.size() == 648 && sym.order() == 648,
            "flag orbit " + std::to_string(orbit.size()));
  }

  {
    auto even_pair = [&](int u, int v) {
      int agree = 0;
      for (int k = 0; k < 3; ++k)
        if (h.symbols[u][k] == h.symbols[v][k]) ++agree;
      return agree == 0 || agree == 2;
    };
    bool ok = true;
    long long even = 0;
    for (int u = 0; u < 27; ++u)
      for (int v = u + 1; v < 27; ++v) {
        bool ev = even_pair(u, v);
        if (ev) ++even;
        if (ev != on_common_edge(u, v)) ok = false;
      }
    ok = ok && even == 216;
    rep.add("even-agreement-characterization", ok, "even pairs=" + std::to_string(even));
  }

  for (const CheckEntry& c : poset.validate().checks)
    rep.add("poset-" + c.name, c.pass, c.detail);

  rep.add("self-dual", poset_isomorphic(poset, dual(poset)));

  if (include_coset_model) {
    FacePoset coset = polytope_from_group(parse_diagram("3[3]3[3]3"));
    rep.add("coset-model-isomorphic", poset_isomorphic(poset, coset));
  }
  return rep;
}

}  // namespace shepkit

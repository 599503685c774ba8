#include "shepkit/cccc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "shepkit/milnor.hpp"
#include "shepkit/polytopes.hpp"

namespace shepkit {

namespace {

std::string simplex_str(const std::vector<int>& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::string marking_message(const std::vector<std::string>& violations) {
  std::string out = "invalid marking:";
  for (const auto& v : violations) out += " " + v + ";";
  return out;
}

}  // namespace

std::string MarkedA3Complex::edge_letter(int u, int v) const {
  if (!complex.has_simplex({u, v}))
    throw std::out_of_range("no such edge");
  const std::string& tu = complex.type_of(u);
  const std::string& tv = complex.type_of(v);
  for (const char* t : {"a", "b", "c"})
    if (tu != t && tv != t) return t;
  throw std::logic_error("edge endpoints exhaust the types");
}

MarkingError::MarkingError(std::vector<std::string> violations)
    : std::runtime_error(marking_message(violations)),
      violations_(std::move(violations)) {}

MarkedA3Complex mark_a3(const SimplicialComplex& sc) {
  std::vector<std::string> bad;
  if (sc.dimension() != 2)
    bad.push_back("dimension is " + std::to_string(sc.dimension()) +
                  ", want 2");
  for (int v : sc.vertex_ids()) {
    const std::string& t = sc.type_of(v);
    if (t != "a" && t != "b" && t != "c")
      bad.push_back("vertex " + std::to_string(v) + " has type \"" + t +
                    "\"");
  }
  if (!bad.empty()) throw MarkingError(std::move(bad));

  auto chambers = sc.simplices_of_dim(2);
  auto in_some_chamber = [&](const std::vector<int>& s) {
    for (const auto& ch : chambers)
      if (std::includes(ch.begin(), ch.end(), s.begin(), s.end()))
        return true;
    return false;
  };
  for (const auto& s : sc.simplices()) {
    if (s.size() == 3) {
      std::set<std::string> seen;
      for (int v : s) seen.insert(sc.type_of(v));
      if (seen.size() != 3)
        bad.push_back("chamber " + simplex_str(s) +
                      " does not see all three types");
      continue;
    }
    if (s.size() == 2 && sc.type_of(s[0]) == sc.type_of(s[1]))
      bad.push_back("edge " + simplex_str(s) + " joins two \"" +
                    sc.type_of(s[0]) + "\" vertices");
    if (!in_some_chamber(s))
      bad.push_back("simplex " + simplex_str(s) + " lies in no chamber");
  }
  if (!bad.empty()) throw MarkingError(std::move(bad));
  return MarkedA3Complex{sc};
}

A3EdgeLengths edge_lengths() {
  const double pi = std::numbers::pi;
  auto side = [&](double x, double y, double z) {
    return std::acos((std::cos(x) + std::cos(y) * std::cos(z)) /
                     (std::sin(y) * std::sin(z)));
  };
  const double a = pi / 3, b = pi / 2, c = pi / 3;
  return {side(a, b, c), side(b, c, a), side(c, a, b)};
}

A3EdgeLengths swapped_edge_lengths() {
  A3EdgeLengths d = edge_lengths();
  return {d.len_b, d.len_a, d.len_b};
}

LoopCensus loop_audit(const A3EdgeLengths& lengths, double tol) {
  const double two_pi = 2 * std::numbers::pi;
  LoopCensus census;
  int jmax = static_cast<int>((two_pi + tol) / lengths.len_b) + 1;
  int kmax = static_cast<int>((two_pi + tol) / (2 * lengths.len_c)) + 1;
  for (int j = 0; j <= jmax; j += 2)
    for (int k = 0; k <= kmax; ++k) {
      if (j == 0 && k < 3) continue;
      if (k == 0 && j < 4) continue;
      double len = j * lengths.len_b + 2 * k * lengths.len_c;
      if (std::abs(len - two_pi) <= tol)
        census.boundary.push_back({j, k, len});
      else if (len < two_pi)
        census.admitted.push_back({j, k, len});
    }
  return census;
}

bool CCCCReport::pass() const {
  for (const auto& r : cond1)
    if (!r.pass) return false;
  for (const auto& r : cond2)
    if (!r.pass) return false;
  for (const auto& r : cond3)
    if (!r.pass) return false;
  return true;
}

CCCCReport check_cccc(const MarkedA3Complex& m) {
  CCCCReport rep;
  const SimplicialComplex& sc = m.complex;

  std::map<int, std::set<int>> adj;
  for (const auto& s : sc.simplices())
    if (s.size() == 2) {
      adj[s[0]].insert(s[1]);
      adj[s[1]].insert(s[0]);
    }
  std::vector<int> as, bs, cs;
  for (int v : sc.vertex_ids()) {
    const std::string& t = sc.type_of(v);
    if (t == "a") as.push_back(v);
    else if (t == "b") bs.push_back(v);
    else cs.push_back(v);
  }

  for (int v : as) {
    auto g = graph_girth(sc.link({v}).one_skeleton());
    rep.cond1.push_back({v, "a", g, !g || *g >= 6});
  }
  for (int v : cs) {
    auto g = graph_girth(sc.link({v}).one_skeleton());
    rep.cond1.push_back({v, "c", g, !g || *g >= 6});
  }

  for (int v : bs) {
    Graph lk = sc.link({v}).one_skeleton();
    auto sides = is_complete_bipartite(lk);
    bool ok = sides && sides->first >= 2 && sides->second >= 2;
    if (ok) {
      auto g = graph_girth(lk);
      if (!g || *g != 4)
        throw std::logic_error(
            "complete bipartite b link without an embedded 4-cycle");
    }
    rep.cond2.push_back({v, sides, ok});
  }

  auto common = [&](int u, int v, const std::vector<int>& pool) {
    std::vector<int> out;
    const auto& au = adj[u];
    const auto& av = adj[v];
    for (int w : pool)
      if (au.count(w) && av.count(w)) out.push_back(w);
    return out;
  };
  auto tri = [&](int x, int y, int z) { return sc.has_simplex({x, y, z}); };

  // (i) squares a-c-a-c: a filling b spans all four chambers
  {
    PatternResult pr;
    pr.pattern = "acac";
    for (size_t i = 0; i < as.size(); ++i)
      for (size_t j = i + 1; j < as.size(); ++j) {
        auto mids = common(as[i], as[j], cs);
        for (size_t x = 0; x < mids.size(); ++x)
          for (size_t y = x + 1; y < mids.size(); ++y) {
            ++pr.cycles;
            int fills = 0;
            for (int b : bs)
              if (adj[b].count(as[i]) && adj[b].count(as[j]) &&
                  adj[b].count(mids[x]) && adj[b].count(mids[y]) &&
                  tri(b, as[i], mids[x]) && tri(b, mids[x], as[j]) &&
                  tri(b, as[j], mids[y]) && tri(b, mids[y], as[i]))
                ++fills;
            if (fills > 0) ++pr.filled;
            if (fills > 1) pr.unique_fillers = false;
            if (fills == 0 && pr.witness.empty())
              pr.witness = {as[i], mids[x], as[j], mids[y]};
          }
      }
    pr.pass = pr.filled == pr.cycles;
    rep.cond3.push_back(std::move(pr));
  }

  // (ii) hexagons b-a-b-a-b-a and b-c-b-c-b-c: a filling vertex of the
  // third type spans all six chambers
  for (const auto& [name, mids_pool, fill_pool] :
       {std::tuple{"bababa", &as, &cs}, std::tuple{"bcbcbc", &cs, &as}}) {
    PatternResult pr;
    pr.pattern = name;
    const std::vector<int>& mids = *mids_pool;
    const std::vector<int>& fillers = *fill_pool;
    std::map<std::pair<int, int>, std::vector<int>> pair_common;
    for (size_t i = 0; i < bs.size(); ++i)
      for (size_t j = i + 1; j < bs.size(); ++j) {
        auto c = common(bs[i], bs[j], mids);
        if (!c.empty()) pair_common[{bs[i], bs[j]}] = std::move(c);
      }
    for (size_t i = 0; i < bs.size(); ++i)
      for (size_t j = i + 1; j < bs.size(); ++j) {
        auto ij = pair_common.find({bs[i], bs[j]});
        if (ij == pair_common.end()) continue;
        for (size_t k = j + 1; k < bs.size(); ++k) {
          auto jk = pair_common.find({bs[j], bs[k]});
          if (jk == pair_common.end()) continue;
          auto ik = pair_common.find({bs[i], bs[k]});
          if (ik == pair_common.end()) continue;
          for (int mij : ij->second)
            for (int mjk : jk->second)
              for (int mik : ik->second) {
                if (mij == mjk || mjk == mik || mij == mik) continue;
                ++pr.cycles;
                int fills = 0;
                for (int f : fillers)
                  if (adj[f].count(bs[i]) && adj[f].count(bs[j]) &&
                      adj[f].count(bs[k]) && adj[f].count(mij) &&
                      adj[f].count(mjk) && adj[f].count(mik) &&
                      tri(f, bs[i], mij) && tri(f, mij, bs[j]) &&
                      tri(f, bs[j], mjk) && tri(f, mjk, bs[k]) &&
                      tri(f, bs[k], mik) && tri(f, mik, bs[i]))
                    ++fills;
                if (fills > 0) ++pr.filled;
                if (fills > 1) pr.unique_fillers = false;
                if (fills == 0 && pr.witness.empty())
                  pr.witness = {bs[i], mij, bs[j], mjk, bs[k], mik};
              }
        }
      }
    pr.pass = pr.filled == pr.cycles;
    rep.cond3.push_back(std::move(pr));
  }

  // (iii) squares b-c-a-c and b-a-c-a: the diagonal from b plus its two
  // chambers
  for (const auto& [name, mids_pool, far_pool] :
       {std::tuple{"bcac", &cs, &as}, std::tuple{"baca", &as, &cs}}) {
    PatternResult pr;
    pr.pattern = name;
    const std::vector<int>& mids = *mids_pool;
    const std::vector<int>& fars = *far_pool;
    for (int b : bs)
      for (int f : fars) {
        auto between = common(b, f, mids);
        for (size_t x = 0; x < between.size(); ++x)
          for (size_t y = x + 1; y < between.size(); ++y) {
            ++pr.cycles;
            bool filled = adj[b].count(f) && tri(b, f, between[x]) &&
                          tri(b, f, between[y]);
            if (filled) ++pr.filled;
            if (!filled && pr.witness.empty())
              pr.witness = {b, between[x], f, between[y]};
          }
      }
    pr.pass = pr.filled == pr.cycles;
    rep.cond3.push_back(std::move(pr));
  }

  rep.loop_audit = loop_audit(edge_lengths());
  return rep;
}

namespace {

std::string census_str(const LoopCensus& c) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << "admitted";
  for (const auto& l : c.admitted)
    out << " (" << l.j << "," << l.k << ")=" << l.length;
  out << " boundary";
  for (const auto& l : c.boundary)
    out << " (" << l.j << "," << l.k << ")=" << l.length;
  return out.str();
}

bool census_is(const LoopCensus& c,
               const std::vector<std::pair<int, int>>& admitted,
               const std::vector<std::pair<int, int>>& boundary) {
  std::vector<std::pair<int, int>> got_a, got_b;
  for (const auto& l : c.admitted) got_a.emplace_back(l.j, l.k);
  for (const auto& l : c.boundary) got_b.emplace_back(l.j, l.k);
  return got_a == admitted && got_b == boundary;
}

struct CCCCSummary {
  bool girth_all_6 = true;
  bool b_links_k33 = true;
  std::map<std::string, PatternResult> patterns;
};

CCCCSummary summarize(const CCCCReport& rep) {
  CCCCSummary s;
  for (const auto& r : rep.cond1)
    if (!r.pass || !r.girth || *r.girth != 6) s.girth_all_6 = false;
  for (const auto& r : rep.cond2)
    if (!r.pass || !r.sides || r.sides->first != 3 || r.sides->second != 3)
      s.b_links_k33 = false;
  for (const auto& r : rep.cond3) s.patterns[r.pattern] = r;
  return s;
}

}  // namespace

Report certify_hessian_cat1(bool include_coset_model) {
  Report r;
  r.title = "Hessian CAT(1) certificate";
  r.checks_version = "hessian-cat1-checks/1";

  auto [data, poset] = hessian();
  const std::map<std::string, std::string> to_letters{
      {"0", "a"}, {"1", "b"}, {"2", "c"}};
  SimplicialComplex tab =
      derived_complex(poset.proper_poset()).retyped(to_letters);

  MarkedA3Complex marked{tab};
  bool marking_ok = true;
  std::string marking_detail;
  try {
    marked = mark_a3(tab);
  } catch (const MarkingError& e) {
    marking_ok = false;
    marking_detail = e.what();
  }
  r.add("tabulated-marking-valid", marking_ok, marking_detail);
  if (!marking_ok) return r;

  int na = 0, nb = 0, nc = 0;
  for (int v : tab.vertex_ids()) {
    const std::string& t = tab.type_of(v);
    na += t == "a";
    nb += t == "b";
    nc += t == "c";
  }
  r.add("vertex-census", na == 27 && nb == 72 && nc == 27,
        std::to_string(na) + " a + " + std::to_string(nb) + " b + " +
            std::to_string(nc) + " c");
  size_t chambers = tab.simplices_of_dim(2).size();
  r.add("chamber-count", chambers == 648, std::to_string(chambers));

  CCCCReport rep = check_cccc(marked);
  auto sum = summarize(rep);
  r.add("a-c-links-girth-6", sum.girth_all_6,
        std::to_string(rep.cond1.size()) + " links");
  r.add("b-links-k33", sum.b_links_k33,
        std::to_string(rep.cond2.size()) + " links");
  bool unique = true;
  for (const auto& [name, pr] : sum.patterns) {
    r.add("pattern-" + name, pr.pass,
          "cycles=" + std::to_string(pr.cycles) +
              " filled=" + std::to_string(pr.filled));
    unique = unique && pr.unique_fillers;
  }
  r.add("unique-fillers", unique);

  // cross-references against the polytope sweeps
  long long shared_edge_pairs = 0;
  for (size_t i = 0; i < data.faces.size(); ++i)
    for (size_t j = i + 1; j < data.faces.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(data.faces[i].begin(), data.faces[i].end(),
                            data.faces[j].begin(), data.faces[j].end(),
                            std::back_inserter(meet));
      if (meet.size() == 3) ++shared_edge_pairs;
    }
  r.add("acac-matches-face-intersections",
        sum.patterns["acac"].cycles == 3 * shared_edge_pairs,
        std::to_string(sum.patterns["acac"].cycles) + " vs 3*" +
            std::to_string(shared_edge_pairs));

  long long empty_triangles = 0;
  {
    const auto& es = data.edges;
    std::vector<std::vector<int>> meet(es.size(),
                                       std::vector<int>(es.size(), -1));
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j) {
        std::vector<int> m;
        std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(),
                              es[j].end(), std::back_inserter(m));
        if (m.size() == 1) meet[i][j] = meet[j][i] = m[0];
      }
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j) {
        if (meet[i][j] < 0) continue;
        for (size_t k = j + 1; k < es.size(); ++k) {
          if (meet[i][k] < 0 || meet[j][k] < 0) continue;
          if (meet[i][j] != meet[i][k] && meet[i][j] != meet[j][k] &&
              meet[i][k] != meet[j][k])
            ++empty_triangles;
        }
      }
  }
  r.add("bababa-matches-empty-triangles",
        sum.patterns["bababa"].cycles == empty_triangles,
        std::to_string(sum.patterns["bababa"].cycles) + " vs " +
            std::to_string(empty_triangles));
  r.add("bcbcbc-equals-bababa",
        sum.patterns["bcbcbc"].cycles == sum.patterns["bababa"].cycles);

  // numeric audit of the short-loop census
  A3EdgeLengths len = edge_lengths();
  r.add("loop-audit-census",
        census_is(rep.loop_audit, {{0, 3}, {2, 1}, {4, 0}}, {{2, 2}}),
        census_str(rep.loop_audit));
  bool lengths_ok =
      std::abs(4 * len.len_b - 4 * std::acos(1.0 / 3.0)) <= 1e-9 &&
      std::abs(6 * len.len_c - 6 * std::acos(1.0 / std::sqrt(3.0))) <= 1e-9;
  r.add("loop-audit-lengths", lengths_ok,
        "square " + std::to_string(4 * len.len_b) + ", hexagon " +
            std::to_string(6 * len.len_c));
  const double two_pi = 2 * std::numbers::pi;
  r.add("loop-audit-boundary-identity",
        std::abs(2 * len.len_b + 4 * len.len_c - two_pi) <= 1e-9);
  LoopCensus swapped = loop_audit(swapped_edge_lengths());
  bool swapped_boundary = false;
  for (const auto& l : swapped.boundary)
    if (l.j == 4 && l.k == 1) swapped_boundary = true;
  r.add("loop-audit-swapped-boundary-identity", swapped_boundary,
        census_str(swapped));

  // the a/c swap is also a valid marking (self-duality)
  SimplicialComplex flipped =
      tab.retyped({{"a", "c"}, {"c", "a"}});
  bool flip_ok = true;
  try {
    flip_ok = check_cccc(mark_a3(flipped)).pass();
  } catch (const MarkingError&) {
    flip_ok = false;
  }
  r.add("marking-swap-symmetric", flip_ok);

  if (include_coset_model) {
    auto coset =
        milnor_complex(parse_diagram("3[3]3[3]3")).complex.retyped(to_letters);
    bool coset_ok = true;
    std::string coset_detail;
    CCCCReport coset_rep;
    try {
      coset_rep = check_cccc(mark_a3(coset));
    } catch (const MarkingError& e) {
      coset_ok = false;
      coset_detail = e.what();
    }
    r.add("coset-marking-valid", coset_ok, coset_detail);
    if (coset_ok) {
      r.add("models-isomorphic", isomorphic(tab, coset, true));
      r.add("coset-cccc-pass", coset_rep.pass());
    }
  }
  return r;
}

}  // namespace shepkit

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace shepkit {

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized (i < j), sorted
};

// Abstract simplicial complex with optionally typed vertices. Simplices are
// stored subset-closed as sorted id tuples; the empty simplex is implicit.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(const std::vector<std::vector<int>>& simplices,
                             std::map<int, std::string> types = {});

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  const std::string& type_of(int v) const;
  const std::map<int, std::string>& types() const { return types_; }

  bool has_simplex(std::vector<int> s) const;
  const std::set<std::vector<int>>& simplices() const { return simplices_; }
  std::vector<std::vector<int>> simplices_of_dim(int d) const;
  int dimension() const;  // -1 for the empty complex
  long long euler_characteristic() const;
  bool is_connected() const;  // empty complex counts as connected

  // All faces tau with tau disjoint from s and tau union s a simplex.
  SimplicialComplex link(const std::vector<int>& s) const;

  // Vertices re-indexed to 0..n-1 following vertex_ids() order.
  Graph one_skeleton() const;

  // Copy with type tags renamed through the map; unmapped tags are kept.
  SimplicialComplex retyped(const std::map<std::string, std::string>& m) const;

  bool operator==(const SimplicialComplex& o) const {
    return simplices_ == o.simplices_ && types_ == o.types_;
  }

private:
  std::set<std::vector<int>> simplices_;  // nonempty, sorted tuples
  std::vector<int> vertex_ids_;           // ascending
  std::map<int, std::string> types_;
};

// Join: simplices are all unions of a simplex of a (or none) with a simplex
// of b (or none). Vertex ids of b are shifted past those of a; types carry.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct FlagReport {
  bool flag = true;
  std::vector<int> witness;  // a minimal non-simplex clique when !flag
};
FlagReport is_flag(const SimplicialComplex& sc);

// True iff every simplex extends by the apex, i.e. the complex is a cone.
bool is_cone_with_apex(const SimplicialComplex& sc, int apex);

// Finite poset with transitively closed strict order, opaque string
// payloads, and an optional rank function.
class Poset {
public:
  Poset() = default;
  Poset(int n, const std::vector<std::pair<int, int>>& strict_less,
        std::vector<std::string> payloads = {}, std::vector<int> ranks = {});

  int size() const { return n_; }
  bool less(int a, int b) const;
  bool leq(int a, int b) const { return a == b || less(a, b); }
  const std::string& payload(int i) const;
  std::optional<int> rank(int i) const;
  bool ranked() const { return !ranks_.empty(); }
  std::vector<int> maximal_elements() const;

private:
  int n_ = 0;
  std::vector<std::vector<bool>> less_;
  std::vector<std::string> payloads_;
  std::vector<int> ranks_;
};

// Componentwise order on pairs; element (i, j) gets index i * q.size() + j.
Poset poset_product(const Poset& p, const Poset& q);

// Adds one new element (index p.size()) above everything.
Poset cone(const Poset& p, const std::string& apex_payload = "apex");

// Order complex: vertices = elements, simplices = chains, types = payloads.
SimplicialComplex derived_complex(const Poset& p);

// Barycentric subdivision: vertices = nonempty simplices ordered by
// inclusion; each new vertex is typed by the decimal dimension of its cell.
SimplicialComplex bary_subdivision(const SimplicialComplex& sc);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> graph_girth(const Graph& g);

// The (m, n) of a complete bipartite graph (sides sorted, both nonempty,
// connected), or nullopt.
std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g);

// Backtracking isomorphism after degree/type partition refinement. Hard cap
// of 2000 simplices per side (std::length_error beyond it).
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                bool respect_types = false);
bool isomorphic(const Graph& a, const Graph& b);

SimplicialComplex graph_complex(const Graph& g);
Graph complete_bipartite_graph(int m, int n);
SimplicialComplex complete_bipartite_complex(int m, int n);
Graph cycle_graph(int n);
SimplicialComplex cycle_complex(int n);
Graph moebius_kantor_graph();

}  // namespace shepkit

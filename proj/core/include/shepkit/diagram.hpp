#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace shepkit {

// A vertex or edge label: an integer >= 2, or infinity.
class Label {
public:
  static Label finite(int v) { return Label(v); }
  static Label infinity() { return Label(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  // Finite value; throws for the infinite label.
  int value() const;

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Label&, const Label&) = default;

private:
  Label() = default;
  explicit Label(int v) : value_(v) {}
  std::optional<int> value_;
};

// A subset of diagram vertices by index. Diagrams hold at most 24 vertices,
// so subsets fit in one word and enumerate as 0..2^n-1.
class GeneratorSubset {
public:
  GeneratorSubset() = default;
  GeneratorSubset(std::initializer_list<int> xs);
  static GeneratorSubset from_bits(uint32_t bits) { return GeneratorSubset(bits); }
  static GeneratorSubset full(int n);

  void add(int i) { bits_ |= uint32_t(1) << i; }
  void remove(int i) { bits_ &= ~(uint32_t(1) << i); }
  bool contains(int i) const { return (bits_ >> i) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  uint32_t bits() const { return bits_; }
  std::vector<int> elements() const;

  bool subset_of(const GeneratorSubset& o) const { return (bits_ & ~o.bits_) == 0; }
  GeneratorSubset minus(const GeneratorSubset& o) const { return GeneratorSubset(bits_ & ~o.bits_); }
  GeneratorSubset intersect(const GeneratorSubset& o) const { return GeneratorSubset(bits_ & o.bits_); }
  GeneratorSubset unite(const GeneratorSubset& o) const { return GeneratorSubset(bits_ | o.bits_); }

  std::string str() const;  // "{0,2,3}"

  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
  friend auto operator<=>(const GeneratorSubset& a, const GeneratorSubset& b) {
    return a.bits_ <=> b.bits_;
  }

private:
  explicit GeneratorSubset(uint32_t bits) : bits_(bits) {}
  uint32_t bits_ = 0;
};

struct Vertex {
  std::string name;
  Label p;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An extended Coxeter diagram: vertices labeled p_i (>= 2 or inf), edges
// labeled m_ij (>= 3 or inf). m_ij = 2 is represented by edge absence; an
// edge given with label 2 is accepted and normalized away. Immutable.
class ExtendedCoxeterDiagram {
public:
  using Edge = std::tuple<int, int, Label>;

  ExtendedCoxeterDiagram() = default;
  ExtendedCoxeterDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  Label p(int i) const { return vertices_.at(i).p; }

  // Edge label; finite(2) for non-adjacent pairs.
  Label m(int i, int j) const;
  bool has_edge(int i, int j) const;
  // Present edges as (i, j, m) with i < j, sorted.
  std::vector<Edge> edges() const;
  int degree(int i) const;

  int index_of(const std::string& name) const;  // -1 when absent

  ExtendedCoxeterDiagram subdiagram(const GeneratorSubset& t) const;
  ExtendedCoxeterDiagram underlying_coxeter() const;

  std::vector<GeneratorSubset> components() const;
  bool is_connected() const { return size() <= 1 || components().size() == 1; }

  // A path diagram: connected, acyclic, max degree 2 (single vertices count).
  bool is_path() const;
  // Vertex ids along the path, starting at the endpoint with the smaller id.
  std::vector<int> path_order() const;

  friend bool operator==(const ExtendedCoxeterDiagram&, const ExtendedCoxeterDiagram&) = default;

private:
  std::vector<Vertex> vertices_;
  std::map<std::pair<int, int>, Label> edges_;  // keys (i, j) with i < j
};

// Accepts the DSL ("vertex NAME P" / "edge NAME1 NAME2 M" / "#" comments)
// or the inline linear form "p1[m1]p2[m2]...pn" for paths.
ExtendedCoxeterDiagram parse_diagram(const std::string& text);

// DSL text; parse_diagram(render_diagram(d)) == d.
std::string render_diagram(const ExtendedCoxeterDiagram& d);

// Inline form; requires a path diagram.
std::string render_inline(const ExtendedCoxeterDiagram& d);

}  // namespace shepkit

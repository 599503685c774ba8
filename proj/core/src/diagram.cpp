#include "shepkit/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace shepkit {

int Label::value() const {
  if (!value_) throw std::logic_error("Label::value on the infinite label");
  return *value_;
}

GeneratorSubset::GeneratorSubset(std::initializer_list<int> xs) {
  for (int x : xs) add(x);
}

GeneratorSubset GeneratorSubset::full(int n) {
  return GeneratorSubset(n >= 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
}

int GeneratorSubset::size() const { return std::popcount(bits_); }

std::vector<int> GeneratorSubset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string GeneratorSubset::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

namespace {

constexpr int kMaxVertices = 24;

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

ExtendedCoxeterDiagram::ExtendedCoxeterDiagram(std::vector<Vertex> vertices,
                                               std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  const int n = size();
  if (n > kMaxVertices)
    throw ValidationError("diagram has " + std::to_string(n) +
                          " vertices; at most 24 are supported");
  for (int i = 0; i < n; ++i) {
    const Vertex& v = vertices_[i];
    if (!valid_name(v.name))
      throw ValidationError("invalid vertex name '" + v.name + "'");
    if (v.p.is_finite() && v.p.value() < 2)
      throw ValidationError("vertex '" + v.name + "' has label " +
                            v.p.str() + "; vertex labels must be >= 2");
    for (int j = 0; j < i; ++j)
      if (vertices_[j].name == v.name)
        throw ValidationError("duplicate vertex name '" + v.name + "'");
  }
  for (const auto& [a, b, m] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("edge endpoint out of range");
    if (a == b)
      throw ValidationError("self-loop at vertex '" + vertices_[a].name + "'");
    if (m.is_finite() && m.value() < 2)
      throw ValidationError("edge " + vertices_[a].name + "-" +
                            vertices_[b].name + " has label " + m.str() +
                            "; edge labels must be >= 2");
    if (m == Label::finite(2)) continue;  // absence convention
    auto key = std::minmax(a, b);
    if (edges_.count(key))
      throw ValidationError("duplicate edge " + vertices_[a].name + "-" +
                            vertices_[b].name);
    if (m.is_finite() && m.value() % 2 == 1 &&
        vertices_[a].p != vertices_[b].p)
      throw ValidationError("edge " + vertices_[a].name + "-" +
                            vertices_[b].name + " has odd label " + m.str() +
                            " but vertex labels " + vertices_[a].p.str() +
                            " != " + vertices_[b].p.str());
    edges_.emplace(key, m);
  }
}

Label ExtendedCoxeterDiagram::m(int i, int j) const {
  if (i < 0 || i >= size() || j < 0 || j >= size() || i == j)
    throw std::out_of_range("ExtendedCoxeterDiagram::m");
  auto it = edges_.find(std::minmax(i, j));
  return it == edges_.end() ? Label::finite(2) : it->second;
}

bool ExtendedCoxeterDiagram::has_edge(int i, int j) const {
  if (i == j) return false;
  return edges_.count(std::minmax(i, j)) != 0;
}

std::vector<ExtendedCoxeterDiagram::Edge> ExtendedCoxeterDiagram::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, m] : edges_) out.emplace_back(key.first, key.second, m);
  return out;
}

int ExtendedCoxeterDiagram::degree(int i) const {
  int d = 0;
  for (const auto& [key, m] : edges_)
    if (key.first == i || key.second == i) ++d;
  return d;
}

int ExtendedCoxeterDiagram::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i].name == name) return i;
  return -1;
}

ExtendedCoxeterDiagram ExtendedCoxeterDiagram::subdiagram(
    const GeneratorSubset& t) const {
  std::vector<int> ids = t.elements();
  for (int i : ids)
    if (i >= size()) throw std::out_of_range("subdiagram: vertex id out of range");
  std::vector<int> new_id(size(), -1);
  std::vector<Vertex> verts;
  for (int i : ids) {
    new_id[i] = static_cast<int>(verts.size());
    verts.push_back(vertices_[i]);
  }
  std::vector<Edge> es;
  for (const auto& [key, m] : edges_)
    if (new_id[key.first] >= 0 && new_id[key.second] >= 0)
      es.emplace_back(new_id[key.first], new_id[key.second], m);
  return ExtendedCoxeterDiagram(std::move(verts), std::move(es));
}

ExtendedCoxeterDiagram ExtendedCoxeterDiagram::underlying_coxeter() const {
  std::vector<Vertex> verts = vertices_;
  for (Vertex& v : verts) v.p = Label::finite(2);
  std::vector<Edge> es;
  for (const auto& [key, m] : edges_) es.emplace_back(key.first, key.second, m);
  return ExtendedCoxeterDiagram(std::move(verts), std::move(es));
}

std::vector<GeneratorSubset> ExtendedCoxeterDiagram::components() const {
  std::vector<GeneratorSubset> out;
  std::vector<bool> seen(size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    GeneratorSubset comp;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.add(v);
      for (int w = 0; w < size(); ++w)
        if (!seen[w] && has_edge(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.push_back(comp);
  }
  return out;
}

bool ExtendedCoxeterDiagram::is_path() const {
  if (size() == 0 || !is_connected()) return false;
  if (static_cast<int>(edges_.size()) != size() - 1) return false;
  for (int i = 0; i < size(); ++i)
    if (degree(i) > 2) return false;
  return true;
}

std::vector<int> ExtendedCoxeterDiagram::path_order() const {
  if (!is_path()) throw ValidationError("path_order: diagram is not a path");
  if (size() == 1) return {0};
  int start = -1;
  for (int i = 0; i < size(); ++i)
    if (degree(i) == 1) {
      start = i;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < size()) {
    for (int w = 0; w < size(); ++w)
      if (w != prev && has_edge(cur, w)) {
        order.push_back(w);
        prev = cur;
        cur = w;
        break;
      }
  }
  return order;
}

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (c == '[' || c == ']') {
      out.push_back({std::string(1, c), line, col});
      advance(c);
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      Token t{"", line, col};
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        t.text += text[i];
        advance(text[i++]);
      }
      out.push_back(std::move(t));
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  return out;
}

Label parse_label(const Token& t) {
  if (t.text == "inf") return Label::infinity();
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(t.line, t.col,
                       "expected an integer or 'inf', got '" + t.text + "'");
  try {
    return Label::finite(std::stoi(t.text));
  } catch (const std::out_of_range&) {
    throw ParseError(t.line, t.col, "label '" + t.text + "' out of range");
  }
}

ExtendedCoxeterDiagram parse_inline(const std::vector<Token>& toks) {
  std::vector<Vertex> verts;
  std::vector<ExtendedCoxeterDiagram::Edge> edges;
  size_t i = 0;
  verts.push_back({"s1", parse_label(toks[i++])});
  while (i < toks.size()) {
    if (toks[i].text != "[")
      throw ParseError(toks[i].line, toks[i].col,
                       "expected '[', got '" + toks[i].text + "'");
    ++i;
    if (i >= toks.size())
      throw ParseError(toks.back().line, toks.back().col + 1,
                       "expected an edge label after '['");
    Label m = parse_label(toks[i++]);
    if (i >= toks.size() || toks[i].text != "]")
      throw ParseError(i < toks.size() ? toks[i].line : toks.back().line,
                       i < toks.size() ? toks[i].col : toks.back().col + 1,
                       "expected ']'");
    ++i;
    if (i >= toks.size())
      throw ParseError(toks.back().line, toks.back().col + 1,
                       "expected a vertex label after ']'");
    int a = static_cast<int>(verts.size()) - 1;
    verts.push_back({"s" + std::to_string(verts.size() + 1),
                     parse_label(toks[i++])});
    edges.emplace_back(a, a + 1, m);
  }
  return ExtendedCoxeterDiagram(std::move(verts), std::move(edges));
}

ExtendedCoxeterDiagram parse_dsl(const std::vector<Token>& toks) {
  std::vector<Vertex> verts;
  std::vector<ExtendedCoxeterDiagram::Edge> edges;
  std::map<std::string, int> by_name;
  auto lookup = [&](const Token& t) {
    auto it = by_name.find(t.text);
    if (it == by_name.end())
      throw ParseError(t.line, t.col, "unknown vertex '" + t.text + "'");
    return it->second;
  };
  size_t i = 0;
  while (i < toks.size()) {
    const Token& head = toks[i];
    int line = head.line;
    std::vector<const Token*> row;
    while (i < toks.size() && toks[i].line == line) row.push_back(&toks[i++]);
    if (head.text == "vertex") {
      if (row.size() != 3)
        throw ParseError(head.line, head.col, "expected: vertex NAME P");
      if (!valid_name(row[1]->text))
        throw ParseError(row[1]->line, row[1]->col,
                         "invalid vertex name '" + row[1]->text + "'");
      if (by_name.count(row[1]->text))
        throw ParseError(row[1]->line, row[1]->col,
                         "duplicate vertex '" + row[1]->text + "'");
      by_name[row[1]->text] = static_cast<int>(verts.size());
      verts.push_back({row[1]->text, parse_label(*row[2])});
    } else if (head.text == "edge") {
      if (row.size() != 4)
        throw ParseError(head.line, head.col, "expected: edge NAME1 NAME2 M");
      edges.emplace_back(lookup(*row[1]), lookup(*row[2]), parse_label(*row[3]));
    } else {
      throw ParseError(head.line, head.col,
                       "expected 'vertex' or 'edge', got '" + head.text + "'");
    }
  }
  return ExtendedCoxeterDiagram(std::move(verts), std::move(edges));
}

}  // namespace

ExtendedCoxeterDiagram parse_diagram(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  if (toks.empty()) throw ParseError(1, 1, "empty input");
  const std::string& first = toks[0].text;
  if (first == "vertex" || first == "edge") return parse_dsl(toks);
  return parse_inline(toks);
}

std::string render_diagram(const ExtendedCoxeterDiagram& d) {
  std::ostringstream out;
  for (const Vertex& v : d.vertices())
    out << "vertex " << v.name << " " << v.p.str() << "\n";
  for (const auto& [a, b, m] : d.edges())
    out << "edge " << d.vertex(a).name << " " << d.vertex(b).name << " "
        << m.str() << "\n";
  return out.str();
}

std::string render_inline(const ExtendedCoxeterDiagram& d) {
  std::vector<int> order = d.path_order();
  std::string out = d.p(order[0]).str();
  for (size_t i = 1; i < order.size(); ++i) {
    out += "[" + d.m(order[i - 1], order[i]).str() + "]";
    out += d.p(order[i]).str();
  }
  return out;
}

}  // namespace shepkit

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessian_internal.hpp"

namespace shepkit::detail {

namespace {

// Cycle notation on vertex symbols.
const char* const kPermA =
    "(101 201 301)(102 202 302)(103 203 303)"
    "(110 210 310)(120 220 320)(130 230 330)";
const char* const kPermB =
    "(012 230 103)(013 102 320)(021 203 130)"
    "(023 310 201)(031 120 302)(032 301 210)";
const char* const kPermC =
    "(011 012 013)(021 022 023)(031 032 033)"
    "(101 102 103)(201 202 203)(301 302 303)";

// The 27 faces, 8 vertex symbols each.
const char* const kFaces =
    "012 021 103 203 303 130 230 330\n"
    "302 022 023 110 301 303 230 021\n"
    "202 022 310 201 023 130 021 203\n"
    "320 022 101 310 032 203 012 330\n"
    "102 022 101 023 210 021 103 330\n"
    "011 023 102 202 302 130 230 330\n"
    "220 022 210 032 301 012 230 103\n"
    "120 022 032 201 110 130 303 012\n"
    "031 022 310 110 210 303 103 203\n"
    "011 310 320 202 031 021 103 330\n"
    "320 023 102 310 033 201 013 330\n"
    "220 023 210 033 302 013 230 101\n"
    "120 023 033 202 110 130 301 013\n"
    "032 023 310 110 210 301 101 201\n"
    "220 021 210 031 303 011 230 102\n"
    "120 021 031 203 110 130 302 011\n"
    "033 021 310 110 210 302 102 202\n"
    "220 310 032 033 031 102 103 101\n"
    "220 203 032 120 303 011 103 320\n"
    "033 203 201 110 032 031 320 202\n"
    "220 201 301 033 120 320 012 101\n"
    "220 130 301 302 303 011 012 013\n"
    "033 303 301 210 032 031 120 302\n"
    "320 230 101 102 103 011 012 013\n"
    "220 202 302 031 120 320 013 102\n"
    "120 330 201 202 203 011 012 013\n"
    "013 022 101 201 301 130 230 330\n";

// Integers a + b*w with w a primitive cube root of unity, w^2 = -1 - w.
struct Eis {
  long long a = 0;
  long long b = 0;
  friend Eis operator-(Eis x, Eis y) { return {x.a - y.a, x.b - y.b}; }
  friend Eis operator*(Eis x, Eis y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const Eis&, const Eis&) = default;
  bool zero() const { return a == 0 && b == 0; }
};

Eis omega_pow(int k) {
  switch (((k - 1) % 3 + 3) % 3) {
    case 0: return {0, 1};    // w
    case 1: return {-1, -1};  // w^2
    default: return {1, 0};   // w^3 = 1
  }
}

Eis negate(Eis x) { return {-x.a, -x.b}; }

std::array<Eis, 3> coordinates(const std::string& s) {
  size_t z = s.find('0');
  int d0 = s[0] - '0', d1 = s[1] - '0', d2 = s[2] - '0';
  if (z == 0) return {Eis{0, 0}, omega_pow(d1), negate(omega_pow(d2))};
  if (z == 1) return {negate(omega_pow(d0)), Eis{0, 0}, omega_pow(d2)};
  return {omega_pow(d0), negate(omega_pow(d1)), Eis{0, 0}};
}

bool collinear(const std::array<Eis, 3>& p, const std::array<Eis, 3>& q,
               const std::array<Eis, 3>& r) {
  std::array<Eis, 3> u{q[0] - p[0], q[1] - p[1], q[2] - p[2]};
  std::array<Eis, 3> v{r[0] - p[0], r[1] - p[1], r[2] - p[2]};
  for (int k = 0; k < 3; ++k)
    for (int l = k + 1; l < 3; ++l)
      if (!(u[k] * v[l] - u[l] * v[k]).zero()) return false;
  return true;
}

std::vector<int> parse_cycles(const std::string& text,
                              const std::vector<std::string>& symbols) {
  auto index = [&](const std::string& s) {
    auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
    if (it == symbols.end() || *it != s)
      throw std::logic_error("unknown symbol in permutation: " + s);
    return static_cast<int>(it - symbols.begin());
  };
  std::vector<int> perm(symbols.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    size_t end = text.find(')', pos);
    if (end == std::string::npos) throw std::logic_error("unbalanced cycle");
    std::istringstream cyc(text.substr(pos + 1, end - pos - 1));
    std::vector<int> ids;
    std::string tok;
    while (cyc >> tok) ids.push_back(index(tok));
    for (size_t k = 0; k < ids.size(); ++k)
      perm[ids[k]] = ids[(k + 1) % ids.size()];
    pos = end + 1;
  }
  return perm;
}

void check_bijection(const std::vector<int>& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (int x : perm) {
    if (x < 0 || x >= static_cast<int>(perm.size()) || hit[x])
      throw std::logic_error("permutation table is not a bijection");
    hit[x] = true;
  }
}

}  // namespace

HessianData build_hessian_data() {
  HessianData h;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      h.symbols.push_back({'0', char('0' + i), char('0' + j)});
      h.symbols.push_back({char('0' + j), '0', char('0' + i)});
      h.symbols.push_back({char('0' + i), char('0' + j), '0'});
    }
  std::sort(h.symbols.begin(), h.symbols.end());
  if (h.symbols.size() != 27 ||
      std::adjacent_find(h.symbols.begin(), h.symbols.end()) !=
          h.symbols.end())
    throw std::logic_error("hessian symbol set malformed");

  h.perm_a = parse_cycles(kPermA, h.symbols);
  h.perm_b = parse_cycles(kPermB, h.symbols);
  h.perm_c = parse_cycles(kPermC, h.symbols);
  check_bijection(h.perm_a);
  check_bijection(h.perm_b);
  check_bijection(h.perm_c);

  // Two vertices share an edge iff their symbols agree in an even number of
  // positions; the edge itself is the unique affine line through them, which
  // carries exactly three of the 27 points. Nine further all-odd collinear
  // triples exist and are not edges.
  auto even_pair = [&](int u, int v) {
    int agree = 0;
    for (int k = 0; k < 3; ++k)
      if (h.symbols[u][k] == h.symbols[v][k]) ++agree;
    return agree == 0 || agree == 2;
  };
  std::vector<std::array<Eis, 3>> pts;
  for (const std::string& s : h.symbols) pts.push_back(coordinates(s));
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j)
      for (int k = j + 1; k < 27; ++k)
        if (even_pair(i, j) && even_pair(i, k) && even_pair(j, k) &&
            collinear(pts[i], pts[j], pts[k]))
          h.edges.push_back({i, j, k});
  std::sort(h.edges.begin(), h.edges.end());
  if (h.edges.size() != 72) throw std::logic_error("hessian edge count wrong");
  std::vector<std::vector<int>> pair_edges(27, std::vector<int>(27, -1));
  for (size_t e = 0; e < h.edges.size(); ++e)
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        int u = h.edges[e][x], v = h.edges[e][y];
        if (pair_edges[u][v] >= 0)
          throw std::logic_error("vertex pair on two hessian edges");
        pair_edges[u][v] = pair_edges[v][u] = static_cast<int>(e);
      }
  int covered = 0;
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j)
      if (even_pair(i, j)) {
        ++covered;
        if (pair_edges[i][j] < 0)
          throw std::logic_error("even-agreement pair misses its edge");
      }
  if (covered != 216) throw std::logic_error("even-agreement pair count wrong");

  std::istringstream rows(kFaces);
  std::string line;
  while (std::getline(rows, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::array<int, 8> face{};
    std::string tok;
    int k = 0;
    while (row >> tok) {
      if (k >= 8) throw std::logic_error("face row too long");
      auto it = std::lower_bound(h.symbols.begin(), h.symbols.end(), tok);
      if (it == h.symbols.end() || *it != tok)
        throw std::logic_error("unknown symbol in face table: " + tok);
      face[k++] = static_cast<int>(it - h.symbols.begin());
    }
    if (k != 8) throw std::logic_error("face row too short");
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw std::logic_error("repeated symbol in face row");
    h.faces.push_back(face);
  }
  if (h.faces.size() != 27) throw std::logic_error("hessian face count wrong");
  return h;
}

}  // namespace shepkit::detail

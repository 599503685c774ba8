#include "shepkit/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace shepkit {

namespace {

std::vector<int> prod_word(int gi, int gj, int m) {
  // prod(s_i, s_j; m): (s_i s_j)^{m/2} for even m, (s_i s_j)^{(m-1)/2} s_i
  // for odd m. Symbols are plain generators.
  std::vector<int> w;
  for (int k = 0; k < m; ++k) w.push_back(2 * (k % 2 == 0 ? gi : gj));
  return w;
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& s : out) s ^= 1;
  return out;
}

}  // namespace

Presentation presentation(const ExtendedCoxeterDiagram& d) {
  Presentation p;
  p.ngens = d.size();
  for (int i = 0; i < d.size(); ++i) {
    if (!d.p(i).is_finite()) continue;
    std::vector<int> w(d.p(i).value(), 2 * i);
    p.relators.push_back(std::move(w));
  }
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      Label m = d.m(i, j);
      if (!m.is_finite()) continue;
      std::vector<int> w = prod_word(i, j, m.value());
      std::vector<int> back = inverse_word(prod_word(j, i, m.value()));
      w.insert(w.end(), back.begin(), back.end());
      p.relators.push_back(std::move(w));
    }
  return p;
}

namespace {

// HLT enumerator with in-place coincidence collapse (union-find), full row
// filling, lookahead-and-compress at the cap, and a final verification pass.
class Enumerator {
public:
  Enumerator(const Presentation& p, const GeneratorSubset& t, long long cap)
      : ngens_(p.ngens), width_(2 * p.ngens), relators_(p.relators), cap_(cap) {
    if (ngens_ == 0) {
      // The trivial group: one coset regardless of t.
      return;
    }
    subgroup_ = t.elements();
    new_row();
    for (int g : subgroup_) {
      force(0, 2 * g, 0);
      process_queue();
    }
  }

  std::vector<int32_t> run() {
    if (ngens_ == 0) return {};
    for (int r = 0; r < rows(); ++r) {
      if (!alive(r)) continue;
      for (const std::vector<int>& w : relators_) {
        scan_and_fill(r, w);
        if (!alive(r)) break;
      }
      if (!alive(r)) continue;
      for (int s = 0; s < width_; ++s)
        if (lookup(r, s) < 0) {
          int c = new_row();
          force(find(r), s, c);
          process_queue();
          if (!alive(r)) break;
        }
    }
    compress();
    verify();
    return standardize();
  }

  const std::vector<int>& subgroup() const { return subgroup_; }

private:
  int rows() const { return static_cast<int>(parent_.size()); }
  bool alive(int r) const { return parent_[r] == r; }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  int32_t& raw(int r, int s) { return table_[size_t(r) * width_ + s]; }

  int lookup(int r, int s) {
    int32_t t = raw(find(r), s);
    return t < 0 ? -1 : find(t);
  }

  int new_row() {
    if (live_ >= cap_) recover();
    parent_.push_back(rows());
    table_.resize(table_.size() + width_, -1);
    ++live_;
    return rows() - 1;
  }

  // Record x.s = y, merging whatever that contradicts.
  void force(int x, int s, int y) {
    x = find(x);
    y = find(y);
    int cur = raw(x, s) < 0 ? -1 : find(raw(x, s));
    if (cur == y && raw(x, s) >= 0) {
      // ensure the inverse entry exists too
    } else if (cur >= 0 && cur != y) {
      queue_.emplace_back(cur, y);
      return;
    }
    raw(x, s) = y;
    int back = raw(y, s ^ 1) < 0 ? -1 : find(raw(y, s ^ 1));
    if (back < 0)
      raw(y, s ^ 1) = x;
    else if (back != x)
      queue_.emplace_back(back, x);
  }

  void process_queue() {
    while (!queue_.empty()) {
      auto [a, b] = queue_.front();
      queue_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // keep the smaller index
      parent_[b] = a;
      --live_;
      for (int s = 0; s < width_; ++s) {
        int32_t t = raw(b, s);
        if (t < 0) continue;
        force(a, s, find(t));
      }
    }
  }

  void scan_and_fill(int r, const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (;;) {
      r = find(r);
      int f = r, i = 0;
      while (i < n) {
        int t = lookup(f, w[i]);
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i == n) {
        if (f != r) {
          queue_.emplace_back(f, r);
          process_queue();
        }
        return;
      }
      int b = r, j = n;
      while (j > i + 1) {
        int t = lookup(b, w[j - 1] ^ 1);
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i + 1) {
        force(f, w[i], b);
        process_queue();
        return;
      }
      if (j == i) {
        queue_.emplace_back(f, b);
        process_queue();
        return;
      }
      int c = new_row();
      force(find(f), w[i], c);
      process_queue();
      // loop: rescan from the (possibly merged) start
    }
  }

  // Deduction-only lookahead over all live rows; called when the cap is
  // hit. Never compresses: row indices held by in-flight scans must stay
  // valid, so dead rows are only reclaimed at the end.
  void recover() {
    for (int r = 0; r < rows(); ++r) {
      if (!alive(r)) continue;
      for (const std::vector<int>& w : relators_) {
        scan_deduce(r, w);
        if (!alive(r)) break;
      }
    }
    if (live_ >= cap_) throw CosetLimitExceeded(cap_);
  }

  void scan_deduce(int r, const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    r = find(r);
    int f = r, i = 0;
    while (i < n) {
      int t = lookup(f, w[i]);
      if (t < 0) break;
      f = t;
      ++i;
    }
    if (i == n) {
      if (f != r) {
        queue_.emplace_back(f, r);
        process_queue();
      }
      return;
    }
    int b = r, j = n;
    while (j > i + 1) {
      int t = lookup(b, w[j - 1] ^ 1);
      if (t < 0) break;
      b = t;
      --j;
    }
    if (j == i + 1) {
      force(f, w[i], b);
      process_queue();
    } else if (j == i) {
      queue_.emplace_back(f, b);
      process_queue();
    }
  }

  void compress() {
    std::vector<int32_t> remap(rows(), -1);
    int next = 0;
    for (int r = 0; r < rows(); ++r)
      if (alive(r)) remap[r] = next++;
    std::vector<int32_t> table(size_t(next) * width_, -1);
    for (int r = 0; r < rows(); ++r) {
      if (!alive(r)) continue;
      for (int s = 0; s < width_; ++s) {
        int32_t t = raw(r, s);
        if (t >= 0) table[size_t(remap[r]) * width_ + s] = remap[find(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    for (int r = 0; r < next; ++r) parent_[r] = r;
  }

  void verify() {
    for (int r = 0; r < rows(); ++r)
      for (int s = 0; s < width_; ++s)
        if (raw(r, s) < 0) throw std::logic_error("incomplete coset table");
    for (int r = 0; r < rows(); ++r)
      for (const std::vector<int>& w : relators_) {
        int f = r;
        for (int s : w) f = raw(f, s);
        if (f != r) throw std::logic_error("relator open in coset table");
      }
    for (int g : subgroup_)
      if (raw(0, 2 * g) != 0)
        throw std::logic_error("subgroup generator moves coset 0");
  }

  std::vector<int32_t> standardize() {
    const int n = rows();
    std::vector<int32_t> order(n, -1);
    std::vector<int> bfs{0};
    order[0] = 0;
    int next = 1;
    for (size_t k = 0; k < bfs.size(); ++k)
      for (int s = 0; s < width_; ++s) {
        int t = raw(bfs[k], s);
        if (order[t] < 0) {
          order[t] = next++;
          bfs.push_back(t);
        }
      }
    if (next != n) throw std::logic_error("coset table not transitive");
    std::vector<int32_t> out(size_t(n) * width_);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < width_; ++s)
        out[size_t(order[r]) * width_ + s] = order[raw(r, s)];
    return out;
  }

  int ngens_;
  int width_;
  std::vector<std::vector<int>> relators_;
  long long cap_;
  std::vector<int> subgroup_;
  std::vector<int32_t> table_;
  std::vector<int32_t> parent_;
  std::deque<std::pair<int, int>> queue_;
  long long live_ = 0;
};

}  // namespace

CosetTable::CosetTable(int ngens, std::vector<int> subgroup_generators,
                       std::vector<int32_t> table)
    : ngens_(ngens),
      subgroup_gens_(std::move(subgroup_generators)),
      table_(std::move(table)) {}

CosetTable coset_enumerate(const Presentation& p, const GeneratorSubset& t,
                           long long max_cosets) {
  for (int g : t.elements())
    if (g >= p.ngens)
      throw std::out_of_range("subgroup generator out of range");
  if (p.ngens == 0) return CosetTable(0, {}, {});
  Enumerator e(p, t, max_cosets);
  std::vector<int32_t> table = e.run();
  return CosetTable(p.ngens, t.elements(), std::move(table));
}

PermutationGroup::PermutationGroup(int degree,
                                   std::vector<std::vector<int>> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != degree_)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> hit(degree_, false);
    for (int x : g) {
      if (x < 0 || x >= degree_ || hit[x])
        throw std::invalid_argument("generator is not a permutation");
      hit[x] = true;
    }
  }
}

const std::vector<std::vector<int>>& PermutationGroup::elements() const {
  if (!elements_.empty() || degree_ == 0) return elements_;
  std::vector<int> id(degree_);
  for (int i = 0; i < degree_; ++i) id[i] = i;
  std::map<std::vector<int>, bool> seen;
  seen[id] = true;
  elements_.push_back(id);
  for (size_t k = 0; k < elements_.size(); ++k) {
    std::vector<int> cur = elements_[k];
    for (const auto& g : gens_) {
      std::vector<int> next(degree_);
      for (int i = 0; i < degree_; ++i) next[i] = g[cur[i]];
      if (!seen.count(next)) {
        seen[next] = true;
        elements_.push_back(std::move(next));
      }
    }
  }
  return elements_;
}

uint64_t PermutationGroup::order() const {
  if (degree_ == 0) return 1;
  return elements().size();
}

PermutationGroup parabolic_action(const CosetTable& t) {
  std::vector<std::vector<int>> gens;
  for (int g = 0; g < t.ngens(); ++g) {
    std::vector<int> perm(t.size());
    for (int r = 0; r < t.size(); ++r) perm[r] = t.act(r, g);
    gens.push_back(std::move(perm));
  }
  return PermutationGroup(t.size(), std::move(gens));
}

std::optional<std::vector<int>> action_isomorphism(
    const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
    const std::vector<int>& base_candidates) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return std::nullopt;
  const int na = static_cast<int>(a[0].size());
  const int nb = static_cast<int>(b[0].size());
  if (na != nb) return std::nullopt;
  std::vector<int> candidates = base_candidates;
  if (candidates.empty())
    for (int c = 0; c < nb; ++c) candidates.push_back(c);
  for (int c : candidates) {
    std::vector<int> f(na, -1);
    f[0] = c;
    std::vector<int> bfs{0};
    bool ok = true;
    for (size_t k = 0; k < bfs.size() && ok; ++k) {
      int x = bfs[k];
      for (size_t g = 0; g < a.size() && ok; ++g) {
        int y = a[g][x], fy = b[g][f[x]];
        if (f[y] < 0) {
          f[y] = fy;
          bfs.push_back(y);
        } else if (f[y] != fy) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    if (std::find(f.begin(), f.end(), -1) != f.end()) continue;  // not transitive
    std::vector<bool> hit(nb, false);
    for (int y : f) {
      if (hit[y]) {
        ok = false;
        break;
      }
      hit[y] = true;
    }
    if (ok) return f;
  }
  return std::nullopt;
}

std::optional<uint64_t> group_order(const ExtendedCoxeterDiagram& d,
                                    long long max_cosets) {
  Classification cls = classify(d);
  if (!cls.is_finite()) return std::nullopt;
  uint64_t total = 1;
  for (const auto& comp : cls.components) {
    ExtendedCoxeterDiagram sub = d.subdiagram(comp.support);
    CosetTable t = coset_enumerate(presentation(sub), {}, max_cosets);
    auto count = static_cast<uint64_t>(t.size());
    if (count != comp.type.order())
      throw std::logic_error("enumerated order " + std::to_string(count) +
                             " != closed form " +
                             std::to_string(comp.type.order()) + " for " +
                             comp.type.str());
    total *= count;
  }
  return total;
}

}  // namespace shepkit

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// Labeling-independent representative: the graph6 bytes of the canonically
// relabeled graph.  Two CubicGraphs are isomorphic iff their codes are
// byte-equal.
struct CanonicalCode {
  std::string code;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Ordered partition refinement for cubic graphs.  All degrees are 3, so the
// seed invariant uses per-vertex distance histograms plus short-cycle
// participation; refinement then splits cells by the multiset of neighbor
// cells until stable.  Cells are kept in an order determined only by
// invariant values, never by vertex ids, so the whole scheme commutes with
// relabeling.
class Refiner {
 public:
  explicit Refiner(const CubicGraph& g) : g_(g), n_(g.n()) {}

  using Partition = std::vector<std::vector<int>>;  // ordered list of cells

  Partition initial() const {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n_; ++v) groups[seed_key(v)].push_back(v);
    Partition cells;
    for (auto& [key, members] : groups) cells.push_back(std::move(members));
    refine(cells);
    return cells;
  }

  void refine(Partition& cells) const {
    std::vector<int> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      Partition next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::array<int, 3>, std::vector<int>> split;
        for (int v : cell) {
          std::array<int, 3> sig;
          const auto& nb = g_.neighbors(v);
          for (int k = 0; k < 3; ++k) sig[k] = cell_of[nb[k]];
          std::sort(sig.begin(), sig.end());
          split[sig].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, members] : split) next.push_back(std::move(members));
      }
      cells = std::move(next);
    }
  }

  // Split v into its own cell, placed ahead of the rest of its cell, then
  // re-refine.
  Partition individualize(const Partition& cells, size_t cell_idx, int v) const {
    Partition next;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c != cell_idx) {
        next.push_back(cells[c]);
        continue;
      }
      next.push_back({v});
      std::vector<int> rest;
      for (int w : cells[c])
        if (w != v) rest.push_back(w);
      next.push_back(std::move(rest));
    }
    refine(next);
    return next;
  }

 private:
  std::vector<int> seed_key(int v) const {
    // BFS distance histogram from v.
    std::vector<int> dist(n_, -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (int w : g_.neighbors(x))
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
    }
    std::vector<int> hist;
    for (int d : dist) {
      if (d >= static_cast<int>(hist.size())) hist.resize(d + 1, 0);
      ++hist[d];
    }
    // Triangle and 4-cycle counts through v sharpen the split.
    int tri = 0, quad = 0;
    const auto& nb = g_.neighbors(v);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        if (g_.has_edge(nb[a], nb[b])) ++tri;
        for (int w : g_.neighbors(nb[a]))
          if (w != v && w != nb[b] && g_.has_edge(w, nb[b])) ++quad;
      }
    hist.push_back(tri);
    hist.push_back(quad);
    return hist;
  }

  const CubicGraph& g_;
  int n_;
};

// Upper-triangle bits in graph6 column order under the labeling
// order[new_id] = old_id.
inline std::vector<uint8_t> adjacency_bits(const CubicGraph& g,
                                           const std::vector<int>& order) {
  int n = g.n();
  std::vector<uint8_t> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);
  return bits;
}

}  // namespace detail

// The canonical labeling: refinement plus backtracking over the remaining
// cell choices, keeping the labeling whose adjacency bit string (graph6
// column order) is lexicographically minimal.  Returns order[new_id] = old_id.
inline std::vector<int> canonical_order(const CubicGraph& g) {
  detail::Refiner refiner(g);
  auto start = refiner.initial();

  std::vector<int> best_order;
  std::vector<uint8_t> best_bits;

  auto is_discrete = [](const detail::Refiner::Partition& p) {
    for (const auto& cell : p)
      if (cell.size() != 1) return false;
    return true;
  };

  // Depth-first over individualization choices; leaves are discrete
  // partitions, i.e. complete labelings.
  std::vector<detail::Refiner::Partition> stack{start};
  while (!stack.empty()) {
    auto part = std::move(stack.back());
    stack.pop_back();
    if (is_discrete(part)) {
      std::vector<int> order;
      order.reserve(g.n());
      for (const auto& cell : part) order.push_back(cell[0]);
      auto bits = detail::adjacency_bits(g, order);
      if (best_bits.empty() || bits < best_bits) {
        best_bits = std::move(bits);
        best_order = std::move(order);
      }
      continue;
    }
    size_t target = 0;
    while (part[target].size() == 1) ++target;
    for (int v : part[target]) stack.push_back(refiner.individualize(part, target, v));
  }

  // order maps new->old; callers mostly want old->new.
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[best_order[i]] = i;
  return perm;
}

inline CubicGraph canonical_relabel(const CubicGraph& g) {
  return g.relabel(canonical_order(g));
}

inline CanonicalCode canonical_form(const CubicGraph& g) {
  return CanonicalCode{to_graph6(canonical_relabel(g))};
}

inline bool is_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.n() != b.n()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Multiset of canonical codes: the object compared when two decompositions
// are claimed to yield the same ancestor genes.
struct GeneMultiset {
  // Strictly ascending codes with positive multiplicities.
  std::vector<std::pair<CanonicalCode, int>> entries;

  static GeneMultiset from_codes(std::vector<CanonicalCode> codes) {
    std::sort(codes.begin(), codes.end());
    GeneMultiset m;
    for (auto& c : codes) {
      if (!m.entries.empty() && m.entries.back().first == c)
        ++m.entries.back().second;
      else
        m.entries.emplace_back(std::move(c), 1);
    }
    return m;
  }

  int total() const {
    int t = 0;
    for (const auto& [code, count] : entries) t += count;
    return t;
  }

  GeneMultiset merged(const GeneMultiset& other) const {
    std::vector<CanonicalCode> codes;
    for (const auto& [code, count] : entries)
      for (int i = 0; i < count; ++i) codes.push_back(code);
    for (const auto& [code, count] : other.entries)
      for (int i = 0; i < count; ++i) codes.push_back(code);
    return from_codes(std::move(codes));
  }

  friend auto operator<=>(const GeneMultiset&, const GeneMultiset&) = default;
};

inline bool multiset_equal(const GeneMultiset& a, const GeneMultiset& b) {
  return a == b;
}

}  // namespace cubic

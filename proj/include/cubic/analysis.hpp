#pragma once

#include <optional>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Connectivity helpers.

namespace detail {

// Components of g after deleting `removed` (must be edges of g).
inline std::vector<std::vector<int>> components_without(
    const CubicGraph& g, const std::vector<Edge>& removed) {
  auto is_removed = [&](int a, int b) {
    Edge e(a, b);
    for (const Edge& r : removed)
      if (r == e) return true;
    return false;
  };
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] >= 0 || is_removed(v, w)) continue;
        comp[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool connected_without(const CubicGraph& g, const std::vector<Edge>& removed) {
  return components_without(g, removed).size() == 1;
}

inline bool edges_adjacent(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

}  // namespace detail

// All edges whose removal disconnects the graph (Tarjan low-link).
inline std::vector<Edge> bridges(const CubicGraph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  // Iterative DFS; parent_edge tracks the tree edge into each vertex so a
  // doubled parent edge is not mistaken for a back edge (cannot happen in a
  // simple graph, but the guard is by vertex).
  struct Frame {
    int v, parent, next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < 3) {
        int w = g.neighbors(f.v)[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.emplace_back(p, v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent minimal edge cut with its two sides.
struct Cracker {
  std::vector<Edge> edges;       // sorted, pairwise non-adjacent
  std::vector<int> side_a;       // component containing the smallest vertex
  std::vector<int> side_b;

  int size() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Cracker&, const Cracker&) = default;
};

// Validates that `edges` is a cracker of g and returns its two sides.
inline std::pair<std::vector<int>, std::vector<int>> cracker_sides(
    const CubicGraph& g, const std::vector<Edge>& edges) {
  if (edges.empty()) fail(Err::NotACracker, "empty edge set");
  for (const Edge& e : edges)
    if (!g.has_edge(e)) fail(Err::InvalidEdge, to_string(e) + " not in graph");
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (detail::edges_adjacent(edges[i], edges[j]))
        fail(Err::NotACracker, "edges " + to_string(edges[i]) + " and " +
                                   to_string(edges[j]) + " share an endpoint");
  auto comps = detail::components_without(g, edges);
  if (comps.size() == 1) fail(Err::NotACracker, "removal does not disconnect");
  if (comps.size() != 2)
    fail(Err::NotACracker, "removal yields more than two components");
  for (size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> subset;
    for (size_t i = 0; i < edges.size(); ++i)
      if (i != skip) subset.push_back(edges[i]);
    if (!subset.empty() && !detail::connected_without(g, subset))
      fail(Err::NotACracker, "proper subset already disconnects");
  }
  return {comps[0], comps[1]};
}

inline Cracker make_cracker(const CubicGraph& g, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  auto [a, b] = cracker_sides(g, edges);
  return Cracker{std::move(edges), std::move(a), std::move(b)};
}

// All crackers of sizes 1..3, ordered by size then lexicographic edge list.
// A graph containing one of these is a descendant.
inline std::vector<Cracker> enumerate_cubic_crackers(const CubicGraph& g) {
  std::vector<Cracker> out;
  const auto& es = g.edges();
  int m = g.edge_count();

  std::vector<Edge> bridge_list = bridges(g);
  auto is_bridge = [&](const Edge& e) {
    return std::binary_search(bridge_list.begin(), bridge_list.end(), e);
  };

  for (const Edge& e : bridge_list) out.push_back(make_cracker(g, {e}));

  for (int i = 0; i < m; ++i) {
    if (is_bridge(es[i])) continue;
    for (int j = i + 1; j < m; ++j) {
      if (is_bridge(es[j]) || detail::edges_adjacent(es[i], es[j])) continue;
      if (!detail::connected_without(g, {es[i], es[j]}))
        out.push_back(make_cracker(g, {es[i], es[j]}));
    }
  }

  for (int i = 0; i < m; ++i) {
    if (is_bridge(es[i])) continue;
    for (int j = i + 1; j < m; ++j) {
      if (is_bridge(es[j]) || detail::edges_adjacent(es[i], es[j])) continue;
      bool pair_ij_cuts = !detail::connected_without(g, {es[i], es[j]});
      if (pair_ij_cuts) continue;
      for (int k = j + 1; k < m; ++k) {
        if (is_bridge(es[k]) || detail::edges_adjacent(es[i], es[k]) ||
            detail::edges_adjacent(es[j], es[k]))
          continue;
        if (!detail::connected_without(g, {es[i], es[k]}) ||
            !detail::connected_without(g, {es[j], es[k]}))
          continue;
        if (!detail::connected_without(g, {es[i], es[j], es[k]}))
          out.push_back(make_cracker(g, {es[i], es[j], es[k]}));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Cracker& a, const Cracker& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

// All crackers of size exactly k (general mode).  An independent
// disconnecting set is minimal iff dropping any single edge reconnects, so
// the subset check stays linear in k.
inline std::vector<Cracker> enumerate_crackers_of_size(const CubicGraph& g, int k) {
  std::vector<Cracker> out;
  const auto& es = g.edges();
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      if (detail::connected_without(g, chosen)) return;
      for (size_t skip = 0; skip < chosen.size(); ++skip) {
        std::vector<Edge> sub;
        for (size_t i = 0; i < chosen.size(); ++i)
          if (i != skip) sub.push_back(chosen[i]);
        if (!sub.empty() && !detail::connected_without(g, sub)) return;
      }
      out.push_back(make_cracker(g, chosen));
      return;
    }
    for (size_t i = from; i < es.size(); ++i) {
      bool ok = true;
      for (const Edge& c : chosen)
        if (detail::edges_adjacent(c, es[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(es[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Cracker& a, const Cracker& b) {
    return a.edges < b.edges;
  });
  return out;
}

namespace detail {

// True iff some k pairwise non-adjacent edges disconnect g.  Searched in
// ascending edge order; `chosen` never disconnects on its own because every
// smaller k was exhausted first by the caller.
inline bool independent_cut_exists(const CubicGraph& g, int k, size_t from,
                                   std::vector<Edge>& chosen) {
  if (static_cast<int>(chosen.size()) == k)
    return !connected_without(g, chosen);
  const auto& es = g.edges();
  for (size_t i = from; i < es.size(); ++i) {
    bool ok = true;
    for (const Edge& c : chosen)
      if (edges_adjacent(c, es[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(es[i]);
    if (independent_cut_exists(g, k, i + 1, chosen)) {
      chosen.pop_back();
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

inline std::optional<int> smallest_independent_cut(const CubicGraph& g,
                                                   int start_k) {
  // No independent set exceeds a perfect matching, but the search is capped
  // at 3n/2 for an unconditional bound.
  for (int k = start_k; k <= 3 * g.n() / 2; ++k) {
    std::vector<Edge> chosen;
    if (independent_cut_exists(g, k, 0, chosen)) return k;
  }
  return std::nullopt;
}

}  // namespace detail

// Size of the smallest cracker over all k; empty for the two cracker-free
// graphs (K4 and K3,3).
inline std::optional<int> cyclic_edge_connectivity(const CubicGraph& g) {
  return detail::smallest_independent_cut(g, 1);
}

// Length of the shortest cycle.  BFS from every vertex; each non-tree edge
// closes a candidate cycle.
inline int girth(const CubicGraph& g) {
  int n = g.n();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      if (2 * dist[v] >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v] && v != parent[w]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle search: backtracking over edge states with forced-edge
// propagation.  Every vertex needs exactly two cycle edges, so a vertex with
// one excluded edge forces its other two in, and a vertex with two cycle
// edges excludes its third.

struct HamiltonianResult {
  bool hamiltonian = false;
  std::vector<int> cycle;  // n distinct vertices, consecutive ones adjacent
};

namespace detail {

class HamSearch {
 public:
  explicit HamSearch(const CubicGraph& g) : g_(g), n_(g.n()), m_(g.edge_count()) {
    edge_index_.assign(n_, {});
    for (int i = 0; i < m_; ++i) {
      const Edge& e = g.edges()[i];
      edge_index_[e.u].push_back(i);
      edge_index_[e.v].push_back(i);
    }
  }

  bool run(std::vector<int>& cycle_out) {
    state_.assign(m_, kUnknown);
    in_cnt_.assign(n_, 0);
    out_cnt_.assign(n_, 0);
    partner_.resize(n_);
    for (int v = 0; v < n_; ++v) partner_[v] = v;
    in_total_ = 0;
    if (!solve()) return false;
    extract(cycle_out);
    return true;
  }

 private:
  static constexpr int8_t kUnknown = 0, kIn = 1, kOut = 2;

  struct Undo {
    std::vector<int8_t> state;
    std::vector<int> in_cnt, out_cnt, partner;
    int in_total;
  };

  Undo save() const { return {state_, in_cnt_, out_cnt_, partner_, in_total_}; }
  void restore(Undo&& u) {
    state_ = std::move(u.state);
    in_cnt_ = std::move(u.in_cnt);
    out_cnt_ = std::move(u.out_cnt);
    partner_ = std::move(u.partner);
    in_total_ = u.in_total;
  }

  // Applies one decision and all its consequences; false on contradiction.
  bool assign(int ei, int8_t val) {
    std::vector<std::pair<int, int8_t>> queue{{ei, val}};
    while (!queue.empty()) {
      auto [e, want] = queue.back();
      queue.pop_back();
      if (state_[e] != kUnknown) {
        if (state_[e] != want) return false;
        continue;
      }
      const Edge& ed = g_.edges()[e];
      if (want == kIn) {
        if (in_cnt_[ed.u] >= 2 || in_cnt_[ed.v] >= 2) return false;
        int pu = partner_[ed.u], pv = partner_[ed.v];
        if (pu == ed.v) {
          // Closing the chain into a cycle: only legal if it is Hamiltonian.
          if (in_total_ + 1 != n_) return false;
        } else {
          partner_[pu] = pv;
          partner_[pv] = pu;
        }
        state_[e] = kIn;
        ++in_total_;
        ++in_cnt_[ed.u];
        ++in_cnt_[ed.v];
      } else {
        if (out_cnt_[ed.u] >= 1 || out_cnt_[ed.v] >= 1) return false;
        state_[e] = kOut;
        ++out_cnt_[ed.u];
        ++out_cnt_[ed.v];
      }
      for (int v : {ed.u, ed.v}) {
        if (in_cnt_[v] == 2) {
          for (int f : edge_index_[v])
            if (state_[f] == kUnknown) queue.push_back({f, kOut});
        }
        if (out_cnt_[v] == 1) {
          for (int f : edge_index_[v])
            if (state_[f] == kUnknown) queue.push_back({f, kIn});
        }
      }
    }
    return true;
  }

  bool solve() {
    if (in_total_ == n_) return true;
    // Branch on an undecided edge at the most constrained vertex.
    int pick = -1, best_score = -1;
    for (int e = 0; e < m_; ++e) {
      if (state_[e] != kUnknown) continue;
      const Edge& ed = g_.edges()[e];
      int score = in_cnt_[ed.u] + in_cnt_[ed.v];
      if (score > best_score) {
        best_score = score;
        pick = e;
      }
    }
    if (pick < 0) return in_total_ == n_;
    for (int8_t val : {kIn, kOut}) {
      Undo u = save();
      if (assign(pick, val) && solve()) return true;
      restore(std::move(u));
    }
    return false;
  }

  void extract(std::vector<int>& cycle) const {
    cycle.clear();
    int v = 0, prev = -1;
    do {
      cycle.push_back(v);
      for (int f : edge_index_[v]) {
        if (state_[f] != kIn) continue;
        const Edge& ed = g_.edges()[f];
        int w = ed.u == v ? ed.v : ed.u;
        if (w == prev) continue;
        prev = v;
        v = w;
        break;
      }
    } while (v != 0);
  }

  const CubicGraph& g_;
  int n_, m_;
  std::vector<std::vector<int>> edge_index_;
  std::vector<int8_t> state_;
  std::vector<int> in_cnt_, out_cnt_, partner_;
  int in_total_ = 0;
};

}  // namespace detail

inline HamiltonianResult is_hamiltonian(const CubicGraph& g) {
  HamiltonianResult r;
  detail::HamSearch search(g);
  r.hamiltonian = search.run(r.cycle);
  if (!r.hamiltonian) r.cycle.clear();
  return r;
}

// ---------------------------------------------------------------------------
// Tait coloring: proper 3-edge-coloring.  By Vizing a cubic graph is either
// 3- or 4-edge-chromatic; snarks are the 4 side.

struct TaitResult {
  bool colorable = false;
  std::vector<int> colors;  // per edge index, values 0..2
};

inline TaitResult is_tait_colorable(const CubicGraph& g) {
  int m = g.edge_count();
  std::vector<std::vector<int>> at(g.n());
  for (int i = 0; i < m; ++i) {
    at[g.edges()[i].u].push_back(i);
    at[g.edges()[i].v].push_back(i);
  }
  std::vector<int> colors(m, -1);
  auto conflicts = [&](int ei, int c) {
    const Edge& e = g.edges()[ei];
    for (int v : {e.u, e.v})
      for (int f : at[v])
        if (f != ei && colors[f] == c) return true;
    return false;
  };
  // Edges in index order; first edge pinned to color 0 to cut symmetry.
  auto rec = [&](auto&& self, int ei) -> bool {
    if (ei == m) return true;
    int limit = ei == 0 ? 1 : 3;
    for (int c = 0; c < limit; ++c) {
      if (conflicts(ei, c)) continue;
      colors[ei] = c;
      if (self(self, ei + 1)) return true;
      colors[ei] = -1;
    }
    return false;
  };
  TaitResult r;
  r.colorable = rec(rec, 0);
  if (r.colorable) r.colors = colors;
  return r;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Kind { Gene, Descendant };

struct Classification {
  Kind kind = Kind::Gene;
  std::optional<int> cyclic_connectivity;   // empty iff no cracker of any size
  std::optional<int> smallest_cubic_cracker;  // 1, 2, 3 or empty
  int girth = 0;
  bool hamiltonian = false;
  bool mutant = false;
  std::optional<bool> snark_mutant;  // set only for mutants
};

inline Classification classify(const CubicGraph& g) {
  Classification c;
  c.girth = girth(g);
  auto crackers = enumerate_cubic_crackers(g);
  if (!crackers.empty()) {
    c.smallest_cubic_cracker = crackers.front().size();
    c.kind = Kind::Descendant;
    // The smallest cracker overall cannot be smaller than the smallest
    // cubic one, so the general search needn't run.
    c.cyclic_connectivity = c.smallest_cubic_cracker;
  } else {
    c.kind = Kind::Gene;
    c.cyclic_connectivity = detail::smallest_independent_cut(g, 4);
  }
  c.hamiltonian = is_hamiltonian(g).hamiltonian;
  bool has_bridge = !crackers.empty() && crackers.front().size() == 1;
  c.mutant = !c.hamiltonian && !has_bridge && c.kind == Kind::Gene;
  if (c.mutant)
    c.snark_mutant = c.girth >= 5 && !is_tait_colorable(g).colorable;
  return c;
}

}  // namespace cubic

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "cubic/analysis.hpp"
#include "cubic/graph.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// The six breeding operations and their inverses.
//
// Labeling policy, applied uniformly so records replay deterministically:
// in two-parent operations the second parent's ids are shifted by n1; new
// vertices are appended at the end in the order the defining construction
// introduces them; deletions compact ids downward (applied after insertions).

enum class OpKind { B1, B2, B3, P1, P2, P3 };

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::B1: return "B1";
    case OpKind::B2: return "B2";
    case OpKind::B3: return "B3";
    case OpKind::P1: return "P1";
    case OpKind::P2: return "P2";
    case OpKind::P3: return "P3";
  }
  return "?";
}

struct B1Params {
  Edge e1, e2;  // replaced edge in each parent
};
// B2 endpoints stay ordered: e1 = {a,b}, e2 = {c,d} join as (a,c) and (b,d).
struct B2Params {
  std::array<int, 2> e1, e2;
};
struct B3Params {
  int v1, v2;                                // deleted vertices
  std::array<std::array<int, 2>, 3> pairing;  // (a,d), (b,e), (c,f)
};
struct P1Params {
  Edge e1;  // the bridge receiving the diamond
};
struct P2Params {
  Edge e1, e2;  // the 2-cracker receiving the parthenogenic bridge
};
struct P3Params {
  int a;    // 1-cracker endpoint receiving the triangle
  Edge e1;  // the 1-cracker itself, in case a touches more than one
};

using OpParams =
    std::variant<B1Params, B2Params, B3Params, P1Params, P2Params, P3Params>;

// Parameters are recorded against the parent labelings; outputs (the marker
// edges/vertices each definition returns) against the child labeling the
// policy above produces.
struct OpRecord {
  OpKind op;
  OpParams params;
  std::vector<Edge> out_edges;
  std::vector<int> out_vertices;
};

struct BreedResult {
  CubicGraph child;
  std::vector<Edge> cracker;  // the advertised new cubic cracker
  OpRecord rec;
};

struct ParthResult {
  CubicGraph child;
  std::vector<int> marks;  // the new-vertex markers the definition returns
  OpRecord rec;
};

namespace detail {

inline void require_edge(const CubicGraph& g, const Edge& e, const char* who) {
  if (!g.has_edge(e))
    fail(Err::InvalidEdge, std::string(who) + " " + to_string(e));
}

inline bool is_bridge(const CubicGraph& g, const Edge& e) {
  return !connected_without(g, {e});
}

// New-id map after deleting `dels`, shifting higher ids down.
inline std::vector<int> deletion_map(int n, std::vector<int> dels) {
  std::sort(dels.begin(), dels.end());
  std::vector<int> map(n, -1);
  size_t di = 0;
  for (int v = 0; v < n; ++v) {
    if (di < dels.size() && dels[di] == v) {
      ++di;
      continue;
    }
    map[v] = v - static_cast<int>(di);
  }
  return map;
}

inline bool is_2cracker(const CubicGraph& g, const Edge& e, const Edge& f) {
  if (edges_adjacent(e, f)) return false;
  if (is_bridge(g, e) || is_bridge(g, f)) return false;
  return !connected_without(g, {e, f});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Breeding.

namespace detail {

inline BreedResult breed2_ordered(const CubicGraph& g1, const CubicGraph& g2,
                                  std::array<int, 2> e1, std::array<int, 2> e2) {
  require_edge(g1, Edge(e1[0], e1[1]), "e1");
  require_edge(g2, Edge(e2[0], e2[1]), "e2");
  if (is_bridge(g1, Edge(e1[0], e1[1])))
    fail(Err::BridgeEdge, "e1 " + to_string(Edge(e1[0], e1[1])) + " is a 1-cracker");
  if (is_bridge(g2, Edge(e2[0], e2[1])))
    fail(Err::BridgeEdge, "e2 " + to_string(Edge(e2[0], e2[1])) + " is a 1-cracker");

  int n1 = g1.n();
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges())
    if (e != Edge(e1[0], e1[1])) edges.push_back(e);
  for (const Edge& e : g2.edges())
    if (e != Edge(e2[0], e2[1])) edges.emplace_back(e.u + n1, e.v + n1);
  Edge x(e1[0], e2[0] + n1), y(e1[1], e2[1] + n1);
  edges.push_back(x);
  edges.push_back(y);

  BreedResult r{CubicGraph::from_edge_list(n1 + g2.n(), edges),
                {x, y},
                OpRecord{OpKind::B2, B2Params{e1, e2}, {x, y}, {}}};
  return r;
}

}  // namespace detail

// Type 1 breeding: replace an edge in each parent by a two-vertex bridge
// gadget.  The child is always a bridge graph.
inline BreedResult breed1(const CubicGraph& g1, const CubicGraph& g2,
                          const Edge& e1, const Edge& e2) {
  detail::require_edge(g1, e1, "e1");
  detail::require_edge(g2, e2, "e2");
  int n1 = g1.n(), n2 = g2.n();
  int v1 = n1 + n2, v2 = n1 + n2 + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges())
    if (e != e1) edges.push_back(e);
  for (const Edge& e : g2.edges())
    if (e != e2) edges.emplace_back(e.u + n1, e.v + n1);
  edges.emplace_back(e1.u, v1);
  edges.emplace_back(e1.v, v1);
  edges.emplace_back(e2.u + n1, v2);
  edges.emplace_back(e2.v + n1, v2);
  edges.emplace_back(v1, v2);

  Edge bridge(v1, v2);
  return BreedResult{CubicGraph::from_edge_list(n1 + n2 + 2, edges),
                     {bridge},
                     OpRecord{OpKind::B1, B1Params{e1, e2}, {bridge}, {}}};
}

// Type 2 breeding: cut one non-bridge edge in each parent and cross-join the
// stubs, creating a 2-cracker.
inline BreedResult breed2(const CubicGraph& g1, const CubicGraph& g2,
                          const Edge& e1, const Edge& e2) {
  return detail::breed2_ordered(g1, g2, {e1.u, e1.v}, {e2.u, e2.v});
}

// Type 3 breeding: delete one vertex from each parent and join the stub
// neighborhoods by the given bijection, creating a 3-cracker.
inline BreedResult breed3(const CubicGraph& g1, const CubicGraph& g2, int v1,
                          int v2,
                          const std::array<std::array<int, 2>, 3>& pairing) {
  if (!g1.has_vertex(v1)) fail(Err::InvalidVertex, "v1=" + std::to_string(v1));
  if (!g2.has_vertex(v2)) fail(Err::InvalidVertex, "v2=" + std::to_string(v2));

  auto nb1 = g1.neighbors(v1), nb2 = g2.neighbors(v2);
  std::array<int, 3> lhs{pairing[0][0], pairing[1][0], pairing[2][0]};
  std::array<int, 3> rhs{pairing[0][1], pairing[1][1], pairing[2][1]};
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (lhs != nb1 || rhs != nb2)
    fail(Err::BadPairing, "pairing is not a bijection of the two neighborhoods");

  for (int w : nb1)
    if (detail::is_bridge(g1, Edge(v1, w)))
      fail(Err::BridgeEdge, to_string(Edge(v1, w)) + " is a 1-cracker of g1");
  for (int w : nb2)
    if (detail::is_bridge(g2, Edge(v2, w)))
      fail(Err::BridgeEdge, to_string(Edge(v2, w)) + " is a 1-cracker of g2");

  int n1 = g1.n(), n2 = g2.n();
  auto map = detail::deletion_map(n1 + n2, {v1, n1 + v2});
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges())
    if (e.u != v1 && e.v != v1) edges.emplace_back(map[e.u], map[e.v]);
  for (const Edge& e : g2.edges())
    if (e.u != v2 && e.v != v2)
      edges.emplace_back(map[e.u + n1], map[e.v + n1]);
  std::vector<Edge> cross;
  for (const auto& [x, y] : pairing) cross.emplace_back(map[x], map[y + n1]);
  for (const Edge& e : cross) edges.push_back(e);

  return BreedResult{
      CubicGraph::from_edge_list(n1 + n2 - 2, edges), cross,
      OpRecord{OpKind::B3, B3Params{v1, v2, pairing}, cross, {}}};
}

// ---------------------------------------------------------------------------
// Parthenogenesis.

// Type 1: replace the 1-cracker e1 with a parthenogenic diamond, leaving a
// bridge on either side of it.
inline ParthResult parth1(const CubicGraph& g, const Edge& e1) {
  detail::require_edge(g, e1, "e1");
  if (!detail::is_bridge(g, e1))
    fail(Err::NotABridge, to_string(e1) + " is not a 1-cracker");
  int n = g.n();
  int v1 = n, v2 = n + 1, v3 = n + 2, v4 = n + 3;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e != e1) edges.push_back(e);
  int a = e1.u, b = e1.v;
  edges.emplace_back(a, v1);
  edges.emplace_back(v1, v2);
  edges.emplace_back(v1, v3);
  edges.emplace_back(v2, v3);
  edges.emplace_back(v2, v4);
  edges.emplace_back(v3, v4);
  edges.emplace_back(v4, b);
  return ParthResult{CubicGraph::from_edge_list(n + 4, edges),
                     {v1, v4},
                     OpRecord{OpKind::P1, P1Params{e1}, {}, {v1, v4}}};
}

// Type 2: hang a parthenogenic bridge (two adjacent vertices) across a
// 2-cracker, yielding two new 2-crackers.
inline ParthResult parth2(const CubicGraph& g, const Edge& c2a, const Edge& c2b) {
  detail::require_edge(g, c2a, "e1");
  detail::require_edge(g, c2b, "e2");
  if (!detail::is_2cracker(g, c2a, c2b))
    fail(Err::NotA2Cracker,
         to_string(c2a) + "," + to_string(c2b) + " is not a 2-cracker");
  Edge e1 = std::min(c2a, c2b), e2 = std::max(c2a, c2b);
  int n = g.n();
  int v1 = n, v2 = n + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e != e1 && e != e2) edges.push_back(e);
  edges.emplace_back(e1.u, v1);
  edges.emplace_back(e1.v, v1);
  edges.emplace_back(e2.u, v2);
  edges.emplace_back(e2.v, v2);
  edges.emplace_back(v1, v2);
  return ParthResult{CubicGraph::from_edge_list(n + 2, edges),
                     {v1, v2},
                     OpRecord{OpKind::P2, P2Params{e1, e2}, {}, {v1, v2}}};
}

// Type 3 at an explicit 1-cracker (a,b): grow a parthenogenic triangle at a.
inline ParthResult parth3_at(const CubicGraph& g, int a, int b) {
  if (!g.has_vertex(a)) fail(Err::InvalidVertex, std::to_string(a));
  if (!g.has_edge(a, b) || !detail::is_bridge(g, Edge(a, b)))
    fail(Err::NotOnBridge,
         to_string(Edge(a, b)) + " is not a 1-cracker at " + std::to_string(a));
  auto cd = g.other_neighbors(a, b);
  int c = cd[0], d = cd[1];
  int n = g.n();
  int v1 = n, v2 = n + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e != Edge(a, c) && e != Edge(a, d)) edges.push_back(e);
  edges.emplace_back(a, v1);
  edges.emplace_back(a, v2);
  edges.emplace_back(v1, v2);
  edges.emplace_back(v1, c);
  edges.emplace_back(v2, d);
  return ParthResult{
      CubicGraph::from_edge_list(n + 2, edges),
      {a, v1, v2},
      OpRecord{OpKind::P3, P3Params{a, Edge(a, b)}, {}, {a, v1, v2}}};
}

// Type 3 at a vertex: uses the lowest-numbered 1-cracker incident to a.
inline ParthResult parth3(const CubicGraph& g, int a) {
  if (!g.has_vertex(a)) fail(Err::InvalidVertex, std::to_string(a));
  for (int w : g.neighbors(a))
    if (detail::is_bridge(g, Edge(a, w))) return parth3_at(g, a, w);
  fail(Err::NotOnBridge,
       "vertex " + std::to_string(a) + " is not incident to a 1-cracker");
}

// ---------------------------------------------------------------------------
// Irreducibility: a cubic cracker admits the matching inverse breeding iff
// no replaced-edge candidate is already present.  Every 3-cracker qualifies.

inline bool is_irreducible(const CubicGraph& g, const Cracker& c) {
  cracker_sides(g, c.edges);  // validates, throws NotACracker otherwise
  switch (c.size()) {
    case 3:
      return true;
    case 1: {
      const Edge& e = c.edges[0];
      auto ab = g.other_neighbors(e.u, e.v);
      auto cd = g.other_neighbors(e.v, e.u);
      return !g.has_edge(ab[0], ab[1]) && !g.has_edge(cd[0], cd[1]);
    }
    case 2: {
      auto on_side = [&](const Edge& e, const std::vector<int>& side) {
        return std::binary_search(side.begin(), side.end(), e.u) ? e.u : e.v;
      };
      int a1 = on_side(c.edges[0], c.side_a), a2 = on_side(c.edges[1], c.side_a);
      int b1 = c.edges[0].u == a1 ? c.edges[0].v : c.edges[0].u;
      int b2 = c.edges[1].u == a2 ? c.edges[1].v : c.edges[1].u;
      return !g.has_edge(a1, a2) && !g.has_edge(b1, b2);
    }
    default:
      fail(Err::NotACracker, "cubic crackers have size 1..3");
  }
}

// ---------------------------------------------------------------------------
// Inverse breeding.

struct InvBreed2Result {
  CubicGraph g1, g2;
  Edge e1, e2;  // the restored edges, in each parent's labeling
  OpRecord rec;
};
using InvBreed1Result = InvBreed2Result;

struct InvBreed3Result {
  CubicGraph g1, g2;
  int v1, v2;  // the added star vertices, in each parent's labeling
  std::array<std::array<int, 2>, 3> pairing;
  OpRecord rec;
};

namespace detail {

// Extracts side vertices (sorted), returning old->new id map for the side.
inline std::vector<int> side_map(const CubicGraph& g, const std::vector<int>& side) {
  std::vector<int> map(g.n(), -1);
  for (size_t i = 0; i < side.size(); ++i) map[side[i]] = static_cast<int>(i);
  return map;
}

inline std::vector<Edge> induced_edges(const CubicGraph& g,
                                       const std::vector<int>& map) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0) out.emplace_back(map[e.u], map[e.v]);
  return out;
}

}  // namespace detail

// Undoes type 1 breeding at an irreducible 1-cracker: delete the two bridge
// endpoints and restore the replaced edge on each side.
inline InvBreed1Result inv_breed1(const CubicGraph& g, const Edge& bridge) {
  detail::require_edge(g, bridge, "bridge");
  if (!detail::is_bridge(g, bridge))
    fail(Err::NotABridge, to_string(bridge) + " is not a 1-cracker");
  auto [side_a, side_b] = cracker_sides(g, {bridge});
  int v1 = bridge.u, v2 = bridge.v;
  if (!std::binary_search(side_a.begin(), side_a.end(), v1)) std::swap(v1, v2);
  auto ab = g.other_neighbors(v1, v2);
  auto cd = g.other_neighbors(v2, v1);
  if (g.has_edge(ab[0], ab[1]))
    fail(Err::Reducible1Cracker,
         "edge " + to_string(Edge(ab[0], ab[1])) + " already present");
  if (g.has_edge(cd[0], cd[1]))
    fail(Err::Reducible1Cracker,
         "edge " + to_string(Edge(cd[0], cd[1])) + " already present");

  auto build = [&](const std::vector<int>& side, int drop, std::array<int, 2> join) {
    std::vector<int> keep;
    for (int v : side)
      if (v != drop) keep.push_back(v);
    auto map = detail::side_map(g, keep);
    auto edges = detail::induced_edges(g, map);
    Edge restored(map[join[0]], map[join[1]]);
    edges.push_back(restored);
    return std::pair{CubicGraph::from_edge_list(static_cast<int>(keep.size()), edges),
                     restored};
  };
  auto [g1, e1] = build(side_a, v1, ab);
  auto [g2, e2] = build(side_b, v2, cd);
  int m = g1.n() + g2.n();
  OpRecord rec{OpKind::B1, B1Params{e1, e2}, {Edge(m, m + 1)}, {}};
  return InvBreed1Result{std::move(g1), std::move(g2), e1, e2, std::move(rec)};
}

// Undoes type 2 breeding at an irreducible 2-cracker: split on the cracker
// and rejoin the two stub pairs within their sides.
inline InvBreed2Result inv_breed2(const CubicGraph& g, const Edge& c2a,
                                  const Edge& c2b) {
  std::vector<int> side_a, side_b;
  try {
    std::tie(side_a, side_b) = cracker_sides(g, {c2a, c2b});
  } catch (const Error& e) {
    if (e.code() == Err::NotACracker)
      fail(Err::NotA2Cracker, std::string(e.what()));
    throw;
  }
  auto endpoint_in = [&](const Edge& e, const std::vector<int>& side) {
    return std::binary_search(side.begin(), side.end(), e.u) ? e.u : e.v;
  };
  int a1 = endpoint_in(c2a, side_a), a2 = endpoint_in(c2b, side_a);
  int b1 = c2a.u == a1 ? c2a.v : c2a.u;
  int b2 = c2b.u == a2 ? c2b.v : c2b.u;
  if (g.has_edge(a1, a2))
    fail(Err::Reducible2Cracker,
         "edge " + to_string(Edge(a1, a2)) + " already present");
  if (g.has_edge(b1, b2))
    fail(Err::Reducible2Cracker,
         "edge " + to_string(Edge(b1, b2)) + " already present");

  auto map_a = detail::side_map(g, side_a);
  auto map_b = detail::side_map(g, side_b);
  auto edges_a = detail::induced_edges(g, map_a);
  auto edges_b = detail::induced_edges(g, map_b);
  Edge e1(map_a[a1], map_a[a2]);
  Edge e2(map_b[b1], map_b[b2]);
  edges_a.push_back(e1);
  edges_b.push_back(e2);
  CubicGraph g1 = CubicGraph::from_edge_list(static_cast<int>(side_a.size()), edges_a);
  CubicGraph g2 = CubicGraph::from_edge_list(static_cast<int>(side_b.size()), edges_b);

  // Endpoint order in the record preserves which stub pairs with which:
  // e1's first endpoint was joined to e2's first endpoint in g.
  std::array<int, 2> rec_e1{map_a[a1], map_a[a2]};
  std::array<int, 2> rec_e2{map_b[b1], map_b[b2]};
  int n1 = g1.n();
  std::vector<Edge> outs{Edge(rec_e1[0], rec_e2[0] + n1),
                         Edge(rec_e1[1], rec_e2[1] + n1)};
  OpRecord rec{OpKind::B2, B2Params{rec_e1, rec_e2}, outs, {}};
  return InvBreed2Result{std::move(g1), std::move(g2), e1, e2, std::move(rec)};
}

// Undoes type 3 breeding at a 3-cracker (always applicable): each side gains
// a star vertex joined to its three stubs.
inline InvBreed3Result inv_breed3(const CubicGraph& g,
                                  const std::vector<Edge>& c3) {
  if (c3.size() != 3) fail(Err::NotA3Cracker, "expected three edges");
  std::vector<int> side_a, side_b;
  try {
    std::tie(side_a, side_b) = cracker_sides(g, c3);
  } catch (const Error& e) {
    if (e.code() == Err::NotACracker)
      fail(Err::NotA3Cracker, std::string(e.what()));
    throw;
  }
  auto map_a = detail::side_map(g, side_a);
  auto map_b = detail::side_map(g, side_b);
  auto edges_a = detail::induced_edges(g, map_a);
  auto edges_b = detail::induced_edges(g, map_b);
  int star_a = static_cast<int>(side_a.size());
  int star_b = static_cast<int>(side_b.size());
  std::array<std::array<int, 2>, 3> pairing;
  for (int i = 0; i < 3; ++i) {
    const Edge& e = c3[i];
    int xa = std::binary_search(side_a.begin(), side_a.end(), e.u) ? e.u : e.v;
    int yb = e.u == xa ? e.v : e.u;
    edges_a.emplace_back(map_a[xa], star_a);
    edges_b.emplace_back(map_b[yb], star_b);
    pairing[i] = {map_a[xa], map_b[yb]};
  }
  CubicGraph g1 = CubicGraph::from_edge_list(star_a + 1, edges_a);
  CubicGraph g2 = CubicGraph::from_edge_list(star_b + 1, edges_b);

  auto child_map = detail::deletion_map(g1.n() + g2.n(), {star_a, g1.n() + star_b});
  std::vector<Edge> outs;
  for (const auto& [x, y] : pairing)
    outs.emplace_back(child_map[x], child_map[y + g1.n()]);
  OpRecord rec{OpKind::B3, B3Params{star_a, star_b, pairing}, outs, {}};
  return InvBreed3Result{std::move(g1), std::move(g2), star_a, star_b, pairing,
                         std::move(rec)};
}

// ---------------------------------------------------------------------------
// Parthenogenic objects and inverse parthenogenesis.

enum class ParthKind { Diamond, Bridge, Triangle };

inline const char* parth_kind_name(ParthKind k) {
  switch (k) {
    case ParthKind::Diamond: return "diamond";
    case ParthKind::Bridge: return "bridge";
    case ParthKind::Triangle: return "triangle";
  }
  return "?";
}

// Diamond: vertices (v1, v2, v3, v4) of a K4-minus-an-edge block hanging
// between two bridges, v1/v4 the attachment ends.  Bridge: the adjacent pair
// (v1, v2) inserted by a type 2 parthenogenesis.  Triangle: (apex, v1, v2)
// with the apex on a 1-cracker.
struct ParthenogenicObject {
  ParthKind kind;
  std::vector<int> vertices;
  friend auto operator<=>(const ParthenogenicObject&,
                          const ParthenogenicObject&) = default;
};

namespace detail {

inline std::optional<ParthenogenicObject> diamond_at(const CubicGraph& g,
                                                     int v2, int v3) {
  if (!g.has_edge(v2, v3)) return std::nullopt;
  std::vector<int> common;
  for (int w : g.neighbors(v2))
    if (w != v3 && g.has_edge(w, v3)) common.push_back(w);
  if (common.size() != 2) return std::nullopt;
  int v1 = common[0], v4 = common[1];
  if (g.has_edge(v1, v4)) return std::nullopt;  // that would be all of K4
  int a = g.third_neighbor(v1, v2, v3);
  int b = g.third_neighbor(v4, v2, v3);
  if (a == b) return std::nullopt;
  if (!is_bridge(g, Edge(a, v1)) || !is_bridge(g, Edge(b, v4)))
    return std::nullopt;
  if (v1 > v4) std::swap(v1, v4);
  int lo = std::min(v2, v3), hi = std::max(v2, v3);
  return ParthenogenicObject{ParthKind::Diamond, {v1, lo, hi, v4}};
}

inline std::optional<ParthenogenicObject> parth_bridge_at(const CubicGraph& g,
                                                          int x, int y) {
  if (!g.has_edge(x, y)) return std::nullopt;
  auto pq = g.other_neighbors(x, y);
  auto rs = g.other_neighbors(y, x);
  for (int p : pq)
    for (int r : rs)
      if (p == r) return std::nullopt;  // shared outer vertex: triangle, not a bridge gadget
  // The four outer edges must pair off into the two 2-crackers a type 2
  // parthenogenesis leaves behind.
  bool straight = is_2cracker(g, Edge(x, pq[0]), Edge(y, rs[0])) &&
                  is_2cracker(g, Edge(x, pq[1]), Edge(y, rs[1]));
  bool crossed = is_2cracker(g, Edge(x, pq[0]), Edge(y, rs[1])) &&
                 is_2cracker(g, Edge(x, pq[1]), Edge(y, rs[0]));
  if (!straight && !crossed) return std::nullopt;
  return ParthenogenicObject{ParthKind::Bridge, {std::min(x, y), std::max(x, y)}};
}

inline std::optional<ParthenogenicObject> triangle_at(const CubicGraph& g,
                                                      int apex, int v1, int v2) {
  if (!g.has_edge(apex, v1) || !g.has_edge(apex, v2) || !g.has_edge(v1, v2))
    return std::nullopt;
  int b = g.third_neighbor(apex, v1, v2);
  if (!is_bridge(g, Edge(apex, b))) return std::nullopt;
  return ParthenogenicObject{ParthKind::Triangle,
                             {apex, std::min(v1, v2), std::max(v1, v2)}};
}

}  // namespace detail

// All diamonds, parthenogenic bridges, and triangles present in g, in a
// deterministic order.  Overlapping objects are all reported.
inline std::vector<ParthenogenicObject> find_parthenogenic_objects(
    const CubicGraph& g) {
  std::vector<ParthenogenicObject> out;
  for (const Edge& e : g.edges()) {
    if (auto d = detail::diamond_at(g, e.u, e.v)) out.push_back(*d);
    if (auto b = detail::parth_bridge_at(g, e.u, e.v)) out.push_back(*b);
  }
  // Triangles: enumerate via each edge's common neighbors above both ends.
  for (const Edge& e : g.edges())
    for (int w : g.neighbors(e.u))
      if (w > e.v && g.has_edge(w, e.v))
        for (int apex : {e.u, e.v, w}) {
          int x = apex == e.u ? e.v : e.u;
          int y = apex == w ? e.v : w;
          if (apex != e.u && apex != e.v) {
            x = e.u;
            y = e.v;
          }
          if (auto t = detail::triangle_at(g, apex, x, y)) out.push_back(*t);
        }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct InvParthResult {
  CubicGraph g1;
  std::vector<Edge> restored;  // P1: the bridge; P2: the 2-cracker; P3: empty
  int apex = -1;               // P3: the surviving apex, in g1's labeling
  OpRecord rec;
};

// Undoes type 1 parthenogenesis: remove the diamond, join its two dangling
// attachment vertices.
inline InvParthResult inv_parth1(const CubicGraph& g,
                                 const ParthenogenicObject& d) {
  if (d.kind != ParthKind::Diamond || d.vertices.size() != 4 ||
      !detail::diamond_at(g, d.vertices[1], d.vertices[2]))
    fail(Err::NotADiamond, "object does not match a parthenogenic diamond");
  int v1 = d.vertices[0], v2 = d.vertices[1], v3 = d.vertices[2],
      v4 = d.vertices[3];
  int a = g.third_neighbor(v1, v2, v3);
  int b = g.third_neighbor(v4, v2, v3);
  auto map = detail::deletion_map(g.n(), {v1, v2, v3, v4});
  std::vector<Edge> edges = detail::induced_edges(g, map);
  Edge restored(map[a], map[b]);
  edges.push_back(restored);
  CubicGraph g1 = CubicGraph::from_edge_list(g.n() - 4, edges);
  int n = g1.n();
  OpRecord rec{OpKind::P1, P1Params{restored}, {}, {n, n + 3}};
  return InvParthResult{std::move(g1), {restored}, -1, std::move(rec)};
}

// Undoes type 2 parthenogenesis: remove the two-vertex gadget and rejoin
// each attachment pair.
inline InvParthResult inv_parth2(const CubicGraph& g,
                                 const ParthenogenicObject& b) {
  if (b.kind != ParthKind::Bridge || b.vertices.size() != 2 ||
      !detail::parth_bridge_at(g, b.vertices[0], b.vertices[1]))
    fail(Err::NotAParthBridge, "object does not match a parthenogenic bridge");
  int x = b.vertices[0], y = b.vertices[1];
  auto pq = g.other_neighbors(x, y);
  auto rs = g.other_neighbors(y, x);
  if (g.has_edge(pq[0], pq[1]))
    fail(Err::WouldCreateMultiEdge,
         to_string(Edge(pq[0], pq[1])) + " already present");
  if (g.has_edge(rs[0], rs[1]))
    fail(Err::WouldCreateMultiEdge,
         to_string(Edge(rs[0], rs[1])) + " already present");
  auto map = detail::deletion_map(g.n(), {x, y});
  std::vector<Edge> edges = detail::induced_edges(g, map);
  Edge e1(map[pq[0]], map[pq[1]]), e2(map[rs[0]], map[rs[1]]);
  edges.push_back(e1);
  edges.push_back(e2);
  CubicGraph g1 = CubicGraph::from_edge_list(g.n() - 2, edges);
  Edge lo = std::min(e1, e2), hi = std::max(e1, e2);
  int n = g1.n();
  OpRecord rec{OpKind::P2, P2Params{lo, hi}, {}, {n, n + 1}};
  return InvParthResult{std::move(g1), {lo, hi}, -1, std::move(rec)};
}

// Undoes type 3 parthenogenesis: remove the triangle's two non-apex vertices
// and rejoin the apex to their outside neighbors.
inline InvParthResult inv_parth3(const CubicGraph& g,
                                 const ParthenogenicObject& t) {
  if (t.kind != ParthKind::Triangle || t.vertices.size() != 3 ||
      !detail::triangle_at(g, t.vertices[0], t.vertices[1], t.vertices[2]))
    fail(Err::NotAParthTriangle, "object does not match a parthenogenic triangle");
  int apex = t.vertices[0], v1 = t.vertices[1], v2 = t.vertices[2];
  int c = g.third_neighbor(v1, apex, v2);
  int d = g.third_neighbor(v2, apex, v1);
  if (c == d)
    fail(Err::IsDiamondCase,
         "shared outside neighbor: the triangle is part of a diamond");
  if (g.has_edge(apex, c) || g.has_edge(apex, d))
    fail(Err::WouldCreateMultiEdge, "apex already joined to an outside neighbor");
  int b0 = g.third_neighbor(apex, v1, v2);
  auto map = detail::deletion_map(g.n(), {v1, v2});
  std::vector<Edge> edges = detail::induced_edges(g, map);
  edges.emplace_back(map[apex], map[c]);
  edges.emplace_back(map[apex], map[d]);
  CubicGraph g1 = CubicGraph::from_edge_list(g.n() - 2, edges);
  int n = g1.n();
  OpRecord rec{OpKind::P3, P3Params{map[apex], Edge(map[apex], map[b0])},
               {},
               {map[apex], n, n + 1}};
  return InvParthResult{std::move(g1), {}, map[apex], std::move(rec)};
}

// ---------------------------------------------------------------------------
// Record replay.

struct ApplyResult {
  CubicGraph child;
  std::vector<Edge> out_edges;
  std::vector<int> out_vertices;
};

// Reapplies a recorded operation to its parent(s).  Two-parent records take
// both arguments; one-parent records ignore p2.
inline ApplyResult apply_record(const OpRecord& rec, const CubicGraph& p1,
                                const CubicGraph* p2) {
  auto need2 = [&]() -> const CubicGraph& {
    if (!p2) fail(Err::ReplayMismatch, "two-parent record given one parent");
    return *p2;
  };
  switch (rec.op) {
    case OpKind::B1: {
      const auto& p = std::get<B1Params>(rec.params);
      auto r = breed1(p1, need2(), p.e1, p.e2);
      return {std::move(r.child), std::move(r.cracker), {}};
    }
    case OpKind::B2: {
      const auto& p = std::get<B2Params>(rec.params);
      auto r = detail::breed2_ordered(p1, need2(), p.e1, p.e2);
      return {std::move(r.child), std::move(r.cracker), {}};
    }
    case OpKind::B3: {
      const auto& p = std::get<B3Params>(rec.params);
      auto r = breed3(p1, need2(), p.v1, p.v2, p.pairing);
      return {std::move(r.child), std::move(r.cracker), {}};
    }
    case OpKind::P1: {
      const auto& p = std::get<P1Params>(rec.params);
      auto r = parth1(p1, p.e1);
      return {std::move(r.child), {}, std::move(r.marks)};
    }
    case OpKind::P2: {
      const auto& p = std::get<P2Params>(rec.params);
      auto r = parth2(p1, p.e1, p.e2);
      return {std::move(r.child), {}, std::move(r.marks)};
    }
    case OpKind::P3: {
      const auto& p = std::get<P3Params>(rec.params);
      auto r = parth3_at(p1, p.a, p.e1.u == p.a ? p.e1.v : p.e1.u);
      return {std::move(r.child), {}, std::move(r.marks)};
    }
  }
  fail(Err::ReplayMismatch, "unknown operation");
}

}  // namespace cubic

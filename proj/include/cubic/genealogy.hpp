#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cubic/analysis.hpp"
#include "cubic/canon.hpp"
#include "cubic/graph.hpp"
#include "cubic/ops.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Ancestral decomposition: repeatedly undo breeding/parthenogenic operations
// until only genes remain.

// One admissible reduction: an inverse breeding at an irreducible cubic
// cracker, or the parthenogenic reduction the case analysis attaches to a
// reducible one.
struct Move {
  std::variant<Cracker, ParthenogenicObject> site;
  OpKind op;
};

namespace detail {

// All admissible reductions, inverse breedings first, otherwise in cracker
// order.  A reducible 1-cracker contributes one move per endpoint whose
// outer pair is already an edge (diamond when the outer pair's third
// neighbors coincide, triangle otherwise); a reducible 2-cracker likewise per
// side.
inline std::vector<Move> admissible_moves(const CubicGraph& g,
                                          const std::vector<Cracker>& crackers) {
  std::vector<Move> breeding, parth;
  for (const Cracker& c : crackers) {
    if (is_irreducible(g, c)) {
      OpKind k = c.size() == 1   ? OpKind::B1
                 : c.size() == 2 ? OpKind::B2
                                 : OpKind::B3;
      breeding.push_back({c, k});
      continue;
    }
    if (c.size() == 1) {
      const Edge& e = c.edges[0];
      for (int end : {e.u, e.v}) {
        int other = e.u == end ? e.v : e.u;
        auto pq = g.other_neighbors(end, other);
        if (!g.has_edge(pq[0], pq[1])) continue;
        int e3 = g.third_neighbor(pq[0], end, pq[1]);
        int f3 = g.third_neighbor(pq[1], end, pq[0]);
        if (e3 == f3) {
          // The block {end, pq, e3} is a hanging diamond.
          ParthenogenicObject obj{
              ParthKind::Diamond,
              {std::min(end, e3), std::min(pq[0], pq[1]),
               std::max(pq[0], pq[1]), std::max(end, e3)}};
          parth.push_back({obj, OpKind::P1});
        } else {
          ParthenogenicObject obj{
              ParthKind::Triangle,
              {end, std::min(pq[0], pq[1]), std::max(pq[0], pq[1])}};
          parth.push_back({obj, OpKind::P3});
        }
      }
    } else {  // size 2; 3-crackers are always irreducible
      auto endpoint_in = [&](const Edge& e, const std::vector<int>& side) {
        return std::binary_search(side.begin(), side.end(), e.u) ? e.u : e.v;
      };
      for (const auto* side : {&c.side_a, &c.side_b}) {
        int x1 = endpoint_in(c.edges[0], *side);
        int x2 = endpoint_in(c.edges[1], *side);
        if (!g.has_edge(x1, x2)) continue;
        int y1 = c.edges[0].u == x1 ? c.edges[0].v : c.edges[0].u;
        int y2 = c.edges[1].u == x2 ? c.edges[1].v : c.edges[1].u;
        int e3 = g.third_neighbor(x1, y1, x2);
        int f3 = g.third_neighbor(x2, y2, x1);
        if (e3 == f3) {
          // Triangle {x1, x2, e3} with its apex on the bridge behind it.
          ParthenogenicObject obj{
              ParthKind::Triangle,
              {e3, std::min(x1, x2), std::max(x1, x2)}};
          parth.push_back({obj, OpKind::P3});
        } else {
          // The pair reduction applies only when the four outer edges really
          // pair off into 2-crackers; with bridges among them (possible only
          // when the graph also has 1-crackers) it must be skipped.
          if (parth_bridge_at(g, x1, x2))
            parth.push_back({ParthenogenicObject{
                                 ParthKind::Bridge,
                                 {std::min(x1, x2), std::max(x1, x2)}},
                             OpKind::P2});
        }
      }
    }
  }
  // Distinct crackers can point at one object; each reduction counts once.
  // First occurrences stay put so the step policy keeps its cracker order.
  for (const Move& m : parth) {
    bool dup = false;
    for (const Move& kept : breeding)
      if (kept.op == m.op &&
          std::holds_alternative<ParthenogenicObject>(kept.site) &&
          std::get<ParthenogenicObject>(kept.site) ==
              std::get<ParthenogenicObject>(m.site)) {
        dup = true;
        break;
      }
    if (!dup) breeding.push_back(m);
  }
  return breeding;
}

}  // namespace detail

struct DecompositionStep {
  Move move;
  std::vector<CubicGraph> parents;  // 2 for inverse breeding, 1 for parthenogenic
  OpRecord rec;
};

namespace detail {

inline DecompositionStep apply_move(const CubicGraph& g, const Move& move) {
  DecompositionStep step{move, {}, {}};
  switch (move.op) {
    case OpKind::B1: {
      auto r = inv_breed1(g, std::get<Cracker>(move.site).edges[0]);
      step.parents = {std::move(r.g1), std::move(r.g2)};
      step.rec = std::move(r.rec);
      break;
    }
    case OpKind::B2: {
      const auto& c = std::get<Cracker>(move.site);
      auto r = inv_breed2(g, c.edges[0], c.edges[1]);
      step.parents = {std::move(r.g1), std::move(r.g2)};
      step.rec = std::move(r.rec);
      break;
    }
    case OpKind::B3: {
      auto r = inv_breed3(g, std::get<Cracker>(move.site).edges);
      step.parents = {std::move(r.g1), std::move(r.g2)};
      step.rec = std::move(r.rec);
      break;
    }
    case OpKind::P1: {
      auto r = inv_parth1(g, std::get<ParthenogenicObject>(move.site));
      step.parents = {std::move(r.g1)};
      step.rec = std::move(r.rec);
      break;
    }
    case OpKind::P2: {
      auto r = inv_parth2(g, std::get<ParthenogenicObject>(move.site));
      step.parents = {std::move(r.g1)};
      step.rec = std::move(r.rec);
      break;
    }
    case OpKind::P3: {
      auto r = inv_parth3(g, std::get<ParthenogenicObject>(move.site));
      step.parents = {std::move(r.g1)};
      step.rec = std::move(r.rec);
      break;
    }
  }
  return step;
}

}  // namespace detail

// One reduction under the deterministic policy: the first irreducible cubic
// cracker if any (inverse breeding), else the case analysis at the first
// reducible one.
inline DecompositionStep decompose_step(const CubicGraph& g) {
  auto crackers = enumerate_cubic_crackers(g);
  if (crackers.empty())
    fail(Err::NotADescendant, "graph has no cubic cracker");
  auto moves = detail::admissible_moves(g, crackers);
  if (moves.empty())
    throw std::logic_error("descendant with no admissible reduction");
  return detail::apply_move(g, moves.front());
}

// ---------------------------------------------------------------------------
// Family trees.

struct FamilyNode {
  CubicGraph graph;
  bool is_gene = false;
};

struct FamilyLink {
  int child = 0;
  std::vector<int> parents;
  OpRecord rec;
};

struct FamilyTree {
  std::vector<FamilyNode> nodes;  // node 0 is the root descendant
  std::vector<FamilyLink> links;
  int root = 0;

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].is_gene) out.push_back(static_cast<int>(i));
    return out;
  }
};

// Full ancestral decomposition under the deterministic step policy.
inline FamilyTree decompose(const CubicGraph& g) {
  FamilyTree t;
  t.nodes.push_back({g, false});
  std::vector<int> work{0};
  while (!work.empty()) {
    int id = work.back();
    work.pop_back();
    const CubicGraph& h = t.nodes[id].graph;
    auto crackers = enumerate_cubic_crackers(h);
    if (crackers.empty()) {
      t.nodes[id].is_gene = true;
      continue;
    }
    auto moves = detail::admissible_moves(h, crackers);
    auto step = detail::apply_move(h, moves.front());
    FamilyLink link{id, {}, std::move(step.rec)};
    for (auto& parent : step.parents) {
      link.parents.push_back(static_cast<int>(t.nodes.size()));
      work.push_back(static_cast<int>(t.nodes.size()));
      t.nodes.push_back({std::move(parent), false});
    }
    t.links.push_back(std::move(link));
  }
  return t;
}

inline GeneMultiset ancestor_genes(const CubicGraph& g) {
  FamilyTree t = decompose(g);
  std::vector<CanonicalCode> codes;
  for (int leaf : t.leaves()) codes.push_back(canonical_form(t.nodes[leaf].graph));
  return GeneMultiset::from_codes(std::move(codes));
}

// Replays every link against its recorded parents and checks each replayed
// child against the stored node, bottom-up.  Returns the root's replay.
inline CubicGraph recompose(const FamilyTree& t) {
  for (const FamilyLink& link : t.links) {
    const CubicGraph& p1 = t.nodes[link.parents[0]].graph;
    const CubicGraph* p2 =
        link.parents.size() > 1 ? &t.nodes[link.parents[1]].graph : nullptr;
    std::optional<ApplyResult> replayed;
    try {
      replayed = apply_record(link.rec, p1, p2);
    } catch (const Error& e) {
      fail(Err::ReplayMismatch, std::string("replay failed: ") + e.what());
    }
    if (!is_isomorphic(replayed->child, t.nodes[link.child].graph))
      fail(Err::ReplayMismatch,
           "replayed child not isomorphic to stored node " +
               std::to_string(link.child));
  }
  // The links above validated every node; rebuild the root's replay (or hand
  // back the root itself when it is a lone gene).
  for (const FamilyLink& link : t.links)
    if (link.child == t.root) {
      const CubicGraph& p1 = t.nodes[link.parents[0]].graph;
      const CubicGraph* p2 =
          link.parents.size() > 1 ? &t.nodes[link.parents[1]].graph : nullptr;
      return apply_record(link.rec, p1, p2).child;
    }
  return t.nodes[t.root].graph;
}

// ---------------------------------------------------------------------------
// Exhaustive decomposition over all pathways.

struct DecompositionAtlas {
  std::vector<GeneMultiset> multisets;  // distinct outcomes, sorted
  bool exhaustive = true;
  uint64_t states_expanded = 0;
  uint64_t pathways = 0;  // distinct reduction trees, saturating
};

namespace detail {

inline uint64_t sat_add(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

inline uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

class AllDecomposer {
 public:
  explicit AllDecomposer(uint64_t budget) : budget_(budget) {}

  struct Entry {
    std::vector<GeneMultiset> multisets;
    uint64_t pathways = 0;
  };

  const Entry& explore(const CubicGraph& g) {
    CanonicalCode code = canonical_form(g);
    auto it = memo_.find(code);
    if (it != memo_.end()) return it->second;
    if (++expanded_ > budget_)
      fail(Err::BudgetExceeded,
           "state budget " + std::to_string(budget_) + " exhausted");

    Entry entry;
    auto crackers = enumerate_cubic_crackers(g);
    if (crackers.empty()) {
      entry.multisets = {GeneMultiset::from_codes({code})};
      entry.pathways = 1;
    } else {
      auto moves = admissible_moves(g, crackers);
      std::vector<GeneMultiset> sets;
      for (const Move& m : moves) {
        auto step = apply_move(g, m);
        if (step.parents.size() == 2) {
          // Copies: recursion may invalidate memo references.
          Entry left = explore(step.parents[0]);
          Entry right = explore(step.parents[1]);
          for (const auto& a : left.multisets)
            for (const auto& b : right.multisets) sets.push_back(a.merged(b));
          entry.pathways =
              sat_add(entry.pathways, sat_mul(left.pathways, right.pathways));
        } else {
          Entry sub = explore(step.parents[0]);
          for (const auto& a : sub.multisets) sets.push_back(a);
          entry.pathways = sat_add(entry.pathways, sub.pathways);
        }
      }
      std::sort(sets.begin(), sets.end());
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      entry.multisets = std::move(sets);
    }
    return memo_.emplace(std::move(code), std::move(entry)).first->second;
  }

  uint64_t expanded() const { return expanded_; }

 private:
  uint64_t budget_;
  uint64_t expanded_ = 0;
  std::map<CanonicalCode, Entry> memo_;
};

}  // namespace detail

// Every distinct ancestor-gene multiset reachable by any sequence of
// admissible reductions.  States are memoized by canonical form; reductions
// on distinct frontier graphs commute, so exploring one graph at a time is
// exhaustive.
inline DecompositionAtlas all_decompositions(const CubicGraph& g,
                                             uint64_t budget = 1'000'000) {
  detail::AllDecomposer dec(budget);
  DecompositionAtlas atlas;
  try {
    auto entry = dec.explore(g);
    atlas.multisets = entry.multisets;
    atlas.pathways = entry.pathways;
  } catch (const Error& e) {
    if (e.code() != Err::BudgetExceeded) throw;
    atlas.exhaustive = false;
  }
  atlas.states_expanded = dec.expanded();
  return atlas;
}

struct ConjectureEvidence {
  bool unique = false;
  bool exhaustive = true;
  uint64_t pathways = 0;
  uint64_t states_expanded = 0;
  std::vector<GeneMultiset> multisets;
};

// True iff every decomposition pathway of g ends in the same gene multiset.
// Genes hold vacuously.
inline ConjectureEvidence verify_conjecture(const CubicGraph& g,
                                            uint64_t budget = 1'000'000) {
  DecompositionAtlas atlas = all_decompositions(g, budget);
  ConjectureEvidence ev;
  ev.exhaustive = atlas.exhaustive;
  ev.pathways = atlas.pathways;
  ev.states_expanded = atlas.states_expanded;
  ev.multisets = atlas.multisets;
  ev.unique = atlas.exhaustive && atlas.multisets.size() == 1;
  return ev;
}

}  // namespace cubic

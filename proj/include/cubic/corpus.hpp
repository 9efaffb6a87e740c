#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cubic/analysis.hpp"
#include "cubic/canon.hpp"
#include "cubic/genealogy.hpp"
#include "cubic/graph.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Enumeration of connected cubic graphs, one representative per isomorphism
// class.  Orderly generation: rows of the adjacency matrix are fixed in
// vertex order, a prefix survives only while no transposition of two placed
// vertices yields a lexicographically larger row-major bit string (the
// maximal labeling of every class passes), and finished graphs are
// deduplicated by canonical code.

namespace detail {

class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, int girth_min)
      : n_(n), girth_min_(girth_min), adj_(n, 0), deg_(n, 0) {}

  void run(const std::function<void(CubicGraph)>& emit) {
    emit_ = &emit;
    // The maximal labeling always starts with N(0) = {1,2,3}.
    link(0, 1);
    link(0, 2);
    link(0, 3);
    if (row_ok(0)) extend(1);
  }

 private:
  bool has(int u, int v) const { return (adj_[u] >> v) & 1; }
  void link(int u, int v) {
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
    ++deg_[u];
    ++deg_[v];
  }
  void unlink(int u, int v) {
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
    --deg_[u];
    --deg_[v];
  }

  static uint64_t bitswap(uint64_t m, int i, int j) {
    uint64_t bi = (m >> i) & 1, bj = (m >> j) & 1;
    m &= ~((1ull << i) | (1ull << j));
    return m | (bi << j) | (bj << i);
  }

  // Compares the decided prefix (rows 0..v, row-major, low bit first) with
  // its image under the transposition (i j).  Result: -1 swap wins (prune),
  // +1 original wins, 0 equal or undecidable.  For i <= v < j only row i
  // consults undecided bits; the scan stops there.
  int swap_compare(int v, int i, int j) const {
    for (int r = 0; r <= v; ++r) {
      int sr = r == i ? j : r == j ? i : r;
      uint64_t above = ~((2ull << r) - 1);  // columns > r
      uint64_t orig = adj_[r] & above;
      uint64_t swapped = bitswap(adj_[sr], i, j) & above;
      if (sr > v) {
        // This swapped row belongs to the undecided vertex j: only columns
        // <= v are known (column j always matches and may be skipped).
        uint64_t decided = (2ull << v) - 1;
        uint64_t d = (orig ^ swapped) & decided;
        if (d) {
          uint64_t lsb = d & (~d + 1);
          return (swapped & lsb) ? -1 : +1;
        }
        bool tail_all_decided = (v + 1 == n_) || (v + 2 == n_ && j == n_ - 1);
        if (!tail_all_decided) return 0;
        continue;
      }
      uint64_t d = orig ^ swapped;
      if (d) {
        uint64_t lsb = d & (~d + 1);
        return (swapped & lsb) ? -1 : +1;
      }
    }
    return 0;
  }

  bool row_ok(int v) const {
    // Discovery order: the next vertex must already have a lower neighbor.
    if (v + 1 < n_ && deg_[v + 1] == 0) return false;
    // Remaining stubs pair up among vertices above v.
    int stubs = 0;
    for (int u = v + 1; u < n_; ++u) stubs += 3 - deg_[u];
    if (stubs % 2 != 0) return false;
    // Each open vertex needs enough non-adjacent open partners.
    uint64_t open = 0;
    for (int u = v + 1; u < n_; ++u)
      if (deg_[u] < 3) open |= 1ull << u;
    for (int u = v + 1; u < n_; ++u) {
      int need = 3 - deg_[u];
      if (need == 0) continue;
      int avail = std::popcount(open & ~adj_[u] & ~(1ull << u));
      if (need > avail) return false;
    }
    // Swapping two undecided vertices only touches decided bits, so their
    // columns must arrive lexicographically non-increasing.
    uint64_t low = (2ull << v) - 1;
    for (int u = v + 1; u < n_; ++u)
      for (int w = u + 1; w < n_; ++w) {
        uint64_t cu = adj_[u] & low, cw = adj_[w] & low;
        uint64_t d = cu ^ cw;
        if (d && !(cu & (d & (~d + 1)))) return false;
      }
    // Swaps against the vertex just placed; rows settled at earlier depths
    // kept their verdict, so older low pairs need no recheck.
    for (int i = 0; i < v; ++i)
      if (swap_compare(v, i, v) < 0) return false;
    // Mixed pairs carry partial information and are rechecked as rows land.
    for (int i = 0; i <= v; ++i)
      for (int j = v + 1; j < n_; ++j)
        if (swap_compare(v, i, j) < 0) return false;
    return true;
  }

  void extend(int v) {
    if (v == n_) {
      finish();
      return;
    }
    int need = 3 - deg_[v];
    if (need == 0) {
      if (row_ok(v)) extend(v + 1);
      return;
    }
    std::vector<int> cand;
    for (int u = v + 1; u < n_; ++u)
      if (deg_[u] < 3) cand.push_back(u);
    choose(v, need, cand, 0);
  }

  void choose(int v, int need, const std::vector<int>& cand, size_t from) {
    if (need == 0) {
      if (row_ok(v)) extend(v + 1);
      return;
    }
    if (cand.size() - from < static_cast<size_t>(need)) return;
    for (size_t i = from; i < cand.size(); ++i) {
      link(v, cand[i]);
      choose(v, need - 1, cand, i + 1);
      unlink(v, cand[i]);
    }
  }

  void finish() {
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u)
      for (int w = u + 1; w < n_; ++w)
        if (has(u, w)) edges.emplace_back(u, w);
    CubicGraph g = CubicGraph::from_edge_list(n_, edges);
    if (girth_min_ > 3 && girth(g) < girth_min_) return;
    CubicGraph canon = canonical_relabel(g);
    if (seen_.insert(to_graph6(canon)).second) (*emit_)(std::move(canon));
  }

  int n_, girth_min_;
  std::vector<uint64_t> adj_;
  std::vector<int> deg_;
  std::set<std::string> seen_;
  const std::function<void(CubicGraph)>* emit_ = nullptr;
};

}  // namespace detail

inline constexpr int kDefaultEnumerationCeiling = 16;

// All connected cubic graphs on n vertices, canonically labeled, in
// ascending canonical-code order.  girth_min > 3 filters (e.g. 4 for
// triangle-free).
inline std::vector<CubicGraph> enumerate_cubic(
    int n, int ceiling = kDefaultEnumerationCeiling, int girth_min = 3) {
  if (n < 4 || n % 2 != 0)
    fail(Err::OddOrder, "vertex count " + std::to_string(n));
  if (n > ceiling)
    fail(Err::SizeCeiling, std::to_string(n) + " exceeds ceiling " +
                               std::to_string(ceiling) +
                               " (raise the ceiling explicitly for big runs)");
  if (n > 62) fail(Err::SizeCeiling, "enumerator supports n <= 62");
  std::vector<CubicGraph> out;
  detail::OrderlyGenerator gen(n, girth_min);
  gen.run([&](CubicGraph g) { out.push_back(std::move(g)); });
  std::sort(out.begin(), out.end(), [](const CubicGraph& a, const CubicGraph& b) {
    return to_graph6(a) < to_graph6(b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Worker pool used by the batch pipeline and sweeps.  Results are collected
// by input index, so output order never depends on scheduling.

inline int worker_count() {
  if (const char* env = std::getenv("CUBIC_GENETICS_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename T, typename Fn>
std::vector<T> parallel_map(size_t count, Fn&& fn, int threads = 0) {
  if (threads <= 0) threads = worker_count();
  std::vector<T> results(count);
  if (threads == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int spawn = std::min<size_t>(threads, count);
  for (int t = 0; t < spawn; ++t)
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        results[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return results;
}

// ---------------------------------------------------------------------------
// Table of non-Hamiltonian counts by cyclic-connectivity class.

struct StatsRecord {
  int n = 0;
  long total = 0;
  long nh = 0;        // non-Hamiltonian graphs
  long nh1 = 0;       // of those, bridge graphs
  long nh2plus = 0;   // nh - nh1
  long nh4plus = 0;   // mutants: cyclically 4+-connected (or cracker-free)
  double pct_nh1 = 0, pct_nh2plus = 0, pct_nh4plus = 0, pct_ratio = 0;
};

namespace detail {

inline double pct_round(long num, long den) {
  if (den == 0) return 0.0;
  double x = 100.0 * static_cast<double>(num) / static_cast<double>(den);
  return std::floor(x * 100.0 + 0.5) / 100.0;  // half-up to 2 decimals
}

}  // namespace detail

inline StatsRecord tally_stats(int n, const std::vector<Classification>& cls) {
  StatsRecord s;
  s.n = n;
  s.total = static_cast<long>(cls.size());
  for (const Classification& c : cls) {
    if (c.hamiltonian) continue;
    ++s.nh;
    if (c.smallest_cubic_cracker && *c.smallest_cubic_cracker == 1)
      ++s.nh1;
    if (c.mutant) ++s.nh4plus;
  }
  s.nh2plus = s.nh - s.nh1;
  s.pct_nh1 = detail::pct_round(s.nh1, s.nh);
  s.pct_nh2plus = detail::pct_round(s.nh2plus, s.nh);
  s.pct_nh4plus = detail::pct_round(s.nh4plus, s.nh);
  s.pct_ratio = detail::pct_round(s.nh4plus, s.nh2plus);
  return s;
}

inline StatsRecord table1_stats(int n, int ceiling = kDefaultEnumerationCeiling,
                                int threads = 0) {
  auto graphs = enumerate_cubic(n, ceiling);
  auto cls = parallel_map<Classification>(
      graphs.size(), [&](size_t i) { return classify(graphs[i]); }, threads);
  return tally_stats(n, cls);
}

// ---------------------------------------------------------------------------
// graph6 file ingestion.

struct IngestItem {
  size_t line = 0;
  CubicGraph graph;
};

struct IngestError {
  size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<IngestItem> graphs;
  std::vector<IngestError> errors;
};

// Parses LF-separated graph6 lines.  fail_fast throws on the first bad line;
// otherwise bad lines are collected with their line numbers.
inline IngestResult ingest_graph6(std::istream& in, bool fail_fast = true) {
  IngestResult out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back({lineno, parse_graph6(line)});
    } catch (const Error& e) {
      if (fail_fast)
        throw Error(e.code(),
                    "line " + std::to_string(lineno) + ": " + e.what());
      out.errors.push_back({lineno, e.what()});
    }
  }
  return out;
}

}  // namespace cubic

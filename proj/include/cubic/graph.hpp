#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubic {

// Every failure mode carries one of these codes; the name is embedded in the
// exception message so CLI diagnostics can surface it verbatim.
enum class Err {
  OddOrder,
  BadVertexId,
  NotSimple,
  NotCubic,
  NotConnected,
  MalformedEncoding,
  NotACracker,
  InvalidEdge,
  InvalidVertex,
  BridgeEdge,
  BadPairing,
  NotABridge,
  NotA2Cracker,
  NotA3Cracker,
  NotOnBridge,
  Reducible1Cracker,
  Reducible2Cracker,
  NotADiamond,
  NotAParthBridge,
  NotAParthTriangle,
  WouldCreateMultiEdge,
  IsDiamondCase,
  NotADescendant,
  ReplayMismatch,
  BudgetExceeded,
  SizeCeiling,
  IoError,
};

inline const char* err_name(Err c) {
  switch (c) {
    case Err::OddOrder: return "OddOrder";
    case Err::BadVertexId: return "BadVertexId";
    case Err::NotSimple: return "NotSimple";
    case Err::NotCubic: return "NotCubic";
    case Err::NotConnected: return "NotConnected";
    case Err::MalformedEncoding: return "MalformedEncoding";
    case Err::NotACracker: return "NotACracker";
    case Err::InvalidEdge: return "InvalidEdge";
    case Err::InvalidVertex: return "InvalidVertex";
    case Err::BridgeEdge: return "BridgeEdge";
    case Err::BadPairing: return "BadPairing";
    case Err::NotABridge: return "NotABridge";
    case Err::NotA2Cracker: return "NotA2Cracker";
    case Err::NotA3Cracker: return "NotA3Cracker";
    case Err::NotOnBridge: return "NotOnBridge";
    case Err::Reducible1Cracker: return "Reducible1Cracker";
    case Err::Reducible2Cracker: return "Reducible2Cracker";
    case Err::NotADiamond: return "NotADiamond";
    case Err::NotAParthBridge: return "NotAParthBridge";
    case Err::NotAParthTriangle: return "NotAParthTriangle";
    case Err::WouldCreateMultiEdge: return "WouldCreateMultiEdge";
    case Err::IsDiamondCase: return "IsDiamondCase";
    case Err::NotADescendant: return "NotADescendant";
    case Err::ReplayMismatch: return "ReplayMismatch";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::SizeCeiling: return "SizeCeiling";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail) {
  throw Error(code, detail);
}

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple connected 3-regular graph, immutable after construction.
// Vertices are 0..n-1; adjacency holds each vertex's three neighbors in
// ascending order; edges() is the sorted list of all 3n/2 pairs.
class CubicGraph {
 public:
  static CubicGraph from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 4 || n % 2 != 0)
      fail(Err::OddOrder, "vertex count " + std::to_string(n) +
                              " (must be even and at least 4)");
    for (const Edge& e : pairs) {
      if (e.u < 0 || e.v >= n)
        fail(Err::BadVertexId, to_string(e) + " with n=" + std::to_string(n));
      if (e.u == e.v) fail(Err::NotSimple, "loop at vertex " + std::to_string(e.u));
    }
    std::vector<Edge> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Err::NotSimple, "duplicate edge");

    std::vector<int> deg(n, 0);
    for (const Edge& e : sorted) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (int v = 0; v < n; ++v)
      if (deg[v] != 3)
        fail(Err::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(deg[v]));

    CubicGraph g;
    g.n_ = n;
    g.edges_ = std::move(sorted);
    g.adj_.assign(n, {-1, -1, -1});
    std::vector<int> fill(n, 0);
    for (const Edge& e : g.edges_) {
      g.adj_[e.u][fill[e.u]++] = e.v;
      g.adj_[e.v][fill[e.v]++] = e.u;
    }
    for (auto& trio : g.adj_) std::sort(trio.begin(), trio.end());

    if (!g.connected()) fail(Err::NotConnected, "graph is not connected");
    return g;
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::array<int, 3>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  bool has_edge(int a, int b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    const auto& t = adj_[a];
    return t[0] == b || t[1] == b || t[2] == b;
  }

  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // The neighbor of v distinct from a and b (v's trio is {a, b, result}).
  int third_neighbor(int v, int a, int b) const {
    for (int w : neighbors(v))
      if (w != a && w != b) return w;
    fail(Err::InvalidVertex, "vertex " + std::to_string(v) +
                                 " not adjacent to both " + std::to_string(a) +
                                 " and " + std::to_string(b));
  }

  // The two neighbors of v other than x, ascending.
  std::array<int, 2> other_neighbors(int v, int x) const {
    std::array<int, 2> out{-1, -1};
    int k = 0;
    for (int w : neighbors(v))
      if (w != x) out[k++] = w;
    if (k != 2)
      fail(Err::InvalidVertex, std::to_string(v) + " not adjacent to " +
                                   std::to_string(x));
    return out;
  }

  // perm[old_id] = new_id; perm must be a bijection on 0..n-1.
  CubicGraph relabel(const std::vector<int>& perm) const {
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
    return from_edge_list(n_, mapped);
  }

  friend bool operator==(const CubicGraph&, const CubicGraph&) = default;

 private:
  CubicGraph() = default;

  void check_vertex(int v) const {
    if (!has_vertex(v))
      fail(Err::BadVertexId,
           std::to_string(v) + " with n=" + std::to_string(n_));
  }

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n_;
  }

  int n_ = 0;
  std::vector<std::array<int, 3>> adj_;
  std::vector<Edge> edges_;
};

inline CubicGraph from_edge_list(int n, const std::vector<Edge>& pairs) {
  return CubicGraph::from_edge_list(n, pairs);
}

// ---------------------------------------------------------------------------
// graph6 encoding.
//
// Byte 0 encodes n as chr(n+63) for n <= 62; larger n use the standard
// four-byte form chr(126) followed by three 6-bit groups (big-endian), each
// +63.  Then the upper-triangle bits b(i,j) for j = 1..n-1, i = 0..j-1 are
// packed six per byte, big-endian within each group, each group +63,
// zero-padded to a multiple of six bits.

namespace detail {

inline size_t g6_body_bytes(int n) {
  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

inline std::string to_graph6(const CubicGraph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline CubicGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail(Err::MalformedEncoding, "empty input");

  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      fail(Err::MalformedEncoding, "byte outside printable graph6 range");

  size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    // Four-byte form; the eight-byte form (n > 258047) is out of range here.
    if (text.size() < 4 || text[1] == 126)
      fail(Err::MalformedEncoding, "unsupported or truncated order field");
    n = ((long)(text[1] - 63) << 12) | ((long)(text[2] - 63) << 6) |
        (long)(text[3] - 63);
    pos = 4;
  }
  if (n > 1000) fail(Err::MalformedEncoding, "order too large: " + std::to_string(n));
  // Order errors (odd/tiny n) take precedence once the frame is well-formed,
  // so that e.g. "B?" reports OddOrder rather than a length complaint.
  if (n < 4 || n % 2 != 0)
    fail(Err::OddOrder,
         "vertex count " + std::to_string(n) + " (must be even and at least 4)");

  size_t body = detail::g6_body_bytes(static_cast<int>(n));
  if (text.size() - pos != body)
    fail(Err::MalformedEncoding,
         "expected " + std::to_string(body) + " body bytes, got " +
             std::to_string(text.size() - pos));

  std::vector<Edge> pairs;
  int acc = 0, nbits = 0;
  size_t at = pos;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = text[at++] - 63;
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) pairs.emplace_back(i, j);
      --nbits;
    }
  }
  // Padding bits must be zero for a bit-exact round trip.
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    fail(Err::MalformedEncoding, "nonzero padding bits");
  return CubicGraph::from_edge_list(static_cast<int>(n), pairs);
}

// ---------------------------------------------------------------------------
// Edge-list text: first line "n", then one "u v" per line, '#' starts a
// comment.  Used for hand-written fixtures.

inline CubicGraph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> pairs;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (n < 0) {
      int count;
      if (fields >> count) n = count;
      continue;  // blank/comment lines may precede the order line
    }
    int u, v;
    if (fields >> u) {
      if (!(fields >> v))
        fail(Err::MalformedEncoding, "line " + std::to_string(lineno) +
                                         ": expected \"u v\"");
      pairs.emplace_back(u, v);
    }
  }
  if (n < 0) fail(Err::MalformedEncoding, "missing vertex-count line");
  return CubicGraph::from_edge_list(n, pairs);
}

inline std::string to_edge_list_text(const CubicGraph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Named graphs.

inline const CubicGraph& k4() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return g;
}

inline const CubicGraph& k33() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  return g;
}

// Two triangles joined by a perfect matching; girth 3 with a 3-cracker.
inline const CubicGraph& prism() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  return g;
}

inline const CubicGraph& petersen() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},            // outer cycle
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},            // spokes
           {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});          // inner star
  return g;
}

// Two K4-minus-an-edge blocks joined by two edges: the smallest graph whose
// only cubic cracker is the 2-cracker {(2,6),(3,7)}.
inline const CubicGraph& twocrack8() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
          {2, 6}, {3, 7}});
  return g;
}

// Two K4-minus-an-edge blocks joined through two new degree-3 vertices and
// the bridge (8,9).
inline const CubicGraph& bridge10() {
  static const CubicGraph g = CubicGraph::from_edge_list(
      10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
           {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
           {2, 8}, {3, 8}, {6, 9}, {7, 9}, {8, 9}});
  return g;
}

}  // namespace cubic

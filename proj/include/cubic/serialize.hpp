#pragma once

#include <string>

#include <json.hpp>

#include "cubic/analysis.hpp"
#include "cubic/canon.hpp"
#include "cubic/corpus.hpp"
#include "cubic/genealogy.hpp"
#include "cubic/graph.hpp"
#include "cubic/ops.hpp"

namespace cubic {

// Insertion-ordered JSON keeps every emitted document byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Edge edge_from_json(const Json& j) {
  return Edge(j.at(0).get<int>(), j.at(1).get<int>());
}

inline Json to_json(const Classification& c) {
  Json j;
  j["kind"] = c.kind == Kind::Gene ? "gene" : "descendant";
  j["cyclic_connectivity"] =
      c.cyclic_connectivity ? Json(*c.cyclic_connectivity) : Json(nullptr);
  j["smallest_cubic_cracker"] =
      c.smallest_cubic_cracker ? Json(*c.smallest_cubic_cracker) : Json(nullptr);
  j["girth"] = c.girth;
  j["hamiltonian"] = c.hamiltonian;
  j["mutant"] = c.mutant;
  j["snark_mutant"] = c.snark_mutant ? Json(*c.snark_mutant) : Json(nullptr);
  return j;
}

inline Json to_json(const GeneMultiset& m) {
  Json arr = Json::array();
  for (const auto& [code, count] : m.entries)
    arr.push_back(Json{{"g6", code.code}, {"count", count}});
  return arr;
}

inline Json to_json(const Cracker& c) {
  Json edges = Json::array();
  for (const Edge& e : c.edges) edges.push_back(to_json(e));
  return Json{{"edges", edges}, {"side_a", c.side_a}, {"side_b", c.side_b}};
}

// ---------------------------------------------------------------------------
// Operation records.  Parameter names follow the defining constructions so a
// record replays identically elsewhere.

inline Json to_json(const OpRecord& rec) {
  Json params, outputs;
  switch (rec.op) {
    case OpKind::B1: {
      const auto& p = std::get<B1Params>(rec.params);
      params = {{"e1", to_json(p.e1)}, {"e2", to_json(p.e2)}};
      outputs = {{"e", to_json(rec.out_edges[0])}};
      break;
    }
    case OpKind::B2: {
      const auto& p = std::get<B2Params>(rec.params);
      params = {{"e1", Json::array({p.e1[0], p.e1[1]})},
                {"e2", Json::array({p.e2[0], p.e2[1]})}};
      outputs = {{"e3", to_json(rec.out_edges[0])},
                 {"e4", to_json(rec.out_edges[1])}};
      break;
    }
    case OpKind::B3: {
      const auto& p = std::get<B3Params>(rec.params);
      Json pairing = Json::array();
      for (const auto& [x, y] : p.pairing) pairing.push_back(Json::array({x, y}));
      params = {{"v1", p.v1}, {"v2", p.v2}, {"pairing", pairing}};
      outputs = {{"e1", to_json(rec.out_edges[0])},
                 {"e2", to_json(rec.out_edges[1])},
                 {"e3", to_json(rec.out_edges[2])}};
      break;
    }
    case OpKind::P1: {
      const auto& p = std::get<P1Params>(rec.params);
      params = {{"e1", to_json(p.e1)}};
      outputs = {{"v1", rec.out_vertices[0]}, {"v4", rec.out_vertices[1]}};
      break;
    }
    case OpKind::P2: {
      const auto& p = std::get<P2Params>(rec.params);
      params = {{"e1", to_json(p.e1)}, {"e2", to_json(p.e2)}};
      outputs = {{"v1", rec.out_vertices[0]}, {"v2", rec.out_vertices[1]}};
      break;
    }
    case OpKind::P3: {
      const auto& p = std::get<P3Params>(rec.params);
      params = {{"a", p.a}, {"e1", to_json(p.e1)}};
      outputs = {{"a", rec.out_vertices[0]},
                 {"v1", rec.out_vertices[1]},
                 {"v2", rec.out_vertices[2]}};
      break;
    }
  }
  return Json{{"op", op_name(rec.op)}, {"params", params}, {"outputs", outputs}};
}

inline OpRecord op_record_from_json(const Json& j) {
  OpRecord rec;
  const std::string op = j.at("op").get<std::string>();
  const Json& params = j.at("params");
  const Json& outputs = j.at("outputs");
  if (op == "B1") {
    rec.op = OpKind::B1;
    rec.params = B1Params{edge_from_json(params.at("e1")),
                          edge_from_json(params.at("e2"))};
    rec.out_edges = {edge_from_json(outputs.at("e"))};
  } else if (op == "B2") {
    rec.op = OpKind::B2;
    B2Params p;
    p.e1 = {params.at("e1").at(0).get<int>(), params.at("e1").at(1).get<int>()};
    p.e2 = {params.at("e2").at(0).get<int>(), params.at("e2").at(1).get<int>()};
    rec.params = p;
    rec.out_edges = {edge_from_json(outputs.at("e3")),
                     edge_from_json(outputs.at("e4"))};
  } else if (op == "B3") {
    rec.op = OpKind::B3;
    B3Params p;
    p.v1 = params.at("v1").get<int>();
    p.v2 = params.at("v2").get<int>();
    for (int i = 0; i < 3; ++i) {
      p.pairing[i] = {params.at("pairing").at(i).at(0).get<int>(),
                      params.at("pairing").at(i).at(1).get<int>()};
    }
    rec.params = p;
    rec.out_edges = {edge_from_json(outputs.at("e1")),
                     edge_from_json(outputs.at("e2")),
                     edge_from_json(outputs.at("e3"))};
  } else if (op == "P1") {
    rec.op = OpKind::P1;
    rec.params = P1Params{edge_from_json(params.at("e1"))};
    rec.out_vertices = {outputs.at("v1").get<int>(), outputs.at("v4").get<int>()};
  } else if (op == "P2") {
    rec.op = OpKind::P2;
    rec.params = P2Params{edge_from_json(params.at("e1")),
                          edge_from_json(params.at("e2"))};
    rec.out_vertices = {outputs.at("v1").get<int>(), outputs.at("v2").get<int>()};
  } else if (op == "P3") {
    rec.op = OpKind::P3;
    rec.params = P3Params{params.at("a").get<int>(),
                          edge_from_json(params.at("e1"))};
    rec.out_vertices = {outputs.at("a").get<int>(), outputs.at("v1").get<int>(),
                        outputs.at("v2").get<int>()};
  } else {
    fail(Err::MalformedEncoding, "unknown op \"" + op + "\"");
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Family trees: JSON for replay, DOT for eyeballs.

inline Json to_json(const FamilyTree& t) {
  Json nodes = Json::array();
  for (size_t i = 0; i < t.nodes.size(); ++i)
    nodes.push_back(Json{{"id", i},
                         {"g6", to_graph6(t.nodes[i].graph)},
                         {"gene", t.nodes[i].is_gene}});
  Json links = Json::array();
  for (const FamilyLink& l : t.links)
    links.push_back(
        Json{{"child", l.child}, {"parents", l.parents}, {"rec", to_json(l.rec)}});
  return Json{{"root", t.root}, {"nodes", nodes}, {"links", links}};
}

inline FamilyTree family_tree_from_json(const Json& j) {
  FamilyTree t;
  t.root = j.at("root").get<int>();
  for (const Json& nj : j.at("nodes"))
    t.nodes.push_back(
        {parse_graph6(nj.at("g6").get<std::string>()), nj.at("gene").get<bool>()});
  for (const Json& lj : j.at("links")) {
    FamilyLink l;
    l.child = lj.at("child").get<int>();
    l.parents = lj.at("parents").get<std::vector<int>>();
    l.rec = op_record_from_json(lj.at("rec"));
    t.links.push_back(std::move(l));
  }
  return t;
}

// Gene leaves as boxes, descendants as ellipses, links labeled with the
// operation that produced the child.
inline std::string render_tree_dot(const FamilyTree& t) {
  std::string out = "digraph family {\n";
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           to_graph6(canonical_relabel(t.nodes[i].graph)) + "\", shape=" +
           (t.nodes[i].is_gene ? "box" : "ellipse") + "];\n";
  }
  for (const FamilyLink& l : t.links)
    for (int p : l.parents)
      out += "  n" + std::to_string(p) + " -> n" + std::to_string(l.child) +
             " [label=\"" + op_name(l.rec.op) + "\"];\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Stats CSV, mirroring the NH distribution table plus raw counts.

inline std::string stats_csv_header() {
  return "n,total,nh,nh1,nh2plus,nh4plus,pct_nh1,pct_nh2plus,pct_nh4plus,"
         "pct_nh4plus_over_nh2plus";
}

namespace detail {

inline std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace detail

inline std::string to_csv_row(const StatsRecord& s) {
  return std::to_string(s.n) + "," + std::to_string(s.total) + "," +
         std::to_string(s.nh) + "," + std::to_string(s.nh1) + "," +
         std::to_string(s.nh2plus) + "," + std::to_string(s.nh4plus) + "," +
         detail::fmt2(s.pct_nh1) + "," + detail::fmt2(s.pct_nh2plus) + "," +
         detail::fmt2(s.pct_nh4plus) + "," + detail::fmt2(s.pct_ratio);
}

}  // namespace cubic

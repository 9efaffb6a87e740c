#include <catch2/catch_amalgamated.hpp>

#include "cubic/batch.hpp"
#include "cubic/serialize.hpp"

using namespace cubic;

TEST_CASE("classification JSON uses the full field names") {
  Json j = to_json(classify(petersen()));
  CHECK(j.at("kind") == "gene");
  CHECK(j.at("cyclic_connectivity") == 5);
  CHECK(j.at("smallest_cubic_cracker").is_null());
  CHECK(j.at("girth") == 5);
  CHECK(j.at("hamiltonian") == false);
  CHECK(j.at("mutant") == true);
  CHECK(j.at("snark_mutant") == true);

  Json b = to_json(classify(bridge10()));
  CHECK(b.at("kind") == "descendant");
  CHECK(b.at("smallest_cubic_cracker") == 1);
  CHECK(b.at("snark_mutant").is_null());
}

TEST_CASE("gene multiset JSON is sorted by code") {
  GeneMultiset m = GeneMultiset::from_codes(
      {canonical_form(petersen()), canonical_form(k4()), canonical_form(k4())});
  Json j = to_json(m);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("g6").get<std::string>() < j[1].at("g6").get<std::string>());
  int total = 0;
  for (const auto& entry : j) total += entry.at("count").get<int>();
  CHECK(total == 3);
}

TEST_CASE("operation records round-trip through JSON") {
  std::vector<OpRecord> recs;
  recs.push_back(breed1(k4(), k4(), {2, 3}, {2, 3}).rec);
  recs.push_back(breed2(k4(), k4(), {2, 3}, {2, 3}).rec);
  std::array<std::array<int, 2>, 3> pairing{{{1, 1}, {2, 2}, {3, 3}}};
  recs.push_back(breed3(k4(), k4(), 0, 0, pairing).rec);
  recs.push_back(parth1(bridge10(), {8, 9}).rec);
  recs.push_back(parth2(twocrack8(), {2, 6}, {3, 7}).rec);
  recs.push_back(parth3(bridge10(), 8).rec);

  for (const OpRecord& rec : recs) {
    Json j = to_json(rec);
    OpRecord back = op_record_from_json(j);
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("B1 record JSON names its parameters after the construction") {
  Json j = to_json(breed1(k4(), k4(), {2, 3}, {1, 2}).rec);
  CHECK(j.at("op") == "B1");
  CHECK(j.at("params").at("e1") == Json::array({2, 3}));
  CHECK(j.at("params").at("e2") == Json::array({1, 2}));
  CHECK(j.at("outputs").at("e") == Json::array({8, 9}));
}

TEST_CASE("family trees round-trip through JSON and replay afterwards") {
  CubicGraph chained =
      breed1(breed2(k4(), k4(), {2, 3}, {2, 3}).child, k33(), {0, 1}, {0, 3}).child;
  FamilyTree t = decompose(chained);
  Json j = to_json(t);
  FamilyTree back = family_tree_from_json(j);
  REQUIRE(back.nodes.size() == t.nodes.size());
  for (size_t i = 0; i < t.nodes.size(); ++i)
    CHECK(back.nodes[i].graph == t.nodes[i].graph);
  CHECK(is_isomorphic(recompose(back), chained));
  CHECK(to_json(back) == j);
}

TEST_CASE("DOT export shapes leaves as boxes and labels ops") {
  FamilyTree t = decompose(bridge10());
  std::string dot = render_tree_dot(t);
  CHECK(dot.find("digraph family {") == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=ellipse") != std::string::npos);
  CHECK(dot.find("label=\"B1\"") != std::string::npos);
  // 3 nodes, 2 edges for the bridge graph's tree.
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 3 + 2 + 1);

  std::string single = render_tree_dot(decompose(petersen()));
  CHECK(std::count(single.begin(), single.end(), '\n') == 3);
  CHECK(single.find("shape=box") != std::string::npos);
}

TEST_CASE("stats CSV formatting pins two decimals") {
  StatsRecord s = table1_stats(10);
  CHECK(to_csv_row(s) == "10,19,2,1,1,1,50.00,50.00,50.00,100.00");
  CHECK(stats_csv_header() ==
        "n,total,nh,nh1,nh2plus,nh4plus,pct_nh1,pct_nh2plus,pct_nh4plus,"
        "pct_nh4plus_over_nh2plus");
}

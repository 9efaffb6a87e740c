#include <catch2/catch_amalgamated.hpp>

#include "cubic/analysis.hpp"
#include "cubic/corpus.hpp"
#include "oracles.hpp"

using namespace cubic;

TEST_CASE("bridges") {
  CHECK(bridges(bridge10()) == std::vector<Edge>{{8, 9}});
  CHECK(bridges(k4()).empty());
  CHECK(bridges(petersen()).empty());
  CHECK(bridges(twocrack8()).empty());

  // Confirm by per-edge removal with the oracle's component counter.
  for (const Edge& e : bridge10().edges()) {
    bool disconnects = oracle::component_count(bridge10(), {e}) > 1;
    CHECK(disconnects == (e == Edge(8, 9)));
  }
}

TEST_CASE("cubic cracker enumeration on the named graphs") {
  auto tc = enumerate_cubic_crackers(twocrack8());
  REQUIRE(tc.size() == 1);
  CHECK(tc[0].edges == std::vector<Edge>{{2, 6}, {3, 7}});
  CHECK(tc[0].side_a == std::vector<int>{0, 1, 2, 3});
  CHECK(tc[0].side_b == std::vector<int>{4, 5, 6, 7});

  auto pr = enumerate_cubic_crackers(prism());
  REQUIRE(pr.size() == 1);
  CHECK(pr[0].edges == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});

  CHECK(enumerate_cubic_crackers(k33()).empty());
  CHECK(enumerate_cubic_crackers(k4()).empty());
  CHECK(enumerate_cubic_crackers(petersen()).empty());
}

TEST_CASE("cracker_sides validates minimality and independence") {
  auto [a, b] = cracker_sides(twocrack8(), {{2, 6}, {3, 7}});
  CHECK(a == std::vector<int>{0, 1, 2, 3});
  CHECK(b == std::vector<int>{4, 5, 6, 7});

  auto [pa, pb] = cracker_sides(prism(), {{0, 3}, {1, 4}, {2, 5}});
  CHECK(pa == std::vector<int>{0, 1, 2});
  CHECK(pb == std::vector<int>{3, 4, 5});

  CHECK_THROWS_MATCHES(cracker_sides(k4(), {{0, 1}}), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("NotACracker")));
  // Adjacent edges are rejected even if they cut.
  CHECK_THROWS_AS(cracker_sides(bridge10(), {{2, 8}, {3, 8}}), Error);
  // A superset of a bridge fails minimality.
  CHECK_THROWS_AS(cracker_sides(bridge10(), {{8, 9}, {0, 1}}), Error);
}

TEST_CASE("cyclic edge connectivity") {
  CHECK(cyclic_edge_connectivity(petersen()) == 5);
  CHECK(cyclic_edge_connectivity(prism()) == 3);
  CHECK(cyclic_edge_connectivity(twocrack8()) == 2);
  CHECK(cyclic_edge_connectivity(bridge10()) == 1);
  CHECK_FALSE(cyclic_edge_connectivity(k4()).has_value());
  CHECK_FALSE(cyclic_edge_connectivity(k33()).has_value());
}

TEST_CASE("girth") {
  CHECK(girth(k4()) == 3);
  CHECK(girth(k33()) == 4);
  CHECK(girth(prism()) == 3);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(twocrack8()) == 3);
}

TEST_CASE("hamiltonicity with validated witnesses") {
  auto r4 = is_hamiltonian(k4());
  REQUIRE(r4.hamiltonian);
  CHECK(oracle::valid_hamiltonian_cycle(k4(), r4.cycle));

  CHECK_FALSE(is_hamiltonian(petersen()).hamiltonian);
  CHECK_FALSE(is_hamiltonian(bridge10()).hamiltonian);

  for (const CubicGraph* g : {&k33(), &prism(), &twocrack8()}) {
    auto r = is_hamiltonian(*g);
    REQUIRE(r.hamiltonian);
    CHECK(oracle::valid_hamiltonian_cycle(*g, r.cycle));
  }
}

TEST_CASE("hamiltonicity agrees with permutation search on n <= 10") {
  for (int n : {4, 6, 8, 10}) {
    for (const auto& g : enumerate_cubic(n)) {
      auto r = is_hamiltonian(g);
      CHECK(r.hamiltonian == oracle::brute_force_hamiltonian(g));
      if (r.hamiltonian) CHECK(oracle::valid_hamiltonian_cycle(g, r.cycle));
    }
  }
}

TEST_CASE("tait colorability with validated witnesses") {
  auto rk33 = is_tait_colorable(k33());
  REQUIRE(rk33.colorable);
  CHECK(oracle::valid_tait_coloring(k33(), rk33.colors));

  auto rk4 = is_tait_colorable(k4());
  REQUIRE(rk4.colorable);
  CHECK(oracle::valid_tait_coloring(k4(), rk4.colors));

  CHECK_FALSE(is_tait_colorable(petersen()).colorable);
}

TEST_CASE("tait backtracking equals exhaustive search on n <= 10") {
  for (int n : {4, 6, 8, 10}) {
    for (const auto& g : enumerate_cubic(n)) {
      auto r = is_tait_colorable(g);
      CHECK(r.colorable == oracle::brute_force_tait(g));
      if (r.colorable) CHECK(oracle::valid_tait_coloring(g, r.colors));
    }
  }
}

TEST_CASE("classification of the named graphs") {
  Classification pet = classify(petersen());
  CHECK(pet.kind == Kind::Gene);
  CHECK(pet.cyclic_connectivity == 5);
  CHECK_FALSE(pet.smallest_cubic_cracker.has_value());
  CHECK(pet.girth == 5);
  CHECK_FALSE(pet.hamiltonian);
  CHECK(pet.mutant);
  REQUIRE(pet.snark_mutant.has_value());
  CHECK(*pet.snark_mutant);

  Classification br = classify(bridge10());
  CHECK(br.kind == Kind::Descendant);
  CHECK(br.smallest_cubic_cracker == 1);
  CHECK(br.cyclic_connectivity == 1);
  CHECK_FALSE(br.hamiltonian);
  CHECK_FALSE(br.mutant);
  CHECK_FALSE(br.snark_mutant.has_value());

  Classification g4 = classify(k4());
  CHECK(g4.kind == Kind::Gene);
  CHECK_FALSE(g4.cyclic_connectivity.has_value());
  CHECK(g4.hamiltonian);
  CHECK_FALSE(g4.mutant);
}

TEST_CASE("cracker invariants across the n <= 14 corpus") {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    for (const auto& g : enumerate_cubic(n)) {
      auto crackers = enumerate_cubic_crackers(g);
      for (const auto& c : crackers) {
        // Exactly two components.
        CHECK(oracle::component_count(g, c.edges) == 2);
        // Pairwise non-adjacent edges.
        for (size_t i = 0; i < c.edges.size(); ++i)
          for (size_t j = i + 1; j < c.edges.size(); ++j) {
            const Edge &a = c.edges[i], &b = c.edges[j];
            CHECK((a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v));
          }
        // No proper subset disconnects.
        for (size_t skip = 0; skip < c.edges.size(); ++skip) {
          std::vector<Edge> sub;
          for (size_t i = 0; i < c.edges.size(); ++i)
            if (i != skip) sub.push_back(c.edges[i]);
          if (!sub.empty()) CHECK(oracle::component_count(g, sub) == 1);
        }
        // Sides partition the vertex set.
        CHECK(c.side_a.size() + c.side_b.size() == static_cast<size_t>(g.n()));
      }
      // Cyclic connectivity equals the smallest cracker size.
      auto cyc = cyclic_edge_connectivity(g);
      if (!crackers.empty()) {
        CHECK(cyc == crackers.front().size());
      } else if (cyc) {
        CHECK(enumerate_crackers_of_size(g, *cyc).size() > 0);
        for (int k = 1; k < *cyc; ++k)
          CHECK(enumerate_crackers_of_size(g, k).empty());
      }
    }
  }
}

TEST_CASE("general-mode crackers on petersen are the 5-crackers") {
  auto fives = enumerate_crackers_of_size(petersen(), 5);
  CHECK_FALSE(fives.empty());
  // The spokes form one of them.
  bool spokes_found = false;
  for (const auto& c : fives)
    if (c.edges == std::vector<Edge>{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}})
      spokes_found = true;
  CHECK(spokes_found);
  for (int k = 1; k <= 4; ++k)
    CHECK(enumerate_crackers_of_size(petersen(), k).empty());
}

TEST_CASE("the lone n = 10 mutant is petersen") {
  int mutants = 0;
  for (const auto& g : enumerate_cubic(10)) {
    Classification c = classify(g);
    if (c.mutant) {
      ++mutants;
      CHECK(is_isomorphic(g, petersen()));
    }
  }
  CHECK(mutants == 1);
}

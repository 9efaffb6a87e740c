#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubic/canon.hpp"
#include "cubic/corpus.hpp"
#include "oracles.hpp"

using namespace cubic;

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const CubicGraph* g : {&k4(), &k33(), &prism(), &petersen(), &twocrack8(),
                              &bridge10()}) {
    CanonicalCode base = canonical_form(*g);
    for (int t = 0; t < 100; ++t) {
      CubicGraph h = g->relabel(oracle::random_permutation(g->n(), rng));
      CHECK(canonical_form(h) == base);
    }
  }
}

TEST_CASE("petersen outer/inner swap is an automorphism") {
  // Swapping the outer 5-cycle with the inner star preserves the graph.
  std::vector<int> swap_io{5, 6, 7, 8, 9, 0, 1, 2, 3, 4};
  CHECK(canonical_form(petersen().relabel(swap_io)) == canonical_form(petersen()));
}

TEST_CASE("non-isomorphic graphs get distinct codes") {
  CHECK(canonical_form(k33()) != canonical_form(prism()));
  CHECK_FALSE(is_isomorphic(k33(), prism()));
  CHECK_FALSE(is_isomorphic(k4(), k33()));
  CHECK(is_isomorphic(k4(), k4()));
}

TEST_CASE("relabeled twocrack8 stays isomorphic") {
  std::vector<int> reversal{7, 6, 5, 4, 3, 2, 1, 0};
  CHECK(is_isomorphic(twocrack8(), twocrack8().relabel(reversal)));
}

TEST_CASE("is_isomorphic agrees with the factorial oracle on 8-vertex classes") {
  auto classes = enumerate_cubic(8);
  REQUIRE(classes.size() == 5);
  std::mt19937 rng(11);
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      CubicGraph shuffled =
          classes[j].relabel(oracle::random_permutation(8, rng));
      CHECK(is_isomorphic(classes[i], shuffled) ==
            oracle::brute_force_isomorphic(classes[i], shuffled));
    }
}

TEST_CASE("canonical codes separate all small classes") {
  // Distinct classes at each n <= 10 must produce distinct codes.
  for (int n : {4, 6, 8, 10}) {
    auto classes = enumerate_cubic(n);
    std::set<std::string> codes;
    for (const auto& g : classes) codes.insert(canonical_form(g).code);
    CHECK(codes.size() == classes.size());
  }
}

TEST_CASE("canonical code parses back to an isomorphic graph") {
  for (const CubicGraph* g : {&petersen(), &bridge10()}) {
    CanonicalCode code = canonical_form(*g);
    CubicGraph back = parse_graph6(code.code);
    CHECK(is_isomorphic(back, *g));
    CHECK(to_graph6(canonical_relabel(back)) == code.code);
  }
}

TEST_CASE("gene multisets compare as multisets") {
  CanonicalCode a = canonical_form(k4());
  CanonicalCode b = canonical_form(k33());
  CanonicalCode c = canonical_form(petersen());

  GeneMultiset two_k4 = GeneMultiset::from_codes({a, a});
  CHECK(multiset_equal(two_k4, GeneMultiset::from_codes({a, a})));
  CHECK_FALSE(multiset_equal(two_k4, GeneMultiset::from_codes({a, b})));
  CHECK(multiset_equal(GeneMultiset::from_codes({c, a}),
                       GeneMultiset::from_codes({a, c})));
  CHECK(two_k4.total() == 2);
  CHECK(two_k4.entries.size() == 1);
  CHECK(two_k4.entries[0].second == 2);

  GeneMultiset merged = two_k4.merged(GeneMultiset::from_codes({a, b}));
  CHECK(merged.total() == 4);
  CHECK(multiset_equal(merged, GeneMultiset::from_codes({a, a, a, b})));
}

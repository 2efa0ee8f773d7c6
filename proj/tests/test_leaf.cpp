#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sqfree/error.hpp"
#include "sqfree/grafting.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/leaf.hpp"

using namespace sqfree;
using test::C;
using test::S;

namespace {

const SimplicialComplex& delta1() {
  static const auto c = C({"x y1 y2", "x y3 y4", "x y5 y6"});
  return c;
}

const SimplicialComplex& delta2() {
  static const auto c = C({"x1 y1", "x2 y2", "x3 y3", "x4 y4", "x1 x2 x3", "x3 x4"});
  return c;
}

}  // namespace

TEST_CASE("is_leaf") {
  const auto& d2 = delta2();
  const auto w = is_leaf(d2, S(d2, "x3 y3"));
  REQUIRE(w);
  CHECK(std::find(w->joints.begin(), w->joints.end(), S(d2, "x1 x2 x3")) != w->joints.end());
  CHECK(w->joints == test::sets(d2.labels(), {"x1 x2 x3", "x3 x4"}));
  CHECK_FALSE(is_leaf(d2, S(d2, "x1 x2 x3")));
  const auto single = C({"a b"});
  const auto lone = is_leaf(single, S(single, "a b"));
  REQUIRE(lone);
  CHECK(lone->joints.empty());
}

TEST_CASE("is_good_leaf") {
  const auto& d1 = delta1();
  const auto chain = is_good_leaf(d1, S(d1, "x y1 y2"));
  REQUIRE(chain);
  CHECK(chain->ordered_neighbors.size() == 2);
  for (VertexSet n : chain->ordered_neighbors) CHECK((n & S(d1, "x y1 y2")) == S(d1, "x"));
  const auto& d2 = delta2();
  CHECK(is_good_leaf(d2, S(d2, "x2 y2")));
  const auto bad = C({"a b c", "a x", "b y"});
  CHECK_FALSE(is_good_leaf(bad, S(bad, "a b c")));
  const auto nested = C({"a b c", "a b d", "a e"});
  const auto ordered = is_good_leaf(nested, S(nested, "a b c"));
  REQUIRE(ordered);
  CHECK(ordered->ordered_neighbors == std::vector<VertexSet>{S(nested, "a b d"), S(nested, "a e")});
}

TEST_CASE("special leaves") {
  const auto& d1 = delta1();
  CHECK_FALSE(is_special_leaf(d1, S(d1, "x y1 y2")));
  CHECK(special_leaves(d1).empty());
  const auto& d2 = delta2();
  CHECK_FALSE(is_special_leaf(d2, S(d2, "x3 y3")));
  CHECK(is_special_leaf(d2, S(d2, "x1 y1")));
  CHECK(special_leaves(d2) == test::sets(d2.labels(), {"x1 y1", "x2 y2", "x4 y4"}));
  const auto single = C({"a b"});
  CHECK(special_leaves(single) == std::vector<VertexSet>{S(single, "a b")});
  CHECK_THROWS_AS(is_special_leaf(d2, S(d2, "x1 x2 x3")), NotALeaf);
  CHECK(leaves(d2) == test::sets(d2.labels(), {"x1 y1", "x2 y2", "x3 y3", "x4 y4"}));
}

TEST_CASE("forest recognition") {
  CHECK(is_forest(delta1()));
  CHECK(is_forest(delta2()));
  const auto fak = C({"x1 x3 x5", "x1 x3 x6", "x1 x4 x5", "x2 x3 x4", "x2 x3 x6"});
  CHECK_FALSE(is_forest(fak));
  const auto slice = subcomplex(fak, test::sets(fak.labels(), {"x1 x3 x5", "x1 x4 x5", "x2 x3 x4"}));
  CHECK(leaves(slice).empty());
  const auto edge = C({"a b"});
  const auto order = is_forest(edge);
  REQUIRE(order);
  CHECK(order->order == std::vector<VertexSet>{S(edge, "a b")});
  CHECK_FALSE(is_forest(C({"a b", "b c", "a c"})));
  CHECK(is_forest(C({"a b", "c d"})));
}

TEST_CASE("brute oracles on the examples") {
  const auto& d1 = delta1();
  for (VertexSet f : d1.facets()) {
    CHECK(is_good_leaf_brute(d1, f) == is_good_leaf(d1, f).has_value());
    CHECK(is_leaf_brute(d1, f) == is_leaf(d1, f).has_value());
  }
  const auto& d2 = delta2();
  for (VertexSet f : leaves(d2)) CHECK(is_good_leaf_brute(d2, f));
  const auto bad = C({"a b c", "a x", "b y"});
  CHECK_FALSE(is_good_leaf_brute(bad, S(bad, "a b c")));
  std::vector<std::vector<std::string>> many;
  for (int i = 0; i < 21; ++i) many.push_back({"v" + std::to_string(i)});
  CHECK_THROWS_AS(is_forest_brute(build_complex(many)), BudgetExceeded);
}

TEST_CASE("chain criterion matches the definition on small complexes") {
  std::mt19937_64 rng(21);
  std::size_t good = 0, not_good = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = test::random_complex(rng, 8, 5);
    for (VertexSet f : c.facets()) {
      const bool chain = is_good_leaf(c, f).has_value();
      REQUIRE(chain == is_good_leaf_brute(c, f));
      REQUIRE(is_leaf(c, f).has_value() == is_leaf_brute(c, f));
      (chain ? good : not_good) += 1;
    }
  }
  CHECK(good > 100);
  CHECK(not_good > 100);
}

TEST_CASE("greedy forest recognition matches the definition") {
  std::mt19937_64 rng(22);
  std::size_t forests = 0, others = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = test::random_complex(rng, 8, 5);
    const bool greedy = is_forest(c).has_value();
    REQUIRE(greedy == is_forest_brute(c));
    (greedy ? forests : others) += 1;
  }
  CHECK(forests > 100);
  CHECK(others > 100);
}

TEST_CASE("every leaf has a free vertex") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = test::random_complex(rng, 8, 5);
    for (VertexSet l : leaves(c)) CHECK_FALSE(free_vertices(c, l).empty());
  }
}

TEST_CASE("special leaf construction on grafted complexes") {
  const auto& d2 = delta2();
  const auto found = find_special_leaf_grafted(d2, *is_grafted(d2));
  const auto special = special_leaves(d2);
  CHECK(std::find(special.begin(), special.end(), found) != special.end());
  const auto whiskered = C({"a b", "a p", "b q"});
  const auto w = find_special_leaf_grafted(whiskered, *is_grafted(whiskered));
  CHECK((w == S(whiskered, "a p") || w == S(whiskered, "b q")));
  CHECK(is_special_leaf(whiskered, S(whiskered, "a p")));
  CHECK(is_special_leaf(whiskered, S(whiskered, "b q")));
  const auto single = C({"a b"});
  CHECK(find_special_leaf_grafted(single, *is_grafted(single)) == S(single, "a b"));
  CHECK_THROWS_AS(find_special_leaf_grafted(whiskered, *is_grafted(d2)), InvalidArgument);
}

TEST_CASE("special leaves exist on generated forests") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.base_facet_count = 2 + seed % 4;
    p.whisker_mode = seed % 2 ? WhiskerMode::kAllVertices : WhiskerMode::kBlock;
    const auto g = random_grafted_forest(p);
    const auto special = special_leaves(g.complex);
    REQUIRE_FALSE(special.empty());
    const VertexSet found = find_special_leaf_grafted(g.complex, g.certificate);
    CHECK(std::find(special.begin(), special.end(), found) != special.end());
    for (VertexSet s : special) CHECK(is_leaf(g.complex, s));
  }
}

TEST_CASE("special leaf agrees with the base-facet reformulation on grafted complexes") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.base_facet_count = 2 + seed % 4;
    p.whisker_mode = seed % 2 ? WhiskerMode::kBlock : WhiskerMode::kAllVertices;
    const auto g = random_grafted_forest(p);
    const auto& base = g.certificate.base_facets;
    for (VertexSet f : g.certificate.grafted_leaves) {
      bool reformulated = true;
      for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
          if (base[i].intersects(base[j]) && (base[i] & base[j]).subset_of(f)) reformulated = false;
        }
      }
      CHECK(is_special_leaf(g.complex, f) == reformulated);
    }
  }
}

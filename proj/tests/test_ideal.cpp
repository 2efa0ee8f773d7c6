#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sqfree/error.hpp"
#include "sqfree/grafting.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/json_io.hpp"

using namespace sqfree;
using test::C;
using test::S;

namespace {

const SimplicialComplex& g1() {
  static const auto c = C({"x1 x2", "x2 x3", "x1 x3", "x1 y1", "x2 y2", "x3 y3"});
  return c;
}

const SimplicialComplex& g2() {
  static const auto c = C({"x1 x2", "x2 x3", "x1 y1", "x2 y2", "x3 y3"});
  return c;
}

const SimplicialComplex& delta2() {
  static const auto c = C({"x1 y1", "x2 y2", "x3 y3", "x4 y4", "x1 x2 x3", "x3 x4"});
  return c;
}

std::vector<VertexSet> gens(const MonomialIdeal& i) { return {i.generators().begin(), i.generators().end()}; }

/// I^[k] by expanding every k-fold product of generators with repetition,
/// dropping the ones that are not square-free, then minimalising.
MonomialIdeal power_by_expansion(const MonomialIdeal& ideal, std::size_t k) {
  const auto g = gens(ideal);
  std::vector<VertexSet> products;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    VertexSet support;
    std::size_t degree = 0;
    for (std::size_t i : pick) {
      support |= g[i];
      degree += g[i].size();
    }
    if (degree == support.size()) products.push_back(support);
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == g.size()) pick[pos++] = 0;
    if (pos == k) break;
  }
  return MonomialIdeal(ideal.ambient(), products);
}

}  // namespace

TEST_CASE("ideal representation") {
  const auto i = test::ideal("a b c", {"a b", "a", "b c"});
  CHECK(gens(i) == test::sets(i.ambient(), {"a", "b c"}));
  CHECK(i.contains(S(i.ambient(), "a c")));
  CHECK_FALSE(i.contains(S(i.ambient(), "b")));
  CHECK(i.support() == i.ambient().all());
  CHECK(MonomialIdeal::unit(i.ambient()).is_unit());
  CHECK(MonomialIdeal::zero(i.ambient()).is_zero());
  CHECK(MonomialIdeal(i.ambient(), {VertexSet{}, S(i.ambient(), "a")}).is_unit());
  CHECK_THROWS_AS(MonomialIdeal(i.ambient(), {VertexSet{5}}), InvalidArgument);
  const auto narrow = test::ideal("a b c d", {"a b"}).over_support();
  CHECK(narrow.variable_count() == 2);
  CHECK(narrow.format() == "<ab>");
}

TEST_CASE("facet ideals") {
  const auto i = facet_ideal(g2());
  CHECK(gens(i) == test::sets(i.ambient(), {"x1 x2", "x2 x3", "x1 y1", "x2 y2", "x3 y3"}));
  const auto d1 = C({"x y1 y2", "x y3 y4", "x y5 y6"});
  CHECK(gens(facet_ideal(d1)) == test::sets(d1.labels(), {"x y1 y2", "x y3 y4", "x y5 y6"}));
  const auto a = C({"a"});
  CHECK(gens(facet_ideal(a)) == std::vector<VertexSet>{S(a, "a")});
}

TEST_CASE("square-free powers of the figure examples") {
  const auto i2 = squarefree_power(facet_ideal(g2()), 2);
  CHECK(gens(i2) == test::sets(i2.ambient(), {"x1 y1 x2 y2", "x1 y1 x3 y3", "x1 y1 x2 x3", "x1 x2 x3 y3", "x2 y2 x3 y3"}));
  const auto j2 = squarefree_power(facet_ideal(g1()), 2);
  CHECK(gens(j2) == test::sets(j2.ambient(), {"x1 y1 x3 y3", "x1 y1 x2 x3", "x1 y1 x2 y2", "x3 y3 x2 y2",
                                              "x3 y3 x1 x2", "x2 y2 x1 x3"}));
  const auto i = facet_ideal(delta2());
  CHECK(squarefree_power(i, 1) == i);
  CHECK(squarefree_power(i, 4).generators().size() == 1);
  CHECK(squarefree_power(i, 5).is_zero());
  CHECK_THROWS_AS(squarefree_power(i, 0), InvalidArgument);
}

TEST_CASE("square-free powers agree with product expansion") {
  std::vector<MonomialIdeal> cases{facet_ideal(g1()), facet_ideal(g2()), facet_ideal(delta2()),
                                   facet_ideal(C({"x y1 y2", "x y3 y4", "x y5 y6"})),
                                   facet_ideal(load_fixture("fakhari7").complex)};
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) cases.push_back(facet_ideal(test::random_complex(rng, 9, 7, 3)));
  for (const auto& ideal : cases) {
    const std::size_t nu = matching_number(std::vector<VertexSet>(ideal.generators().begin(), ideal.generators().end()));
    for (std::size_t k = 1; k <= std::min<std::size_t>(nu + 1, 4); ++k) {
      CHECK(squarefree_power(ideal, k) == power_by_expansion(ideal, k));
      CHECK(squarefree_power(ideal, k).is_zero() == (k > nu));
    }
  }
}

TEST_CASE("matchings and generators before minimalisation") {
  const auto i = facet_ideal(g2());
  std::set<std::uint64_t> unions;
  for (const auto& m : matchings(g2(), 2)) {
    VertexSet u;
    for (VertexSet f : m) u |= f;
    unions.insert(u.bits());
  }
  CHECK(unions.size() == matchings(g2(), 2).size());
  CHECK(unions.size() == squarefree_power(i, 2).generators().size());
}

TEST_CASE("colon ideals") {
  const auto p = squarefree_power(facet_ideal(g2()), 2);
  const auto c = colon(p, S(p.ambient(), "x1 y1"));
  CHECK(gens(c) == test::sets(p.ambient(), {"x2 x3", "x2 y2", "x3 y3"}));
  CHECK(colon(p, VertexSet{}) == p);
  const auto ab = test::ideal("a b", {"a b"});
  CHECK(colon(ab, S(ab.ambient(), "a b")).is_unit());
  CHECK(gens(colon(ab, S(ab.ambient(), "a"))) == std::vector<VertexSet>{S(ab.ambient(), "b")});
  const auto zero = MonomialIdeal::zero(ab.ambient());
  CHECK(colon(zero, S(ab.ambient(), "a")).is_zero());
}

TEST_CASE("colon composes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> bits(0, 511);
  for (int t = 0; t < 200; ++t) {
    const auto i = facet_ideal(test::random_complex(rng, 9, 6, 3));
    const VertexSet a(bits(rng) & i.ambient().all().bits());
    const VertexSet b(bits(rng) & i.ambient().all().bits());
    CHECK(colon(colon(i, a), b) == colon(i, a | b));
  }
}

TEST_CASE("adding a principal generator") {
  const auto p = squarefree_power(facet_ideal(g2()), 2);
  const auto sum = add_principal(p, S(p.ambient(), "x1 y1"));
  CHECK(gens(sum) == test::sets(p.ambient(), {"x1 y1", "x1 x2 x3 y3", "x2 y2 x3 y3"}));
  CHECK(add_principal(p, VertexSet{}).is_unit());
  const auto zero = MonomialIdeal::zero(p.ambient());
  CHECK(gens(add_principal(zero, S(p.ambient(), "x1"))) == std::vector<VertexSet>{S(p.ambient(), "x1")});
}

TEST_CASE("ideal equality") {
  const auto i = facet_ideal(g2());
  CHECK(ideal_equal(i, i));
  const auto a = test::ideal("a b", {"a"});
  const auto ab = test::ideal("a b", {"a b"});
  CHECK_FALSE(ideal_equal(a, ab));
  CHECK_THROWS_AS(ideal_equal(a, test::ideal("a c", {"a"})), InvalidArgument);
}

TEST_CASE("minimum degree profile") {
  const auto prof = min_degree_profile(facet_ideal(g2())).min_degree;
  CHECK(prof == std::map<std::size_t, std::size_t>{{1, 2}, {2, 4}, {3, 6}});
  const auto edges = facet_ideal(C({"a b", "c d", "e f", "b c"}));
  for (const auto& [k, d] : min_degree_profile(edges).min_degree) CHECK(d == 2 * k);
  CHECK(min_degree_profile(load_fixture("fakhari6").ideal).min_degree.at(1) == 3);
}

TEST_CASE("min degree increases by at least d_1 per step") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto prof = min_degree_profile(facet_ideal(test::random_complex(rng, 10, 7, 3))).min_degree;
    for (const auto& [k, d] : prof) {
      if (prof.count(k + 1)) CHECK(prof.at(k + 1) > d);
    }
  }
}

TEST_CASE("colon by a leaf") {
  const auto& c = g2();
  const auto check = verify_colon_lemma(c, S(c, "x1 y1"), 2);
  CHECK(check.holds());
  CHECK(gens(check.colon_side) == test::sets(c.labels(), {"x2 x3", "x2 y2", "x3 y3"}));
  CHECK(check.power_side == check.colon_side);
  const auto first = verify_colon_lemma(c, S(c, "x2 y2"), 1);
  CHECK(first.holds());
  CHECK(first.colon_side.is_unit());
  CHECK(verify_colon_lemma(delta2(), S(delta2(), "x4 y4"), 2).holds());
  CHECK_THROWS_AS(verify_colon_lemma(g1(), S(g1(), "x1 y1"), 1), InvalidArgument);
  CHECK_THROWS_AS(verify_colon_lemma(c, S(c, "x1 x2"), 1), InvalidArgument);
  CHECK_THROWS_AS(verify_colon_lemma(c, S(c, "x1 y1"), 4), InvalidArgument);
}

TEST_CASE("ideal JSON") {
  const auto i = squarefree_power(facet_ideal(g2()), 2);
  const Json doc = ideal_to_json(i);
  CHECK(doc["generators"].size() == 5);
  CHECK(ideal_from_json(doc) == i);
  const auto inferred = ideal_from_json(Json::parse(R"({"generators": [["b","a"],["c"]]})"));
  CHECK(inferred.variable_count() == 3);
  CHECK(inferred.format() == "<c, ab>");
  CHECK(ideal_from_json(Json::parse(R"({"variables": ["a"], "generators": [[]]})")).is_unit());
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"variables": ["a"], "generators": [["b"]]})")), InvalidArgument);
}

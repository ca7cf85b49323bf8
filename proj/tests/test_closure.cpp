#include <catch_amalgamated.hpp>

#include <relcomm/catalog.hpp>
#include <relcomm/closure.hpp>

#include "oracles.hpp"

using namespace relcomm;
using Tuples = std::vector<std::vector<Element>>;

namespace {

  std::set<oracle::Tuple> as_set(Tuples const& t) {
    return {t.begin(), t.end()};
  }

  Tuples even_parity_quads() {
    Tuples out;
    for (Element x = 0; x < 2; ++x) {
      for (Element y = 0; y < 2; ++y) {
        for (Element z = 0; z < 2; ++z) {
          out.push_back({x, y, z, static_cast<Element>(x ^ y ^ z)});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("tuple codes", "[closure]") {
  TupleSet s(3, 2);
  CHECK(s.encode(std::vector<Element>{2, 1}) == 7);
  CHECK(s.decode(7) == std::vector<Element>{2, 1});
  CHECK(s.insert(std::vector<Element>{2, 1}));
  CHECK_FALSE(s.insert(std::vector<Element>{2, 1}));
  CHECK(s.contains(std::vector<Element>{2, 1}));
  CHECK_FALSE(s.contains(std::vector<Element>{1, 2}));
  CHECK(s.size() == 1);

  QuadSet q(2);
  q.insert(1, 0, 1, 1);
  CHECK(q.contains(1, 0, 1, 1));
  CHECK(q.quad(q.codes()[0]) == std::array<Element, 4>{1, 0, 1, 1});
}

TEST_CASE("subuniverse_closure examples", "[closure]") {
  FiniteAlgebra const& set3 = find_in_catalog("Set3")->algebra;
  Tuples const         g{{0, 1}, {2, 2}, {1, 0}};
  Tuples               sorted = g;
  std::sort(sorted.begin(), sorted.end());
  CHECK(subuniverse_closure(set3, 2, g) == sorted);

  FiniteAlgebra const& z2 = find_in_catalog("Z2")->algebra;
  Tuples const gens{{0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}};
  CHECK(subuniverse_closure(z2, 4, gens) == even_parity_quads());

  for (auto const& a : catalog()) {
    Tuples all;
    for (Element x = 0; x < a.algebra.size(); ++x) {
      all.push_back({x});
    }
    CHECK(subuniverse_closure(a.algebra, 1, all) == all);
  }
}

TEST_CASE("subuniverse_closure edge cases", "[closure]") {
  FiniteAlgebra const& z3 = find_in_catalog("Z3")->algebra;
  CHECK(subuniverse_closure(z3, 2, {}).empty());

  // constants are always there
  FiniteAlgebra const pointed(3, {Operation{"c", 0, {1}}, Operation{"s", 1, {1, 2, 0}}});
  CHECK(subuniverse_closure(pointed, 2, {}) == Tuples{{0, 0}, {1, 1}, {2, 2}});

  CHECK_THROWS_AS(subuniverse_closure(z3, 2, {{0, 1, 2}}), Error);
  CHECK_THROWS_AS(subuniverse_closure(z3, 2, {{0, 3}}), Error);
  CHECK_THROWS_AS(subuniverse_closure(z3, 0, {}), Error);
  std::vector<Code> const bad{9};
  CHECK_THROWS_AS(close_codes(z3, 2, bad), Error);
}

TEST_CASE("closure agrees with the naive fixpoint", "[closure]") {
  Rng rng(1);
  std::vector<FiniteAlgebra> algebras;
  for (auto const& a : catalog()) {
    algebras.push_back(a.algebra);
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    algebras.push_back(random_algebra(Signature::groupoid(3), s));
    algebras.push_back(random_algebra(Signature{{{"m", 3}}, 2}, s));
    algebras.push_back(random_algebra(Signature{{{"c", 0}, {"f", 1}, {"g", 2}}, 3}, s));
  }
  for (auto const& alg : algebras) {
    std::size_t const n = alg.size();
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int trial = 0; trial < 4; ++trial) {
        Tuples gens;
        for (std::size_t i = 0, m = rng.below(4); i < m; ++i) {
          std::vector<Element> t;
          for (std::size_t c = 0; c < k; ++c) {
            t.push_back(static_cast<Element>(rng.below(n)));
          }
          gens.push_back(t);
        }
        Tuples const got = subuniverse_closure(alg, k, gens);
        CHECK(as_set(got) == oracle::naive_closure(alg, k, as_set(gens)));
        CHECK(std::is_sorted(got.begin(), got.end()));
        // closing again adds nothing
        CHECK(subuniverse_closure(alg, k, got) == got);
      }
    }
  }
}

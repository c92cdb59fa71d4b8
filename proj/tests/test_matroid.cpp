#include <doctest.h>

#include <algorithm>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tropcrit/errors.hpp"
#include "tropcrit/matroid.hpp"

using namespace tropcrit;
using namespace tropcrit::testing;

namespace {

bool rank_is_submodular(const Matroid& m) {
  std::uint64_t total = std::uint64_t{1} << m.ground_size();
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::uint64_t t = 0; t < total; ++t) {
      Subset a = Subset::from_bits(s), b = Subset::from_bits(t);
      if (m.rank_of(a | b) + m.rank_of(a & b) > m.rank_of(a) + m.rank_of(b)) return false;
      if (a.subset_of(b) && m.rank_of(a) > m.rank_of(b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("from_bases builds the small uniform matroids") {
  Matroid u12 = Matroid::from_bases(1, {Subset::of({0}), Subset::of({1})});
  CHECK(u12 == Matroid::uniform(1, 2));

  std::vector<Subset> two_subsets;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) two_subsets.push_back(Subset::of({a, b}));
  CHECK(Matroid::from_bases(3, two_subsets) == Matroid::uniform(2, 4));
}

TEST_CASE("from_bases rejects bad input") {
  CHECK_THROWS_AS(Matroid::from_bases(1, {}), Error);
  CHECK_THROWS_WITH_AS(Matroid::from_bases(1, {Subset::of({0}), Subset::of({0, 1})}),
                       doctest::Contains("UnequalCardinality"), Error);
  // {0,1} and {2,3} admit no exchange.
  CHECK_THROWS_WITH_AS(Matroid::from_bases(3, {Subset::of({0, 1}), Subset::of({2, 3})}),
                       doctest::Contains("ExchangeAxiomViolated"), Error);
  CHECK_THROWS_AS(Matroid::from_bases(2, {Subset::of({5})}), Error);
}

TEST_CASE("uniform matroids") {
  CHECK(Matroid::uniform(2, 4).bases().size() == 6);
  Matroid u03 = Matroid::uniform(0, 3);
  CHECK(u03.bases().size() == 1);
  for (int e = 0; e < 3; ++e) CHECK(u03.is_loop(e));
  Matroid u33 = Matroid::uniform(3, 3);
  CHECK(u33.bases().size() == 1);
  for (int e = 0; e < 3; ++e) CHECK(u33.is_coloop(e));
  CHECK_THROWS_AS(Matroid::uniform(4, 3), Error);
}

TEST_CASE("graphic matroids") {
  Matroid tri = make_triangle();
  CHECK(tri.bases().size() == 3);  // any two edges of a triangle span
  CHECK(tri.rank() == 2);
  CHECK(make_k4().bases().size() == 16);  // spanning trees of K4
  Matroid with_loop = Matroid::graphic(2, {{0, 1}, {1, 1}});
  CHECK(with_loop.is_loop(1));
  CHECK_THROWS_AS(Matroid::graphic(2, {{0, 3}}), Error);
}

TEST_CASE("rank and closure") {
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(u24.rank_of(Subset::of({0})) == 1);
  CHECK(u24.rank_of(Subset::of({0, 1, 2})) == 2);
  CHECK(u24.closure(Subset::of({2})) == Subset::of({2}));
  CHECK(u24.closure(u24.ground()) == u24.ground());

  Matroid tri = make_triangle();
  CHECK(tri.rank_of(tri.ground()) == 2);
  CHECK(tri.closure(Subset::of({0, 1})) == tri.ground());
}

TEST_CASE("flats and circuits of U_{2,4} and the triangle") {
  Matroid u24 = Matroid::uniform(2, 4);
  std::vector<Subset> circuits = u24.circuits();
  CHECK(circuits.size() == 4);
  for (Subset c : circuits) CHECK(c.count() == 3);
  std::vector<Subset> flats = u24.flats();
  CHECK(flats.size() == 6);  // empty, four singletons, E
  CHECK(flats.front() == Subset());
  CHECK(flats.back() == u24.ground());

  CHECK(make_triangle().circuits() == std::vector<Subset>{Subset::of({0, 1, 2})});
}

TEST_CASE("duality") {
  CHECK(Matroid::uniform(2, 4).dual() == Matroid::uniform(2, 4));
  CHECK(Matroid::uniform(1, 2).dual() == Matroid::uniform(1, 2));
  CHECK(make_triangle().dual() == Matroid::uniform(1, 3));
  for (const CorpusEntry& entry : corpus()) CHECK(entry.matroid.dual().dual() == entry.matroid);
}

TEST_CASE("circuits of the dual are the cocircuits") {
  for (const CorpusEntry& entry : corpus()) {
    CHECK(entry.matroid.dual().circuits() == cocircuits_direct(entry.matroid));
  }
}

TEST_CASE("contraction and deletion") {
  Matroid u24 = Matroid::uniform(2, 4);
  Minor contracted = u24.contract(0);
  CHECK(contracted.matroid == Matroid::uniform(1, 3));
  CHECK(contracted.new_to_old == std::vector<int>{1, 2, 3});
  CHECK(contracted.old_to_new == std::vector<int>{-1, 0, 1, 2});
  CHECK(u24.delete_element(0).matroid == Matroid::uniform(2, 3));
  // Contracting one edge of a triangle leaves two parallel edges.
  CHECK(make_triangle().contract(0).matroid == Matroid::uniform(1, 2));
  CHECK_THROWS_AS(u24.contract(7), Error);
}

TEST_CASE("contracting a loop deletes it") {
  Matroid with_loop = Matroid::graphic(2, {{0, 1}, {1, 1}});
  CHECK(with_loop.contract(1).matroid == with_loop.delete_element(1).matroid);
}

TEST_CASE("deletion/contraction complementarity with the dual") {
  for (const CorpusEntry& entry : corpus()) {
    const Matroid& m = entry.matroid;
    for (int e = 0; e <= m.n(); ++e) {
      if (m.is_loop(e)) continue;
      CHECK(m.contract(e).matroid.dual() == m.dual().delete_element(e).matroid);
    }
  }
}

TEST_CASE("loops and coloops") {
  CHECK(Matroid::uniform(0, 3).is_loop(0));
  CHECK(Matroid::uniform(3, 3).is_coloop(0));
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK_FALSE(u24.is_loop(0));
  CHECK_FALSE(u24.is_coloop(0));
}

TEST_CASE("flat/coflat unions never have size |E|-1") {
  for (const CorpusEntry& entry : corpus()) {
    if (entry.matroid.ground_size() > 8) continue;
    Matroid dual = entry.matroid.dual();
    for (Subset f : entry.matroid.flats())
      for (Subset g : dual.flats()) CHECK((f | g).count() != entry.matroid.ground_size() - 1);
  }
}

TEST_CASE("rank is monotone and submodular (exhaustive, small ground)") {
  for (const CorpusEntry& entry : corpus()) {
    if (entry.matroid.ground_size() > 6) continue;
    CHECK(rank_is_submodular(entry.matroid));
  }
}

TEST_CASE("closure is idempotent, extensive, monotone") {
  for (const CorpusEntry& entry : corpus()) {
    const Matroid& m = entry.matroid;
    if (m.ground_size() > 6) continue;
    std::uint64_t total = std::uint64_t{1} << m.ground_size();
    for (std::uint64_t s = 0; s < total; ++s) {
      Subset a = Subset::from_bits(s);
      Subset cl = m.closure(a);
      CHECK(a.subset_of(cl));
      CHECK(m.closure(cl) == cl);
      // monotone against supersets obtained by adding one element
      for (int e : (m.ground() - a).elements())
        CHECK(cl.subset_of(m.closure(a.with(e))));
    }
  }
}

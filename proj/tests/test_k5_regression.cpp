// Regression data for the labeled K5 shipped as fixtures/k5.json: a rank-4
// graphic matroid on ten edges whose beta-nbc structure is pinned exactly.
#include <doctest.h>

#include "support/corpus.hpp"
#include "tropcrit/critical.hpp"
#include "tropcrit/invariants.hpp"

using namespace tropcrit;
using namespace tropcrit::testing;

TEST_CASE("K5 fixture: beta and the six beta-nbc bases") {
  Matroid m = make_k5();
  CHECK(m.rank() == 4);
  CHECK(m.bases().size() == 125);  // spanning trees of K5
  CHECK(beta(m) == 6);
  CHECK(bnbc_bases(m) ==
        std::vector<Subset>{Subset::of({0, 2, 5, 6}), Subset::of({0, 2, 5, 7}),
                            Subset::of({0, 2, 5, 9}), Subset::of({0, 3, 6, 8}),
                            Subset::of({0, 3, 7, 8}), Subset::of({0, 3, 7, 9})});
}

TEST_CASE("K5 fixture: the flag pair of basis {0,2,5,7}") {
  Matroid m = make_k5();
  CHECK(flag_of_basis(m, Subset::of({0, 2, 5, 7})).chain ==
        std::vector<Subset>{Subset(), Subset::of({7}), Subset::of({5, 7}),
                            Subset::of({2, 4, 5, 7}), m.ground()});

  AffineMatroid a(m);
  std::vector<CriticalPoint> points = critical_points_fast(a, canonical_rapid_w(9));
  REQUIRE(points.size() == 6);
  const CriticalPoint& p = points[1];  // lexicographic: 0256 < 0257 < ...
  REQUIRE(p.basis == Subset::of({0, 2, 5, 7}));
  CHECK(p.flag_n.chain ==
        std::vector<Subset>{Subset(), Subset::of({9}), Subset::of({8, 9}), Subset::of({6, 8, 9}),
                            Subset::of({4, 6, 7, 8, 9}), Subset::of({3, 4, 6, 7, 8, 9}),
                            Subset::full(10).without(0)});
  CHECK(p.pi.to_string() == "013689|24|5|7");
  CHECK(p.pi_perp.to_string() == "125|3|47|6|8|9");
}

TEST_CASE("K5 fixture: the {0,2,5,7} point for w = (1,10,...,10^8)") {
  AffineMatroid a(make_k5());
  std::vector<CriticalPoint> points = critical_points_fast(a, canonical_rapid_w(9));
  REQUIRE(points.size() == 6);
  const CriticalPoint& p = points[1];
  CHECK(p.x == RationalVector::from_ints(1, {0, 9, 0, 9, 9999, 0, 999009, 0, 0}));
  CHECK(p.y == RationalVector::from_ints(
                   1, {1, 1, 100, 991, 1, 100000, 991, 10000000, 100000000}));
  CHECK(p.x.at(7) == 999009);  // path 7,4,2,1: 10^6 - 10^3 + 10 - 1
}

TEST_CASE("K5 fixture: the {0,2,5,6} point carries the reference-pair partitions") {
  AffineMatroid a(make_k5());
  std::vector<CriticalPoint> points = critical_points_fast(a, canonical_rapid_w(9));
  const CriticalPoint& p = points[0];
  REQUIRE(p.basis == Subset::of({0, 2, 5, 6}));
  CHECK(p.pi.to_string() == "013478|2|59|6");
  CHECK(p.pi_perp.to_string() == "125|3|46|7|8|9");
}

TEST_CASE("K5 fixture: oracle agrees with the fast algorithm") {
  AffineMatroid a(make_k5());
  RationalVector w = canonical_rapid_w(9);
  std::vector<CriticalPoint> fast = critical_points_fast(a, w);
  OracleResult oracle = critical_points_oracle(a, w);
  REQUIRE_FALSE(oracle.degenerate);
  REQUIRE(oracle.points.size() == fast.size());
  for (size_t i = 0; i < fast.size(); ++i) {
    CHECK(same_point(oracle.points[i], fast[i]));
    CHECK(oracle.points[i].basis == fast[i].basis);
  }
}

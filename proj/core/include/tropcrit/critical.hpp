#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcrit/bergman.hpp"
#include "tropcrit/invariants.hpp"
#include "tropcrit/partitions.hpp"
#include "tropcrit/rational.hpp"

namespace tropcrit {

// One point of the intersection of the affine Bergman fan of (M,0) with the
// inverted Bergman fan of N, shifted by w. Flags of N are kept in the
// original labels {1..n}.
struct CriticalPoint {
  Subset basis;         // contains 0
  FlagOfFlats flag_m;   // on [0,n]
  FlagOfFlats flag_n;   // on [1,n]
  SetPartition pi;      // strata of flag_m
  SetPartition pi_perp; // strata of flag_n
  RationalVector x;     // on [1,n]; x_0 = 0 implicitly
  RationalVector y;     // on [1,n]
  RationalVector w;     // on [1,n]
  std::vector<SignedPath> paths_x;  // per pi block
  std::vector<SignedPath> paths_y;  // per pi_perp block
};

bool same_point(const CriticalPoint& a, const CriticalPoint& b);

// One critical point per beta-nbc basis, assembled from the flag pair
// (F_M(B), F_N(B-complement)) and the intersection-tree solution. Requires a
// rapidly increasing w. Every CriticalPoint invariant is asserted; a
// violation throws InternalAssertionFailed.
std::vector<CriticalPoint> critical_points_fast(const AffineMatroid& a, const RationalVector& w);

struct OracleResult {
  std::vector<CriticalPoint> points;
  bool degenerate = false;
  std::string degenerate_reason;
};

// Brute-force enumeration over all pairs of complete flags of M and N: solve
// every arboreal pair and keep the solutions lying in both closed cones.
// Boundary or coincidence events make w degenerate.
OracleResult critical_points_oracle(const AffineMatroid& a, const RationalVector& w,
                                    int max_ground = kDefaultFlagEnumerationCap);

// Samples integer w uniformly from [1,10^6]^n (seeded, reproducible across
// platforms), resamples on a degenerate draw up to `trials` times, and
// returns the first non-degenerate oracle count.
long long degree(const AffineMatroid& a, int trials, std::uint64_t rng_seed,
                 int max_ground = kDefaultFlagEnumerationCap);

struct VerificationReport {
  long long beta_value = -1;
  std::optional<long long> fast_count;
  std::optional<long long> oracle_count_rapid;
  std::vector<long long> oracle_counts_random;
  std::vector<CriticalPoint> fast_points;
  std::vector<CriticalPoint> oracle_points_rapid;
  bool fast_matches_beta = false;
  bool oracle_matches_beta = false;
  bool point_sets_equal = false;
  bool all_agree = false;
  int resamples = 0;
  std::uint64_t seed = 0;
  int samples_requested = 0;
  std::optional<std::string> error;
};

// beta(M) vs the fast count for w = (1,10,100,...) vs oracle counts for
// seeded random generic w; for the rapidly increasing w the fast and oracle
// point sets must coincide. Errors land in the report instead of propagating.
VerificationReport verify_theorem(const AffineMatroid& a, int num_random_w,
                                  std::uint64_t rng_seed,
                                  int max_ground = kDefaultFlagEnumerationCap);

// Canonicalizes (m, e) first; a loop/coloop special element lands in the
// report instead of propagating.
VerificationReport verify_theorem(const Matroid& m, int e, int num_random_w,
                                  std::uint64_t rng_seed,
                                  int max_ground = kDefaultFlagEnumerationCap);

// (10^0, ..., 10^(n-1)), the canonical rapidly increasing vector.
RationalVector canonical_rapid_w(int n);

}  // namespace tropcrit

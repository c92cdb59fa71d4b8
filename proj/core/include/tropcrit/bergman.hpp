#pragma once

#include <utility>
#include <vector>

#include "tropcrit/invariants.hpp"
#include "tropcrit/matroid.hpp"
#include "tropcrit/rational.hpp"

namespace tropcrit {

// Hard default for the flag-enumeration paths; overridable per call (the CLI
// wires TROPCRIT_MAX_GROUND through here).
inline constexpr int kDefaultFlagEnumerationCap = 10;

// A matroid with a distinguished element, canonically 0, together with
// N = (M/0)-dual. N is kept on the relabeled ground {0..n-1}; original labels
// {1..n} map to it by subtracting 1.
class AffineMatroid {
 public:
  // Requires 0 to be neither a loop nor a coloop.
  explicit AffineMatroid(Matroid m);

  // Relabels e to 0, keeping the relative order of the other elements, then
  // constructs the affine matroid. Returns the old-to-new map alongside.
  static std::pair<AffineMatroid, std::vector<int>> canonicalize(const Matroid& m, int e);

  const Matroid& matroid() const { return m_; }
  const Matroid& contraction_dual() const { return n_; }
  // Number of non-special elements; w, x, y live on [1,n].
  int n() const { return m_.n(); }

 private:
  Matroid m_;
  Matroid n_;
};

// Circuit criterion: the minimum of x over every circuit is attained at
// least twice. x is indexed 0..n.
bool in_bergman_fan(const Matroid& m, const RationalVector& x);

// Extends x on [1,n] by x_0 = 0.
bool in_affine_bergman(const AffineMatroid& a, const RationalVector& x);

// x lies in cone(e_{F_1},...,e_{F_r}) + R*1, i.e. x is constant on each
// stratum and the stratum values are weakly decreasing along the flag.
bool in_flag_cone(const FlagOfFlats& flag, const RationalVector& x);

// Strictly decreasing stratum values: the relative interior of the cone in
// its own span. Used for the critical module's degeneracy detection.
bool strictly_inside_flag_cone(const FlagOfFlats& flag, const RationalVector& x);

// All complete flags of flats, by recursive cover search from the empty set.
// Empty when the matroid has loops. Deterministic order.
std::vector<FlagOfFlats> enumerate_complete_flags(const Matroid& m,
                                                  int max_ground = kDefaultFlagEnumerationCap);

// Union-of-flag-cones membership; must agree with in_bergman_fan.
bool bergman_membership_via_flags(const Matroid& m, const RationalVector& x,
                                  int max_ground = kDefaultFlagEnumerationCap);

}  // namespace tropcrit

#include "tropcrit/bergman.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tropcrit/errors.hpp"

namespace tropcrit {

namespace {

Matroid derive_contraction_dual(const Matroid& m) {
  if (m.ground_size() < 2 || m.is_loop(0) || m.is_coloop(0))
    throw Error(ErrorCode::LoopOrColoopSpecialElement,
                "the special element 0 must be neither a loop nor a coloop");
  return m.contract(0).matroid.dual();
}

}  // namespace

AffineMatroid::AffineMatroid(Matroid m)
    : m_(std::move(m)), n_(derive_contraction_dual(m_)) {}

std::pair<AffineMatroid, std::vector<int>> AffineMatroid::canonicalize(const Matroid& m, int e) {
  if (e < 0 || e > m.n())
    throw Error(ErrorCode::InvalidElement, "special element " + std::to_string(e));
  std::vector<int> old_to_new(static_cast<size_t>(m.n()) + 1);
  for (int k = 0; k <= m.n(); ++k)
    old_to_new[static_cast<size_t>(k)] = k == e ? 0 : (k < e ? k + 1 : k);
  return {AffineMatroid(m.relabeled(old_to_new)), std::move(old_to_new)};
}

bool in_bergman_fan(const Matroid& m, const RationalVector& x) {
  if (x.first_index() != 0 || x.size() != m.ground_size())
    throw Error(ErrorCode::GroundMismatch, "x must be indexed by the ground set");
  for (Subset c : m.circuits()) {
    const Rational* min = nullptr;
    int hits = 0;
    for (int e : c.elements()) {
      const Rational& v = x.at(e);
      if (!min || v < *min) {
        min = &v;
        hits = 1;
      } else if (v == *min) {
        ++hits;
      }
    }
    if (hits < 2) return false;
  }
  return true;
}

bool in_affine_bergman(const AffineMatroid& a, const RationalVector& x) {
  if (x.first_index() != 1 || x.size() != a.n())
    throw Error(ErrorCode::GroundMismatch, "x must be indexed 1..n");
  return in_bergman_fan(a.matroid(), with_zero_at_origin(x));
}

namespace {

// Stratum values along the flag, or nullopt if x is not constant on some
// stratum.
std::optional<std::vector<Rational>> stratum_values(const FlagOfFlats& flag,
                                                    const RationalVector& x) {
  std::vector<Rational> vals;
  for (Subset stratum : flag.strata()) {
    auto elems = stratum.elements();
    const Rational& v = x.at(elems.front());
    for (int e : elems)
      if (x.at(e) != v) return std::nullopt;
    vals.push_back(v);
  }
  return vals;
}

}  // namespace

bool in_flag_cone(const FlagOfFlats& flag, const RationalVector& x) {
  auto vals = stratum_values(flag, x);
  if (!vals) return false;
  for (size_t i = 1; i < vals->size(); ++i)
    if ((*vals)[i - 1] < (*vals)[i]) return false;
  return true;
}

bool strictly_inside_flag_cone(const FlagOfFlats& flag, const RationalVector& x) {
  auto vals = stratum_values(flag, x);
  if (!vals) return false;
  for (size_t i = 1; i < vals->size(); ++i)
    if ((*vals)[i - 1] <= (*vals)[i]) return false;
  return true;
}

std::vector<FlagOfFlats> enumerate_complete_flags(const Matroid& m, int max_ground) {
  if (m.ground_size() > max_ground)
    throw Error(ErrorCode::FlagEnumerationTooLarge,
                "flag enumeration is capped at " + std::to_string(max_ground) + " elements");
  std::vector<FlagOfFlats> out;
  if (m.closure(Subset()) != Subset()) return out;  // loops: no complete flags from the empty set
  std::map<Subset, std::vector<Subset>> covers;
  auto covers_of = [&](Subset f) -> const std::vector<Subset>& {
    auto it = covers.find(f);
    if (it != covers.end()) return it->second;
    std::vector<Subset> up;
    for (int e : (m.ground() - f).elements()) {
      Subset g = m.closure(f.with(e));
      if (std::find(up.begin(), up.end(), g) == up.end()) up.push_back(g);
    }
    std::sort(up.begin(), up.end());
    return covers.emplace(f, std::move(up)).first->second;
  };
  std::vector<Subset> chain{Subset()};
  auto rec = [&](auto&& self) -> void {
    if (chain.back() == m.ground()) {
      out.push_back(FlagOfFlats{chain});
      return;
    }
    for (Subset g : covers_of(chain.back())) {
      chain.push_back(g);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool bergman_membership_via_flags(const Matroid& m, const RationalVector& x, int max_ground) {
  for (const FlagOfFlats& flag : enumerate_complete_flags(m, max_ground))
    if (in_flag_cone(flag, x)) return true;
  return false;
}

}  // namespace tropcrit

#pragma once

#include <string>
#include <vector>

#include "tropcrit/matroid.hpp"
#include "tropcrit/subset.hpp"

namespace tropcrit {

// Univariate polynomial in t with exact integer coefficients, ascending
// degree. The zero polynomial is the empty coefficient list.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<long long> coeffs);

  const std::vector<long long>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(k)] : 0;
  }
  long long evaluate(long long t) const;
  IntegerPolynomial derivative() const;
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) = default;

 private:
  std::vector<long long> coeffs_;
};

// A complete flag of flats: chain[0] = empty, chain[i] has rank i,
// chain[rank] = E. In a loopless matroid every member is a flat.
struct FlagOfFlats {
  std::vector<Subset> chain;

  int length() const { return static_cast<int>(chain.size()) - 1; }
  Subset ground() const { return chain.back(); }
  // The strata F_i - F_{i-1}, i = 1..rank; they partition the ground set.
  std::vector<Subset> strata() const;

  friend bool operator==(const FlagOfFlats& a, const FlagOfFlats& b) = default;
};

// Throws unless the chain is a complete flag of flats of m (chain[0] = empty
// is accepted even when m has loops, matching the convention F_0 = empty).
void validate_flag(const Matroid& m, const FlagOfFlats& flag);

// chi_M(t) = sum over X of (-1)^|X| t^(r(M)-r(X)); exact, |E| <= 20.
IntegerPolynomial char_poly(const Matroid& m);

// beta(M) = |chi'_M(1)|.
long long beta(const Matroid& m);

// F_i = cl{b_1,...,b_i} for B = {b_1 > ... > b_k}.
FlagOfFlats flag_of_basis(const Matroid& m, Subset basis);

// True iff the basis contains no broken circuit. Uses the flag-minimum
// criterion b_i = min F_i; a matroid with a loop has no nbc-bases at all
// (the empty set is a broken circuit).
bool is_nbc_basis(const Matroid& m, Subset basis);

// All bases B with B nbc in M and (B-complement + 0 - 1) an nbc basis of the
// dual; requires the canonical order with special element 0. Every returned
// basis contains 0 and excludes 1. Lexicographically ordered.
std::vector<Subset> bnbc_bases(const Matroid& m);

}  // namespace tropcrit

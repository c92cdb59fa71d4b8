#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropcrit/bergman.hpp"
#include "tropcrit/matroid.hpp"
#include "tropcrit/subset.hpp"

namespace tropcrit {

// Capped by the factorial chamber count of the permutohedral fan.
inline constexpr int kMaxTautGround = 7;

// Sparse polynomial in t_0,...,t_n with integer coefficients. Monomial keys
// pack one 8-bit exponent per variable; fine for |E| <= 8 and the small
// degrees that occur here.
class MultivariatePolynomial {
 public:
  MultivariatePolynomial() = default;
  static MultivariatePolynomial constant(long long c);
  static MultivariatePolynomial variable(int v);
  // prod over S of (sign * t_v).
  static MultivariatePolynomial product_of_variables(Subset s, int sign = 1);
  // i-th elementary symmetric polynomial in {sign * t_v : v in S}.
  static MultivariatePolynomial elementary_symmetric(Subset s, int degree, int sign = 1);

  bool is_zero() const { return terms_.empty(); }
  MultivariatePolynomial operator+(const MultivariatePolynomial& o) const;
  MultivariatePolynomial operator-(const MultivariatePolynomial& o) const;
  MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;

  // Replace t_from by t_to.
  MultivariatePolynomial substituted(int from, int to) const;
  bool divisible_by_variable(int v) const;
  // Exact division by t_v; throws if not divisible.
  MultivariatePolynomial divided_by_variable(int v) const;

  std::string to_string() const;
  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) = default;

 private:
  static int exponent(std::uint64_t key, int v) { return static_cast<int>((key >> (8 * v)) & 0xff); }
  // monomial key -> coefficient; zero coefficients are never stored.
  std::map<std::uint64_t, long long> terms_;
};

// One polynomial per chamber of the permutohedral fan; chambers are the
// permutations of E in lexicographic order.
struct PiecewisePolynomial {
  int ground_size = 0;
  std::vector<MultivariatePolynomial> per_chamber;  // indexed by lex rank
};

// All permutations of {0..n} in lexicographic order.
const std::vector<std::vector<int>>& permutations_of(int ground_size);

// Continuity across every shared facet: chambers of adjacent transpositions
// agree after identifying the two swapped variables.
bool is_continuous(const PiecewisePolynomial& p);

// The greedy basis under the chamber order sigma: scan sigma, keep an element
// if it enlarges the rank.
Subset lex_first_basis(const Matroid& m, const std::vector<int>& sigma);

// Chamber-wise elementary symmetric polynomials in the greedy-basis
// variables (resp. their negated complement); both are continuous.
PiecewisePolynomial chern_s_dual(const Matroid& m, int i);
PiecewisePolynomial chern_q(const Matroid& m, int j);

// Representative of the affine Bergman fan class: the top chern_q, i.e.
// sigma -> prod over E - B_sigma(M) of (-t_i).
PiecewisePolynomial class_affine_bergman(const AffineMatroid& a);
// Representative of the inverted dual fan class: the top chern_s_dual of
// M/0 with 0 re-added as a loop.
PiecewisePolynomial class_inverted_dual(const AffineMatroid& a);

struct ChamberCertificate {
  std::vector<int> sigma;
  bool special_in_basis;       // 0 in B_sigma(M): the cancellation branch
  bool greedy_identity_holds;  // B_sigma(M/0 + loop) == B_sigma(M) - 0
  bool divisible;
};

struct DivisibilityReport {
  bool all_divisible = false;
  std::vector<ChamberCertificate> certificates;
};

// t_0 divides [Sigma_(M,0)]_sigma * (c_r(S_M-dual)_sigma - [-Sigma_N]_sigma)
// on every chamber; the certificate records which branch applied.
DivisibilityReport divisibility_check(const AffineMatroid& a);

}  // namespace tropcrit

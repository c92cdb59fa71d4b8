#include "tropcrit/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "tropcrit/errors.hpp"

namespace tropcrit {

IntegerPolynomial::IntegerPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long IntegerPolynomial::evaluate(long long t) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<long long> d;
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(static_cast<long long>(k) * coeffs_[k]);
  return IntegerPolynomial(std::move(d));
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    long long c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long a = std::llabs(c);
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::vector<Subset> FlagOfFlats::strata() const {
  std::vector<Subset> out;
  for (size_t i = 1; i < chain.size(); ++i) out.push_back(chain[i] - chain[i - 1]);
  return out;
}

void validate_flag(const Matroid& m, const FlagOfFlats& flag) {
  const auto& c = flag.chain;
  if (c.size() != static_cast<size_t>(m.rank()) + 1 || !c.front().empty() ||
      c.back() != m.ground())
    throw Error(ErrorCode::InternalAssertionFailed, "flag endpoints or length wrong");
  for (size_t i = 1; i < c.size(); ++i) {
    if (!(c[i - 1].subset_of(c[i])) || c[i - 1] == c[i])
      throw Error(ErrorCode::InternalAssertionFailed, "flag chain not strictly increasing");
    if (m.rank_of(c[i]) != static_cast<int>(i) || m.closure(c[i]) != c[i])
      throw Error(ErrorCode::InternalAssertionFailed, "flag member not a rank-i flat");
  }
}

IntegerPolynomial char_poly(const Matroid& m) {
  if (m.ground_size() > 20)
    throw Error(ErrorCode::GroundTooLarge, "char_poly enumerates all subsets; |E| <= 20 required");
  int n1 = m.ground_size();
  std::uint64_t total = std::uint64_t{1} << n1;
  // Rank of every subset by dynamic programming: independence is the downward
  // closure of the bases, and r(X) = max over e of r(X - e) otherwise.
  std::vector<std::uint8_t> indep(total, 0);
  for (Subset b : m.bases()) indep[b.bits()] = 1;
  for (std::uint64_t bits = total; bits-- > 0;) {
    if (!indep[bits]) continue;
    for (std::uint64_t rest = bits; rest; rest &= rest - 1)
      indep[bits & ~(rest & -rest)] = 1;
  }
  std::vector<std::uint8_t> rank_of(total, 0);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    if (indep[bits]) {
      rank_of[bits] = static_cast<std::uint8_t>(std::popcount(bits));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint64_t rest = bits; rest; rest &= rest - 1)
      best = std::max(best, rank_of[bits & ~(rest & -rest)]);
    rank_of[bits] = best;
  }
  int r = m.rank();
  std::vector<long long> coeffs(static_cast<size_t>(r) + 1, 0);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    int sign = std::popcount(bits) % 2 == 0 ? 1 : -1;
    coeffs[static_cast<size_t>(r - rank_of[bits])] += sign;
  }
  return IntegerPolynomial(std::move(coeffs));
}

long long beta(const Matroid& m) {
  return std::llabs(char_poly(m).derivative().evaluate(1));
}

FlagOfFlats flag_of_basis(const Matroid& m, Subset basis) {
  if (!m.is_basis(basis))
    throw Error(ErrorCode::NotABasis, basis.to_string() + " is not a basis");
  std::vector<int> desc = basis.elements();
  std::reverse(desc.begin(), desc.end());
  FlagOfFlats flag;
  flag.chain.push_back(Subset());
  Subset prefix;
  for (int b : desc) {
    prefix = prefix.with(b);
    flag.chain.push_back(m.closure(prefix));
  }
  return flag;
}

bool is_nbc_basis(const Matroid& m, Subset basis) {
  if (!m.is_basis(basis))
    throw Error(ErrorCode::NotABasis, basis.to_string() + " is not a basis");
  // A loop yields the empty broken circuit, which every basis contains.
  if (m.has_loop()) return false;
  FlagOfFlats flag = flag_of_basis(m, basis);
  std::vector<int> desc = basis.elements();
  std::reverse(desc.begin(), desc.end());
  for (size_t i = 0; i < desc.size(); ++i)
    if (flag.chain[i + 1].min_element() != desc[i]) return false;
  return true;
}

std::vector<Subset> bnbc_bases(const Matroid& m) {
  if (m.ground_size() < 2 || m.is_loop(0) || m.is_coloop(0))
    throw Error(ErrorCode::LoopOrColoopSpecialElement,
                "beta-nbc bases need the special element 0 to be neither a loop nor a coloop");
  Matroid dual = m.dual();
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    // The size bookkeeping of (B-complement + 0 - 1) forces 0 in B, 1 not in B.
    if (!b.contains(0) || b.contains(1)) continue;
    if (!is_nbc_basis(m, b)) continue;
    Subset swapped = (m.ground() - b).with(0).without(1);
    if (!dual.is_basis(swapped)) continue;
    if (!is_nbc_basis(dual, swapped)) continue;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace tropcrit

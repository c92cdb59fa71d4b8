#include "tropcrit/taut.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "tropcrit/errors.hpp"

namespace tropcrit {

MultivariatePolynomial MultivariatePolynomial::constant(long long c) {
  MultivariatePolynomial p;
  if (c != 0) p.terms_[0] = c;
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(int v) {
  MultivariatePolynomial p;
  p.terms_[std::uint64_t{1} << (8 * v)] = 1;
  return p;
}

MultivariatePolynomial MultivariatePolynomial::product_of_variables(Subset s, int sign) {
  MultivariatePolynomial p;
  std::uint64_t key = 0;
  for (int v : s.elements()) key += std::uint64_t{1} << (8 * v);
  p.terms_[key] = s.count() % 2 == 0 ? 1 : sign;
  return p;
}

MultivariatePolynomial MultivariatePolynomial::elementary_symmetric(Subset s, int degree,
                                                                    int sign) {
  if (degree < 0 || degree > s.count())
    throw Error(ErrorCode::IndexOutOfRange,
                "elementary symmetric degree " + std::to_string(degree) + " of " + s.to_string());
  MultivariatePolynomial p;
  std::vector<int> elems = s.elements();
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t next) -> void {
    if (static_cast<int>(pick.size()) == degree) {
      std::uint64_t key = 0;
      for (int v : pick) key += std::uint64_t{1} << (8 * v);
      p.terms_[key] += degree % 2 == 0 ? 1 : sign;
      return;
    }
    for (size_t i = next; i < elems.size(); ++i) {
      pick.push_back(elems[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& o) const {
  MultivariatePolynomial out = *this;
  for (auto& [key, c] : o.terms_) {
    auto it = out.terms_.find(key);
    if (it == out.terms_.end()) {
      out.terms_[key] = c;
    } else if ((it->second += c) == 0) {
      out.terms_.erase(it);
    }
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& o) const {
  MultivariatePolynomial neg;
  for (auto& [key, c] : o.terms_) neg.terms_[key] = -c;
  return *this + neg;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
  MultivariatePolynomial out;
  for (auto& [ka, ca] : terms_) {
    for (auto& [kb, cb] : o.terms_) {
      std::uint64_t key = ka + kb;  // per-variable exponents add; 8 bits never overflow here
      auto it = out.terms_.find(key);
      if (it == out.terms_.end()) {
        out.terms_[key] = ca * cb;
      } else if ((it->second += ca * cb) == 0) {
        out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::substituted(int from, int to) const {
  MultivariatePolynomial out;
  for (auto& [key, c] : terms_) {
    int e = exponent(key, from);
    std::uint64_t moved = key - (static_cast<std::uint64_t>(e) << (8 * from)) +
                          (static_cast<std::uint64_t>(e) << (8 * to));
    auto it = out.terms_.find(moved);
    if (it == out.terms_.end()) {
      out.terms_[moved] = c;
    } else if ((it->second += c) == 0) {
      out.terms_.erase(it);
    }
  }
  return out;
}

bool MultivariatePolynomial::divisible_by_variable(int v) const {
  for (auto& [key, c] : terms_)
    if (exponent(key, v) == 0) return false;
  return true;
}

MultivariatePolynomial MultivariatePolynomial::divided_by_variable(int v) const {
  if (!divisible_by_variable(v))
    throw Error(ErrorCode::InternalAssertionFailed, "polynomial not divisible by t_" + std::to_string(v));
  MultivariatePolynomial out;
  for (auto& [key, c] : terms_) out.terms_[key - (std::uint64_t{1} << (8 * v))] = c;
  return out;
}

std::string MultivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [key, c] : terms_) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    std::string vars;
    for (int v = 0; v < 8; ++v) {
      int e = exponent(key, v);
      if (e == 0) continue;
      vars += "t" + std::to_string(v);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (a != 1 || vars.empty()) s += std::to_string(a);
    s += vars;
  }
  return s;
}

const std::vector<std::vector<int>>& permutations_of(int ground_size) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(ground_size);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> all;
  std::vector<int> perm(static_cast<size_t>(ground_size));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(ground_size, std::move(all)).first->second;
}

bool is_continuous(const PiecewisePolynomial& p) {
  const auto& perms = permutations_of(p.ground_size);
  std::map<std::vector<int>, size_t> rank;
  for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = i;
  for (size_t i = 0; i < perms.size(); ++i) {
    for (int k = 0; k + 1 < p.ground_size; ++k) {
      std::vector<int> swapped = perms[i];
      std::swap(swapped[static_cast<size_t>(k)], swapped[static_cast<size_t>(k) + 1]);
      size_t j = rank.at(swapped);
      if (j < i) continue;  // each facet once
      int a = perms[i][static_cast<size_t>(k)];
      int b = perms[i][static_cast<size_t>(k) + 1];
      // On the shared facet x_a = x_b; the polynomials must agree there.
      if (p.per_chamber[i].substituted(a, b) != p.per_chamber[j].substituted(a, b)) return false;
    }
  }
  return true;
}

Subset lex_first_basis(const Matroid& m, const std::vector<int>& sigma) {
  Subset picked;
  int r = 0;
  for (int v : sigma) {
    if (m.rank_of(picked.with(v)) > r) {
      picked = picked.with(v);
      ++r;
    }
    if (r == m.rank()) break;
  }
  return picked;
}

namespace {

void check_taut_ground(const Matroid& m) {
  if (m.ground_size() > kMaxTautGround)
    throw Error(ErrorCode::GroundTooLarge,
                "chamber-wise computations are capped at " + std::to_string(kMaxTautGround) +
                    " elements");
}

template <typename PerChamber>
PiecewisePolynomial per_chamber(const Matroid& m, PerChamber&& f) {
  PiecewisePolynomial out;
  out.ground_size = m.ground_size();
  const auto& perms = permutations_of(m.ground_size());
  out.per_chamber.reserve(perms.size());
  for (const auto& sigma : perms) out.per_chamber.push_back(f(sigma));
  return out;
}

}  // namespace

PiecewisePolynomial chern_s_dual(const Matroid& m, int i) {
  check_taut_ground(m);
  if (i < 0 || i > m.rank())
    throw Error(ErrorCode::IndexOutOfRange, "chern_s_dual index " + std::to_string(i));
  return per_chamber(m, [&](const std::vector<int>& sigma) {
    return MultivariatePolynomial::elementary_symmetric(lex_first_basis(m, sigma), i, +1);
  });
}

PiecewisePolynomial chern_q(const Matroid& m, int j) {
  check_taut_ground(m);
  int corank = m.ground_size() - m.rank();
  if (j < 0 || j > corank)
    throw Error(ErrorCode::IndexOutOfRange, "chern_q index " + std::to_string(j));
  return per_chamber(m, [&](const std::vector<int>& sigma) {
    return MultivariatePolynomial::elementary_symmetric(m.ground() - lex_first_basis(m, sigma), j,
                                                        -1);
  });
}

namespace {

// M/0 with 0 re-added as a loop, on the original ground set.
Matroid contraction_with_loop(const AffineMatroid& a) {
  Minor contraction = a.matroid().contract(0);
  std::vector<Subset> bases;
  for (Subset b : contraction.matroid.bases()) bases.push_back(b.shifted_up());
  return Matroid::from_bases(a.matroid().n(), bases);
}

}  // namespace

PiecewisePolynomial class_affine_bergman(const AffineMatroid& a) {
  const Matroid& m = a.matroid();
  check_taut_ground(m);
  int corank = m.ground_size() - m.rank();
  PiecewisePolynomial direct = per_chamber(m, [&](const std::vector<int>& sigma) {
    return MultivariatePolynomial::product_of_variables(m.ground() - lex_first_basis(m, sigma),
                                                        -1);
  });
  internal_check(direct.per_chamber == chern_q(m, corank).per_chamber,
                 "affine Bergman class must be the top chern_q");
  return direct;
}

PiecewisePolynomial class_inverted_dual(const AffineMatroid& a) {
  check_taut_ground(a.matroid());
  Matroid ml = contraction_with_loop(a);
  PiecewisePolynomial direct = per_chamber(ml, [&](const std::vector<int>& sigma) {
    return MultivariatePolynomial::product_of_variables(lex_first_basis(ml, sigma), +1);
  });
  internal_check(direct.per_chamber == chern_s_dual(ml, ml.rank()).per_chamber,
                 "inverted dual class must be the top chern_s_dual");
  return direct;
}

DivisibilityReport divisibility_check(const AffineMatroid& a) {
  const Matroid& m = a.matroid();
  check_taut_ground(m);
  Matroid ml = contraction_with_loop(a);
  int r = m.rank() - 1;  // rank r+1 in the usual notation

  DivisibilityReport report;
  report.all_divisible = true;
  for (const auto& sigma : permutations_of(m.ground_size())) {
    Subset basis = lex_first_basis(m, sigma);
    Subset loop_basis = lex_first_basis(ml, sigma);
    MultivariatePolynomial bergman_class =
        MultivariatePolynomial::product_of_variables(m.ground() - basis, -1);
    MultivariatePolynomial difference =
        MultivariatePolynomial::elementary_symmetric(basis, r, +1) -
        MultivariatePolynomial::product_of_variables(loop_basis, +1);

    ChamberCertificate cert;
    cert.sigma = sigma;
    cert.special_in_basis = basis.contains(0);
    cert.greedy_identity_holds = !cert.special_in_basis || loop_basis == basis.without(0);
    cert.divisible = (bergman_class * difference).divisible_by_variable(0);
    report.all_divisible =
        report.all_divisible && cert.divisible && cert.greedy_identity_holds;
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

}  // namespace tropcrit

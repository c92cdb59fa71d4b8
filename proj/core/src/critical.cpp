#include "tropcrit/critical.hpp"

#include <algorithm>
#include <random>

#include "tropcrit/errors.hpp"

namespace tropcrit {

namespace {

FlagOfFlats shift_flag_up(const FlagOfFlats& flag) {
  FlagOfFlats out;
  out.chain.reserve(flag.chain.size());
  for (Subset s : flag.chain) out.chain.push_back(s.shifted_up());
  return out;
}

bool rational_vector_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                      b.values().end());
}

bool point_less(const CriticalPoint& a, const CriticalPoint& b) {
  if (a.basis != b.basis) return lex_less(a.basis, b.basis);
  if (a.x != b.x) return rational_vector_less(a.x, b.x);
  return rational_vector_less(a.y, b.y);
}

RationalVector drop_origin(const RationalVector& x) {
  std::vector<Rational> vals(x.values().begin() + 1, x.values().end());
  return RationalVector(1, std::move(vals));
}

// Assemble a CriticalPoint from a flag pair and the tree solution, checking
// every invariant of the type. `require_cones` distinguishes the fast path
// (cone membership is a theorem, so a failure is a bug) from the oracle path
// (cone membership is the retention test).
std::optional<CriticalPoint> make_point(const AffineMatroid& a, const RationalVector& w,
                                        Subset basis, const FlagOfFlats& flag_m,
                                        const FlagOfFlats& flag_n, const SetPartition& pi,
                                        const SetPartition& pi_perp, bool require_cones) {
  IntersectionGraph graph = intersection_graph(pi, pi_perp);
  if (classify(graph).primary != GraphClass::Tree) {
    internal_check(!require_cones, "beta-nbc flag pair is not arboreal");
    return std::nullopt;
  }
  TreeSolution sol = solve_tree(pi, pi_perp, w);
  internal_check(sol.x.at(0) == 0, "x_0 must vanish");
  for (int e = 1; e <= a.n(); ++e)
    internal_check(sol.x.at(e) + sol.y.at(e) == w.at(e), "x + y must equal w");

  RationalVector x_full = sol.x;
  bool in_cones = in_flag_cone(flag_m, x_full) && in_flag_cone(flag_n, sol.y);
  if (!in_cones) {
    internal_check(!require_cones, "beta-nbc solution escaped its cones");
    return std::nullopt;
  }
  internal_check(in_bergman_fan(a.matroid(), x_full), "(0,x) must lie in the Bergman fan of M");
  internal_check(in_bergman_fan(a.contraction_dual(), RationalVector(0, sol.y.values())),
                 "y must lie in the Bergman fan of N");

  return CriticalPoint{basis,  flag_m,           flag_n,          pi,
                       pi_perp, drop_origin(sol.x), sol.y,          w,
                       sol.lambda_paths, sol.mu_paths};
}

}  // namespace

RationalVector canonical_rapid_w(int n) {
  std::vector<Rational> vals;
  vals.reserve(static_cast<size_t>(n));
  Rational p = 1;
  for (int i = 0; i < n; ++i) {
    vals.push_back(p);
    p *= 10;
  }
  return RationalVector(1, std::move(vals));
}

bool same_point(const CriticalPoint& a, const CriticalPoint& b) {
  return a.x == b.x && a.y == b.y;
}

std::vector<CriticalPoint> critical_points_fast(const AffineMatroid& a, const RationalVector& w) {
  if (w.first_index() != 1 || w.size() != a.n())
    throw Error(ErrorCode::GroundMismatch, "w must be indexed 1..n");
  if (!is_rapidly_increasing(w))
    throw Error(ErrorCode::NotRapidlyIncreasing,
                "the fast algorithm requires w_{i+1} > 3 w_i > 0");
  const Matroid& m = a.matroid();
  std::vector<CriticalPoint> out;
  for (Subset basis : bnbc_bases(m)) {
    FlagOfFlats flag_m = flag_of_basis(m, basis);
    Subset complement_shifted = (m.ground() - basis).shifted_down();
    FlagOfFlats flag_n = shift_flag_up(flag_of_basis(a.contraction_dual(), complement_shifted));
    auto point = make_point(a, w, basis, flag_m, flag_n, SetPartition::from_chain(flag_m.chain),
                            SetPartition::from_chain(flag_n.chain), /*require_cones=*/true);
    internal_check(point.has_value(), "beta-nbc basis produced no point");
    out.push_back(std::move(*point));
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

OracleResult critical_points_oracle(const AffineMatroid& a, const RationalVector& w,
                                    int max_ground) {
  if (w.first_index() != 1 || w.size() != a.n())
    throw Error(ErrorCode::GroundMismatch, "w must be indexed 1..n");
  const Matroid& m = a.matroid();
  OracleResult result;
  auto degenerate = [&](const std::string& reason) {
    result.points.clear();
    result.degenerate = true;
    result.degenerate_reason = reason;
    return result;
  };

  std::vector<FlagOfFlats> flags_m = enumerate_complete_flags(m, max_ground);
  std::vector<FlagOfFlats> flags_n_shifted =
      enumerate_complete_flags(a.contraction_dual(), max_ground);
  std::vector<FlagOfFlats> flags_n;
  std::vector<SetPartition> taus;
  flags_n.reserve(flags_n_shifted.size());
  taus.reserve(flags_n_shifted.size());
  for (const FlagOfFlats& g : flags_n_shifted) {
    flags_n.push_back(shift_flag_up(g));
    taus.push_back(SetPartition::from_chain(flags_n.back().chain));
  }

  for (const FlagOfFlats& flag_m : flags_m) {
    SetPartition pi = SetPartition::from_chain(flag_m.chain);
    // The strata minima; a beta-nbc basis when w is rapidly increasing.
    Subset basis;
    for (Subset stratum : flag_m.strata()) basis = basis.with(stratum.min_element());
    for (size_t j = 0; j < flags_n.size(); ++j) {
      const SetPartition& tau = taus[j];
      GraphClass cls = classify(intersection_graph(pi, tau));
      if (cls.primary == GraphClass::Disconnected) continue;  // never an isolated point
      if (cls.primary == GraphClass::HasCycle) {
        // All cycle sums vanishing means the two affine subspaces meet even
        // though the pair is not arboreal: w sits in a measure-zero set.
        if (!generic_infeasibility_witness(pi, tau, w))
          return degenerate("cyclic flag pair with vanishing alternating sums: " +
                            pi.to_string() + " / " + tau.to_string());
        continue;
      }
      auto point =
          make_point(a, w, basis, flag_m, flags_n[j], pi, tau, /*require_cones=*/false);
      if (point) result.points.push_back(std::move(*point));
    }
  }

  for (const CriticalPoint& p : result.points) {
    if (!strictly_inside_flag_cone(p.flag_m, with_zero_at_origin(p.x)) ||
        !strictly_inside_flag_cone(p.flag_n, p.y))
      return degenerate("solution on a cone boundary for flags of basis " + p.basis.to_string());
  }
  for (size_t i = 0; i < result.points.size(); ++i)
    for (size_t j = i + 1; j < result.points.size(); ++j)
      if (same_point(result.points[i], result.points[j]))
        return degenerate("two flag pairs produced the same point");

  std::sort(result.points.begin(), result.points.end(), point_less);
  return result;
}

namespace {

RationalVector sample_integer_w(int n, std::mt19937_64& gen) {
  std::vector<Rational> vals;
  vals.reserve(static_cast<size_t>(n));
  // gen() % k is reproducible across standard libraries, unlike the
  // distribution classes.
  for (int i = 0; i < n; ++i) vals.emplace_back(static_cast<long long>(gen() % 1'000'000 + 1));
  return RationalVector(1, std::move(vals));
}

}  // namespace

long long degree(const AffineMatroid& a, int trials, std::uint64_t rng_seed, int max_ground) {
  if (trials < 1) throw Error(ErrorCode::AllTrialsDegenerate, "trials must be >= 1");
  std::mt19937_64 gen(rng_seed);
  for (int t = 0; t < trials; ++t) {
    OracleResult res = critical_points_oracle(a, sample_integer_w(a.n(), gen), max_ground);
    if (!res.degenerate) return static_cast<long long>(res.points.size());
  }
  throw Error(ErrorCode::AllTrialsDegenerate,
              "all " + std::to_string(trials) + " sampled w were degenerate");
}

VerificationReport verify_theorem(const AffineMatroid& a, int num_random_w,
                                  std::uint64_t rng_seed, int max_ground) {
  VerificationReport report;
  report.seed = rng_seed;
  report.samples_requested = num_random_w;
  try {
    report.beta_value = beta(a.matroid());

    RationalVector w0 = canonical_rapid_w(a.n());
    report.fast_points = critical_points_fast(a, w0);
    report.fast_count = static_cast<long long>(report.fast_points.size());

    OracleResult rapid = critical_points_oracle(a, w0, max_ground);
    if (rapid.degenerate) {
      report.error = "canonical rapidly increasing w reported degenerate: " +
                     rapid.degenerate_reason;
    } else {
      report.oracle_points_rapid = std::move(rapid.points);
      report.oracle_count_rapid = static_cast<long long>(report.oracle_points_rapid.size());
      report.point_sets_equal =
          report.fast_points.size() == report.oracle_points_rapid.size() &&
          std::equal(report.fast_points.begin(), report.fast_points.end(),
                     report.oracle_points_rapid.begin(), same_point);
    }

    std::mt19937_64 gen(rng_seed);
    constexpr int kAttemptsPerSample = 20;
    for (int s = 0; s < num_random_w && !report.error; ++s) {
      bool done = false;
      for (int attempt = 0; attempt < kAttemptsPerSample; ++attempt) {
        OracleResult res = critical_points_oracle(a, sample_integer_w(a.n(), gen), max_ground);
        if (res.degenerate) {
          ++report.resamples;
          continue;
        }
        report.oracle_counts_random.push_back(static_cast<long long>(res.points.size()));
        done = true;
        break;
      }
      if (!done)
        report.error = "random sample " + std::to_string(s) + " stayed degenerate after " +
                       std::to_string(kAttemptsPerSample) + " attempts";
    }

    report.fast_matches_beta =
        report.fast_count.has_value() && *report.fast_count == report.beta_value;
    report.oracle_matches_beta =
        report.oracle_count_rapid.has_value() && *report.oracle_count_rapid == report.beta_value;
    for (long long c : report.oracle_counts_random)
      report.oracle_matches_beta = report.oracle_matches_beta && c == report.beta_value;
    report.all_agree = !report.error && report.fast_matches_beta && report.oracle_matches_beta &&
                       report.point_sets_equal;
  } catch (const Error& e) {
    report.error = e.what();
    report.all_agree = false;
  }
  return report;
}

VerificationReport verify_theorem(const Matroid& m, int e, int num_random_w,
                                  std::uint64_t rng_seed, int max_ground) {
  try {
    auto [affine, old_to_new] = AffineMatroid::canonicalize(m, e);
    return verify_theorem(affine, num_random_w, rng_seed, max_ground);
  } catch (const Error& err) {
    VerificationReport report;
    report.seed = rng_seed;
    report.samples_requested = num_random_w;
    report.error = err.what();
    return report;
  }
}

}  // namespace tropcrit

// tropcrit: tropical critical points of an affine matroid.
//
// Subcommands:
//   beta     <file.json>                      characteristic polynomial and beta invariant
//   critical <file.json> [--w ...] [--oracle] the critical points for a weight vector
//   verify   <file.json> [--samples] [--seed] cross-check fast count, oracle count, beta
//   taut     <file.json>                      chamber-wise divisibility certificates
//
// Exit codes: 0 success/agreement, 2 input error, 3 theorem violation or
// internal inconsistency (a bug signal), 4 resource cap exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tropcrit/bergman.hpp"
#include "tropcrit/critical.hpp"
#include "tropcrit/errors.hpp"
#include "tropcrit/invariants.hpp"
#include "tropcrit/serialization.hpp"
#include "tropcrit/taut.hpp"

namespace {

using tropcrit::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;
constexpr int kExitResource = 4;

int exit_code_for(tropcrit::ErrorCode code) {
  switch (code) {
    case tropcrit::ErrorCode::GroundTooLarge:
    case tropcrit::ErrorCode::FlagEnumerationTooLarge:
    case tropcrit::ErrorCode::AllTrialsDegenerate:
      return kExitResource;
    case tropcrit::ErrorCode::InternalAssertionFailed:
      return kExitViolation;
    default:
      return kExitInput;
  }
}

struct Caps {
  int flag_enumeration = tropcrit::kDefaultFlagEnumerationCap;
  int taut = tropcrit::kMaxTautGround;
};

Caps read_caps() {
  Caps caps;
  if (const char* env = std::getenv("TROPCRIT_MAX_GROUND")) {
    int v = std::atoi(env);
    if (v >= 1) {
      caps.flag_enumeration = v;
      caps.taut = std::min(v, tropcrit::kMaxTautGround);
    }
  }
  return caps;
}

void emit(const Json& doc, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path);
    out << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

tropcrit::RationalVector parse_w_option(const std::string& spec, int n) {
  std::vector<tropcrit::Rational> vals;
  std::string token;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!token.empty()) vals.push_back(tropcrit::rational_from_string(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  if (static_cast<int>(vals.size()) != n)
    throw tropcrit::Error(tropcrit::ErrorCode::ParseError,
                          "--w needs exactly " + std::to_string(n) + " entries");
  return tropcrit::RationalVector(1, std::move(vals));
}

struct LoadedInput {
  tropcrit::MatroidDocument doc;
  tropcrit::Matroid matroid;
  Json echo;
};

LoadedInput load_input(const std::string& path) {
  tropcrit::MatroidDocument doc = tropcrit::load_matroid_document(path);
  tropcrit::Matroid m = tropcrit::build_matroid(doc);
  Json echo = tropcrit::document_to_json(doc);
  return {std::move(doc), std::move(m), std::move(echo)};
}

Json result_skeleton(const std::string& command, const LoadedInput& input) {
  Json j;
  j["command"] = command;
  j["input"] = input.echo;
  return j;
}

// Relabels so that the requested special element becomes 0.
std::pair<tropcrit::AffineMatroid, Json> make_affine(const LoadedInput& input) {
  auto [affine, old_to_new] =
      tropcrit::AffineMatroid::canonicalize(input.matroid, input.doc.special_element);
  Json relabeling;
  relabeling["special_element"] = input.doc.special_element;
  relabeling["old_to_new"] = old_to_new;
  return {std::move(affine), std::move(relabeling)};
}

int run_beta(const std::string& path, const std::optional<std::string>& out_path) {
  auto start = std::chrono::steady_clock::now();
  LoadedInput input = load_input(path);
  Json j = result_skeleton("beta", input);
  tropcrit::IntegerPolynomial chi = tropcrit::char_poly(input.matroid);
  j["char_poly"] = chi.coefficients();
  j["char_poly_pretty"] = chi.to_string();
  j["beta"] = tropcrit::beta(input.matroid);
  j["timing_ms"] = ms_since(start);
  emit(j, out_path);
  return kExitOk;
}

int run_critical(const std::string& path, const std::string& w_spec, bool use_oracle,
                 const Caps& caps, const std::optional<std::string>& out_path) {
  auto start = std::chrono::steady_clock::now();
  LoadedInput input = load_input(path);
  if (input.matroid.ground_size() > caps.flag_enumeration)
    throw tropcrit::Error(tropcrit::ErrorCode::GroundTooLarge,
                          "TROPCRIT_MAX_GROUND caps |E| at " +
                              std::to_string(caps.flag_enumeration));
  Json j = result_skeleton("critical", input);
  auto [affine, relabeling] = make_affine(input);
  j["relabeling"] = relabeling;

  tropcrit::RationalVector w = w_spec == "auto"
                                   ? tropcrit::canonical_rapid_w(affine.n())
                                   : parse_w_option(w_spec, affine.n());
  j["w"] = tropcrit::rational_vector_to_json(w);
  j["mode"] = use_oracle ? "oracle" : "fast";
  long long beta_value = tropcrit::beta(affine.matroid());
  j["beta"] = beta_value;

  std::vector<tropcrit::CriticalPoint> points;
  if (use_oracle) {
    tropcrit::OracleResult res =
        tropcrit::critical_points_oracle(affine, w, caps.flag_enumeration);
    j["degenerate"] = res.degenerate;
    if (res.degenerate) {
      j["degenerate_reason"] = res.degenerate_reason;
      j["timing_ms"] = ms_since(start);
      emit(j, out_path);
      return kExitOk;
    }
    points = std::move(res.points);
  } else {
    points = tropcrit::critical_points_fast(affine, w);
    j["degenerate"] = false;
  }
  Json arr = Json::array();
  for (const tropcrit::CriticalPoint& p : points) arr.push_back(tropcrit::point_to_json(p));
  j["points"] = arr;
  j["count"] = points.size();
  bool agrees = static_cast<long long>(points.size()) == beta_value;
  j["agrees_with_beta"] = agrees;
  j["timing_ms"] = ms_since(start);
  emit(j, out_path);
  return agrees ? kExitOk : kExitViolation;
}

int run_verify(const std::string& path, int samples, std::uint64_t seed, const Caps& caps,
               const std::optional<std::string>& out_path) {
  auto start = std::chrono::steady_clock::now();
  LoadedInput input = load_input(path);
  if (input.matroid.ground_size() > caps.flag_enumeration)
    throw tropcrit::Error(tropcrit::ErrorCode::GroundTooLarge,
                          "TROPCRIT_MAX_GROUND caps |E| at " +
                              std::to_string(caps.flag_enumeration));
  Json j = result_skeleton("verify", input);
  auto [affine, relabeling] = make_affine(input);
  j["relabeling"] = relabeling;
  tropcrit::VerificationReport report =
      tropcrit::verify_theorem(affine, samples, seed, caps.flag_enumeration);
  j["report"] = tropcrit::verification_report_to_json(report);
  j["timing_ms"] = ms_since(start);
  if (report.error) {
    j["discrepancy"] = *report.error;
    emit(j, out_path);
    return kExitViolation;
  }
  if (!report.all_agree) {
    j["discrepancy"] = "counts or point sets disagree";
    emit(j, out_path);
    return kExitViolation;
  }
  emit(j, out_path);
  return kExitOk;
}

int run_taut(const std::string& path, const Caps& caps,
             const std::optional<std::string>& out_path) {
  auto start = std::chrono::steady_clock::now();
  LoadedInput input = load_input(path);
  if (input.matroid.ground_size() > caps.taut)
    throw tropcrit::Error(tropcrit::ErrorCode::GroundTooLarge,
                          "chamber-wise computations capped at " + std::to_string(caps.taut) +
                              " elements");
  Json j = result_skeleton("taut", input);
  auto [affine, relabeling] = make_affine(input);
  j["relabeling"] = relabeling;

  tropcrit::DivisibilityReport report = tropcrit::divisibility_check(affine);
  int cancellation = 0, outside = 0;
  Json failures = Json::array();
  for (const auto& cert : report.certificates) {
    (cert.special_in_basis ? cancellation : outside)++;
    if (!cert.divisible || !cert.greedy_identity_holds)
      failures.push_back(Json{{"sigma", cert.sigma},
                              {"divisible", cert.divisible},
                              {"greedy_identity_holds", cert.greedy_identity_holds}});
  }
  j["chambers"] = report.certificates.size();
  j["branch_counts"] =
      Json{{"cancellation", cancellation}, {"special_outside_basis", outside}};
  j["all_divisible"] = report.all_divisible;

  bool continuous = tropcrit::is_continuous(tropcrit::class_affine_bergman(affine)) &&
                    tropcrit::is_continuous(tropcrit::class_inverted_dual(affine));
  j["classes_continuous"] = continuous;
  j["timing_ms"] = ms_since(start);
  if (!report.all_divisible || !continuous) {
    j["discrepancy"] = failures;
    emit(j, out_path);
    return kExitViolation;
  }
  emit(j, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical critical points of an affine matroid"};
  app.require_subcommand(1);

  std::string input_path;
  std::string w_spec = "auto";
  bool use_oracle = false;
  int samples = 3;
  std::uint64_t seed = 42;
  std::optional<std::string> out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", input_path, "matroid document (JSON)")->required();
    sub->add_option("--out", out_path, "write the result document to a file");
  };

  CLI::App* cmd_beta = app.add_subcommand("beta", "characteristic polynomial and beta invariant");
  add_common(cmd_beta);

  CLI::App* cmd_critical = app.add_subcommand("critical", "tropical critical points");
  add_common(cmd_critical);
  cmd_critical->add_option("--w", w_spec,
                           "comma-separated weights w_1,...,w_n (default: 1,10,100,...)");
  cmd_critical->add_flag("--oracle", use_oracle, "use the flag-pair enumeration oracle");

  CLI::App* cmd_verify = app.add_subcommand("verify", "cross-check both algorithms against beta");
  add_common(cmd_verify);
  cmd_verify->add_option("--samples", samples, "number of random weight vectors");
  cmd_verify->add_option("--seed", seed, "RNG seed (recorded in the report)");

  CLI::App* cmd_taut = app.add_subcommand("taut", "chamber-wise divisibility certificates");
  add_common(cmd_taut);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;  // --help exits 0
  }

  Caps caps = read_caps();
  try {
    if (cmd_beta->parsed()) return run_beta(input_path, out_path);
    if (cmd_critical->parsed())
      return run_critical(input_path, w_spec, use_oracle, caps, out_path);
    if (cmd_verify->parsed()) return run_verify(input_path, samples, seed, caps, out_path);
    if (cmd_taut->parsed()) return run_taut(input_path, caps, out_path);
  } catch (const tropcrit::Error& e) {
    Json err;
    err["error"] = Json{{"code", tropcrit::error_code_name(e.code())}, {"message", e.what()}};
    emit(err, out_path);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"code", "Unexpected"}, {"message", e.what()}};
    emit(err, out_path);
    return kExitViolation;
  }
  return kExitInput;
}

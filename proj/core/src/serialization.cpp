#include "tropcrit/serialization.hpp"

#include <fstream>

#include "tropcrit/errors.hpp"

namespace tropcrit {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(ErrorCode::ParseError, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

MatroidDocument parse_matroid_document(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(ErrorCode::ParseError, "matroid document must be an object with a \"type\"");
  MatroidDocument doc;
  std::string type = j["type"].get<std::string>();
  if (type == "bases") {
    doc.type = MatroidDocument::Type::Bases;
    doc.n = require_int(j, "n");
    if (!j.contains("bases") || !j["bases"].is_array())
      throw Error(ErrorCode::ParseError, "\"bases\" array required");
    for (const Json& b : j["bases"]) doc.bases.push_back(subset_from_json(b));
  } else if (type == "uniform") {
    doc.type = MatroidDocument::Type::Uniform;
    doc.uniform_rank = require_int(j, "r");
    doc.uniform_size = require_int(j, "n");
  } else if (type == "graphic") {
    doc.type = MatroidDocument::Type::Graphic;
    doc.vertices = require_int(j, "vertices");
    if (!j.contains("edges") || !j["edges"].is_array())
      throw Error(ErrorCode::ParseError, "\"edges\" array required");
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw Error(ErrorCode::ParseError, "each edge must be a pair of vertex indices");
      doc.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown matroid type \"" + type + "\"");
  }
  if (j.contains("special_element")) doc.special_element = require_int(j, "special_element");
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw Error(ErrorCode::ParseError, "\"labels\" must be an array of strings");
    for (const Json& l : j["labels"]) {
      if (!l.is_string()) throw Error(ErrorCode::ParseError, "labels must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

MatroidDocument load_matroid_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_matroid_document(j);
}

Json document_to_json(const MatroidDocument& doc) {
  Json j;
  switch (doc.type) {
    case MatroidDocument::Type::Bases: {
      j["type"] = "bases";
      j["n"] = doc.n;
      Json bases = Json::array();
      for (Subset b : doc.bases) bases.push_back(subset_to_json(b));
      j["bases"] = bases;
      break;
    }
    case MatroidDocument::Type::Uniform:
      j["type"] = "uniform";
      j["r"] = doc.uniform_rank;
      j["n"] = doc.uniform_size;
      break;
    case MatroidDocument::Type::Graphic: {
      j["type"] = "graphic";
      j["vertices"] = doc.vertices;
      Json edges = Json::array();
      for (auto [u, v] : doc.edges) edges.push_back(Json::array({u, v}));
      j["edges"] = edges;
      break;
    }
  }
  j["special_element"] = doc.special_element;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

Matroid build_matroid(const MatroidDocument& doc) {
  Matroid m = [&] {
    switch (doc.type) {
      case MatroidDocument::Type::Bases:
        return Matroid::from_bases(doc.n, doc.bases);
      case MatroidDocument::Type::Uniform:
        return Matroid::uniform(doc.uniform_rank, doc.uniform_size);
      case MatroidDocument::Type::Graphic:
        return Matroid::graphic(doc.vertices, doc.edges);
    }
    throw Error(ErrorCode::ParseError, "unreachable");
  }();
  if (!doc.labels.empty() && static_cast<int>(doc.labels.size()) != m.ground_size())
    throw Error(ErrorCode::ParseError, "labels array must have one entry per element");
  if (doc.special_element < 0 || doc.special_element > m.n())
    throw Error(ErrorCode::InvalidElement,
                "special element " + std::to_string(doc.special_element) + " not in ground set");
  return m;
}

Json subset_to_json(Subset s) { return Json(s.elements()); }

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "subset must be an array of integers");
  Subset s;
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() > 63)
      throw Error(ErrorCode::ParseError, "subset elements must be integers in [0,63]");
    s = s.with(e.get<int>());
  }
  return s;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json arr = Json::array();
  for (const Rational& r : v.values()) arr.push_back(rational_to_string(r));
  return arr;
}

RationalVector rational_vector_from_json(const Json& j, int first_index) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "rational vector must be an array");
  std::vector<Rational> vals;
  for (const Json& e : j) {
    if (!e.is_string())
      throw Error(ErrorCode::ParseError, "rationals are serialized as strings, never numbers");
    vals.push_back(rational_from_string(e.get<std::string>()));
  }
  return RationalVector(first_index, std::move(vals));
}

Json flag_to_json(const FlagOfFlats& flag) {
  Json arr = Json::array();
  for (Subset s : flag.chain) arr.push_back(subset_to_json(s));
  return arr;
}

FlagOfFlats flag_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "flag must be an array of subsets");
  FlagOfFlats flag;
  for (const Json& s : j) flag.chain.push_back(subset_from_json(s));
  return flag;
}

Json partition_to_json(const SetPartition& p) {
  Json arr = Json::array();
  for (Subset b : p.blocks()) arr.push_back(subset_to_json(b));
  return arr;
}

namespace {

Json paths_to_json(const std::vector<Subset>& blocks, const std::vector<SignedPath>& paths) {
  Json arr = Json::array();
  for (size_t i = 0; i < blocks.size(); ++i) {
    arr.push_back(Json{{"block", subset_to_json(blocks[i])},
                       {"edges", Json(paths[i].edges)},
                       {"sum", paths[i].to_string()}});
  }
  return arr;
}

}  // namespace

Json point_to_json(const CriticalPoint& p) {
  return Json{{"basis", subset_to_json(p.basis)},
              {"x", rational_vector_to_json(p.x)},
              {"y", rational_vector_to_json(p.y)},
              {"flag_m", flag_to_json(p.flag_m)},
              {"flag_n", flag_to_json(p.flag_n)},
              {"pi", partition_to_json(p.pi)},
              {"pi_perp", partition_to_json(p.pi_perp)},
              {"paths_x", paths_to_json(p.pi.blocks(), p.paths_x)},
              {"paths_y", paths_to_json(p.pi_perp.blocks(), p.paths_y)}};
}

CriticalPoint point_from_json(const Json& j, const RationalVector& w) {
  FlagOfFlats flag_m = flag_from_json(j.at("flag_m"));
  FlagOfFlats flag_n = flag_from_json(j.at("flag_n"));
  SetPartition pi = SetPartition::from_chain(flag_m.chain);
  SetPartition pi_perp = SetPartition::from_chain(flag_n.chain);
  auto parse_paths = [](const Json& arr) {
    std::vector<SignedPath> out;
    for (const Json& p : arr) {
      SignedPath sp;
      for (const Json& e : p.at("edges")) sp.edges.push_back(e.get<int>());
      out.push_back(std::move(sp));
    }
    return out;
  };
  return CriticalPoint{subset_from_json(j.at("basis")),
                       std::move(flag_m),
                       std::move(flag_n),
                       std::move(pi),
                       std::move(pi_perp),
                       rational_vector_from_json(j.at("x"), 1),
                       rational_vector_from_json(j.at("y"), 1),
                       w,
                       parse_paths(j.at("paths_x")),
                       parse_paths(j.at("paths_y"))};
}

Json verification_report_to_json(const VerificationReport& report) {
  Json j;
  j["beta"] = report.beta_value;
  if (report.fast_count) j["fast_count"] = *report.fast_count;
  if (report.oracle_count_rapid) j["oracle_count_rapid"] = *report.oracle_count_rapid;
  j["oracle_counts_random"] = report.oracle_counts_random;
  j["agreement"] = Json{{"fast_matches_beta", report.fast_matches_beta},
                        {"oracle_matches_beta", report.oracle_matches_beta},
                        {"point_sets_equal", report.point_sets_equal},
                        {"all_agree", report.all_agree}};
  j["resamples"] = report.resamples;
  j["seed"] = report.seed;
  j["samples_requested"] = report.samples_requested;
  Json fast = Json::array();
  for (const CriticalPoint& p : report.fast_points) fast.push_back(point_to_json(p));
  j["fast_points"] = fast;
  Json rapid = Json::array();
  for (const CriticalPoint& p : report.oracle_points_rapid) rapid.push_back(point_to_json(p));
  j["oracle_points_rapid"] = rapid;
  if (report.error) j["error_detail"] = *report.error;
  return j;
}

}  // namespace tropcrit

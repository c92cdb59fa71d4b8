#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "tropcrit/critical.hpp"
#include "tropcrit/matroid.hpp"
#include "tropcrit/rational.hpp"
#include "tropcrit/subset.hpp"

namespace tropcrit {

using Json = nlohmann::json;

// The exchangeable description of a matroid: one of
//   {"type":"bases",   "n": 3, "bases": [[0,1],[0,2]]}
//   {"type":"uniform", "r": 2, "n": 4}              (n = number of elements)
//   {"type":"graphic", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}
// plus optional "special_element" (default 0) and optional "labels".
struct MatroidDocument {
  enum class Type { Bases, Uniform, Graphic };
  Type type = Type::Bases;
  int n = 0;  // for Bases: ground set {0..n}
  std::vector<Subset> bases;
  int uniform_rank = 0;
  int uniform_size = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int special_element = 0;
  std::vector<std::string> labels;  // empty when absent
};

MatroidDocument parse_matroid_document(const Json& j);
MatroidDocument load_matroid_document(const std::string& path);
Json document_to_json(const MatroidDocument& doc);
Matroid build_matroid(const MatroidDocument& doc);

Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j);

// Arrays of "p/q" strings, never floats.
Json rational_vector_to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j, int first_index);

Json flag_to_json(const FlagOfFlats& flag);
FlagOfFlats flag_from_json(const Json& j);

Json partition_to_json(const SetPartition& p);

Json point_to_json(const CriticalPoint& p);
// Reconstructs a point; w is carried at result level, not per point.
CriticalPoint point_from_json(const Json& j, const RationalVector& w);

Json verification_report_to_json(const VerificationReport& report);

}  // namespace tropcrit

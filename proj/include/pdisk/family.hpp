#pragma once

// Family files.
//
//   {"n": 5,
//    "curves": [{"label": "c1", "relaxed": [1, 3]},
//               {"coords": [0, 0, 0, -1, 0, 1]},
//               {"word": "t1^2 t2^-1", "seed": "c2"}]}
//
// Labels default to c1, c2, ... by position.  In a word, tK twists about the
// K-th curve of the file, which must come before the entry using it.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pdisk/intersection.hpp"
#include "pdisk/partition.hpp"
#include "pdisk/twist.hpp"

namespace pdisk {

/// Malformed family document.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveSpec {
  enum class Kind { relaxed, coords, word };

  Kind kind = Kind::relaxed;
  std::string label;
  std::pair<int, int> relaxed{0, 0};
  std::vector<Count> coords;
  TwistWord word;
  std::string seed;
};

struct FamilyDocument {
  int n = 0;
  std::vector<CurveSpec> entries;
};

FamilyDocument parse_family(const std::string& text);
FamilyDocument load_family(const std::string& path);

CurveFamily resolve(const FamilyDocument& doc);

struct Analysis {
  FamilyClassification classification;
  std::optional<PartitionOutcome> partition;  // absent when not an opposite family
  std::optional<GroupStructure> group;
  std::vector<LoopSet> lists;
  std::vector<DecisiveSet> decisive;  // empty unless the partition is complete
  std::vector<Count> iota;            // row-major k x k

  bool complete() const { return group.has_value(); }
};

Analysis analyze(const CurveFamily& family);

/// "P1={c1,c3} P2={c2} G = Z^2 * Z"
std::string summary_line(const CurveFamily& family, const Analysis& analysis);

/// Text report: classification, partition or failure, group, loop lists.
std::string text_report(const CurveFamily& family, const Analysis& analysis);

inline constexpr int kReportSchema = 1;

nlohmann::json json_report(const CurveFamily& family, const Analysis& analysis);
nlohmann::json to_json(const AuditReport& report);

}  // namespace pdisk

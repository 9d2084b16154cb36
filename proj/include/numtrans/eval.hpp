#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "numtrans/canonical.hpp"

namespace numtrans {

/// One dataset sentence with the reference lists for each numeric span.
struct TargetEntry {
  Span source_span;                     // where the number sits in `source`
  std::vector<std::string> references;  // accepted target-language forms
};

struct DatasetItem {
  std::string id;
  Direction direction = Direction::EnZh;
  NumericType type = NumericType::Decimal;
  std::string source;
  std::vector<TargetEntry> targets;
};

/// Loads a JSON-lines dataset. Validates the schema per line (duplicate
/// ids, empty reference lists, spans out of bounds) and throws DatasetError
/// with the line number and field on the first violation.
std::vector<DatasetItem> load_dataset(const std::string& path);

struct JudgeResult {
  bool pass = false;
  std::vector<std::size_t> unmet;  // indices of target entries with no hit
};

/// Pass iff for every target entry at least one reference occurs in the
/// hypothesis, normalized-substring containment, nothing fuzzy.
JudgeResult judge(const DatasetItem& item, const std::string& hypothesis);

struct EvalCell {
  int passed = 0;
  int total = 0;
};

/// Pass-rate ledger. Ratios are kept as exact integer counts; floats only
/// appear when rendering.
struct EvalResult {
  std::map<Direction, std::map<NumericType, EvalCell>> by_type;
  int passed = 0;
  int total = 0;
  std::vector<std::pair<std::string, bool>> verdicts;  // (id, pass) in order
};

/// Judges hypotheses against items, aligned by id (error on mismatch), and
/// aggregates per-type and overall counts.
EvalResult pass_rate(const std::vector<DatasetItem>& items,
                     const std::vector<std::pair<std::string, std::string>>& hypotheses);

/// Text table in the per-type, per-direction layout.
std::string render_eval_table(const EvalResult& result);

}  // namespace numtrans

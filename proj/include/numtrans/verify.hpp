#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numtrans/canonical.hpp"

namespace numtrans {

enum class Verdict { Unset, Match, Mismatch, Omitted, Spurious, Unverifiable };
const char* to_string(Verdict v);

/// An aligned (source expression, target expression) pair. A missing target
/// marks an omission, a missing source a spurious target number.
struct NumericPair {
  std::optional<SpannedExpression> source;
  std::optional<SpannedExpression> target;
  Verdict verdict = Verdict::Unset;
  std::optional<CanonicalNumeral> expected;  // set on Mismatch
  std::string reason;                        // set on Unverifiable
};

/// Raw (source phrase, target phrase) extraction, e.g. from an LLM.
using PairExtractor = std::function<
    std::vector<std::pair<std::string, std::string>>(const std::string& source,
                                                     const std::string& target)>;

/// Extracts numeric pairs from a translation pair. The default rule-based
/// path scans both sentences and aligns greedily: exact canonical matches
/// first, then same-type matches, then order when counts agree. Leftovers
/// become Omitted / Spurious candidates rather than forced pairings.
///
/// When `extractor` is supplied, its phrase pairs are located in the
/// sentences and parsed; phrases that cannot be found or parsed yield
/// Unverifiable pairs. Verdicts are left Unset except for structurally
/// determined Omitted/Spurious/Unverifiable entries.
std::vector<NumericPair> extract_pairs(const std::string& source,
                                       const std::string& target,
                                       Direction direction,
                                       const PairExtractor* extractor = nullptr);

/// Sets the verdict: Match iff canonical values agree under type-aware
/// comparison, otherwise Mismatch carrying the source-derived expected
/// canonical. Pairs missing a side become Omitted / Spurious.
NumericPair verify_pair(NumericPair pair);

enum class PostEditStyle { Digits, LargeUnit };

struct PostEditReport {
  std::string edited;
  std::vector<NumericPair> pairs;
  int edit_count = 0;
  int unresolved = 0;  // Omitted + Unverifiable
};

/// The post-editing pipeline: extract pairs, verify, and rewrite every
/// mismatched target span with the digit (or largest-unit) rendering of the
/// source value in the target language. Text outside replaced spans is
/// preserved byte for byte; omissions are reported, never silently fixed.
PostEditReport post_edit(const std::string& source, const std::string& target,
                         Direction direction,
                         PostEditStyle style = PostEditStyle::Digits,
                         const PairExtractor* extractor = nullptr);

}  // namespace numtrans

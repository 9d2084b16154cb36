#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numtrans/canonical.hpp"

namespace numtrans {

/// Parses a single English numeric phrase into its canonical form. Covers
/// digit strings with grouping commas and decimals, number words through the
/// trillions, unit words thousand/million/billion/trillion with decimal
/// multipliers, ordinals ("62nd", "second"), fractions ("half", "one
/// fourth", "1/2", "one in four"), ratios ("16:9"), negatives ("minus two"),
/// ranges ("between 300 and 500", "10 to 1440"), formulas ("48 x 48",
/// "one plus one"), folds ("three-fold"), megapixel measures ("7.0 MP") and
/// opaque number strings. Throws ParseError as parse_zh_number does.
CanonicalNumeral parse_en_number(std::string_view phrase);

/// Scans an English sentence and returns all numeric expressions,
/// non-overlapping and sorted by position.
std::vector<SpannedExpression> scan_en(std::string_view sentence);

/// Dispatch by language.
CanonicalNumeral parse_number(std::string_view phrase, Lang lang);
std::vector<SpannedExpression> scan(std::string_view sentence, Lang lang);

}  // namespace numtrans

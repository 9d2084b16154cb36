#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numtrans/canonical.hpp"

namespace numtrans {

/// Parses a single Chinese numeric phrase (no surrounding prose) into its
/// canonical form. Covers digit strings, Chinese digit words with place
/// words and the large units 万 / 亿 / 万亿, decimals with 点, ordinals with
/// 第, fractions (X分之Y, 一半), ratios (比 or colon), negatives (负),
/// ranges (到/至/~/-), folds (倍), megapixel measures (像素) and opaque
/// number strings. Throws ParseError on anything else; a phrase with more
/// than one reading throws with the candidate parses listed.
CanonicalNumeral parse_zh_number(std::string_view phrase);

/// Scans a Chinese sentence left to right and returns all numeric
/// expressions, longest match first at each position, non-overlapping and
/// sorted. Unparseable regions are skipped, never fatal.
std::vector<SpannedExpression> scan_zh(std::string_view sentence);

}  // namespace numtrans

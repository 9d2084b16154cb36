#pragma once

#include <set>
#include <string>

#include "numtrans/canonical.hpp"

namespace numtrans {

/// Canonical digit rendering. English groups integers >= 10,000 with commas;
/// Chinese uses plain ungrouped digits. Range joins with "-", Ratio with
/// ":", Fraction as "n/m", Ordinal as "62nd" / "第62". NumberString returns
/// the literal unchanged. Formula input throws ParseError (unsupported).
std::string render_digits(const CanonicalNumeral& c, Lang lang);

/// All accepted surface forms of `c` in `lang`: plain digits, grouped
/// digits, unit forms with decimal mantissas, word forms (with both 两 and
/// 二 variants in Chinese), and mixed digit-unit forms. Every returned
/// string parses back to a canonical equal to `c`.
std::set<std::string> render_forms(const CanonicalNumeral& c, Lang lang);

/// Decimal-times-largest-unit form with no precision loss: the largest unit
/// (EN million/billion/trillion, ZH 万/亿/万亿) whose mantissa is >= 1 and
/// has at most 4 decimal places. Falls back to render_digits otherwise.
std::string render_large_unit(const CanonicalNumeral& c, Lang lang);

/// Integer word renderings used by render_forms; exposed for reuse in the
/// formatter tests. `value` must be an integer below 10^16 (ZH) / 10^15 (EN).
std::string zh_words_integer(const NumericValue& value);
std::string en_words_integer(const NumericValue& value, bool with_and);

}  // namespace numtrans

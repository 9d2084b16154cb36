#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "numtrans/numeric_value.hpp"

namespace numtrans {

enum class Lang { EN, ZH };
enum class Direction { EnZh, ZhEn };

inline Lang source_lang(Direction d) {
  return d == Direction::EnZh ? Lang::EN : Lang::ZH;
}
inline Lang target_lang(Direction d) {
  return d == Direction::EnZh ? Lang::ZH : Lang::EN;
}

/// The closed ten-type numeric taxonomy.
enum class NumericType {
  LargeUnit,
  Range,
  Decimal,
  NumberString,
  Fraction,
  Ratio,
  NegativeNumber,
  Formula,
  Ordinal,
  Special,
};

enum class FormulaOp { Add, Mul };

/// Measures supported by the Special type. Anything else is rejected by the
/// parsers rather than guessed at.
enum class Measure { Fold, Megapixel };

const char* to_string(NumericType type);
const char* to_string(FormulaOp op);
const char* to_string(Measure measure);
const char* to_string(Direction direction);
const char* to_string(Lang lang);
NumericType numeric_type_from_string(std::string_view name);
Direction direction_from_string(std::string_view name);

/// Language-neutral meaning of a numeric expression.
///
/// values holds 1 entry for scalar types, low/high for Range, the two sides
/// for Ratio, numerator/denominator for Fraction and the operand list for
/// Formula. NumberString keeps only `literal`; Special carries a measure tag.
struct CanonicalNumeral {
  NumericType type = NumericType::Decimal;
  std::vector<NumericValue> values;
  std::string literal;                // NumberString only
  std::optional<FormulaOp> op;        // Formula only
  std::optional<Measure> measure;     // Special only

  static CanonicalNumeral scalar(NumericType type, NumericValue value);
  static CanonicalNumeral range(NumericValue low, NumericValue high);
  static CanonicalNumeral fraction(NumericValue numerator,
                                   NumericValue denominator);
  static CanonicalNumeral ratio(NumericValue left, NumericValue right);
  static CanonicalNumeral ordinal(NumericValue value);
  static CanonicalNumeral number_string(std::string literal);
  static CanonicalNumeral formula(FormulaOp op,
                                  std::vector<NumericValue> operands);
  static CanonicalNumeral special(Measure measure, NumericValue value);

  bool operator==(const CanonicalNumeral&) const = default;
};

/// True when `c` is a single plain value: Decimal, LargeUnit, NegativeNumber
/// or Ordinal. These types describe the surface form, not the meaning, so
/// they are interchangeable under value comparison.
bool is_scalar_like(const CanonicalNumeral& c);

/// Type-aware equality used for verification and round-trip checks.
///
/// Scalar-like types compare by exact value. Range/Ratio/Fraction compare
/// element-wise, Formula by operator and operands, Special by measure and
/// value. NumberString is strict from the source side: a NumberString source
/// only matches a NumberString target with the identical literal. A
/// NumberString *target* facing a valued source is re-read as a plain number
/// when its literal permits (the digits rendering of a value scans as an
/// opaque string in running text).
bool canonical_equal(const CanonicalNumeral& source,
                     const CanonicalNumeral& target);

/// Half-open code-point interval.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

/// A numeric expression found in a sentence: where it is, what it looks
/// like, and what it means.
struct SpannedExpression {
  Span span;
  std::string surface;
  CanonicalNumeral canonical;
  bool operator==(const SpannedExpression&) const = default;
};

}  // namespace numtrans

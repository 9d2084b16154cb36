#include "numtrans/canonical.hpp"

#include <stdexcept>

#include "numtrans/errors.hpp"

namespace numtrans {

const char* to_string(NumericType type) {
  switch (type) {
    case NumericType::LargeUnit: return "large_unit";
    case NumericType::Range: return "range";
    case NumericType::Decimal: return "decimal";
    case NumericType::NumberString: return "number_string";
    case NumericType::Fraction: return "fraction";
    case NumericType::Ratio: return "ratio";
    case NumericType::NegativeNumber: return "negative_number";
    case NumericType::Formula: return "formula";
    case NumericType::Ordinal: return "ordinal";
    case NumericType::Special: return "special";
  }
  return "?";
}

const char* to_string(FormulaOp op) {
  return op == FormulaOp::Add ? "add" : "mul";
}

const char* to_string(Measure measure) {
  return measure == Measure::Fold ? "fold" : "megapixel";
}

const char* to_string(Direction direction) {
  return direction == Direction::EnZh ? "en-zh" : "zh-en";
}

const char* to_string(Lang lang) { return lang == Lang::EN ? "en" : "zh"; }

NumericType numeric_type_from_string(std::string_view name) {
  if (name == "large_unit") return NumericType::LargeUnit;
  if (name == "range") return NumericType::Range;
  if (name == "decimal") return NumericType::Decimal;
  if (name == "number_string") return NumericType::NumberString;
  if (name == "fraction") return NumericType::Fraction;
  if (name == "ratio") return NumericType::Ratio;
  if (name == "negative_number") return NumericType::NegativeNumber;
  if (name == "formula") return NumericType::Formula;
  if (name == "ordinal") return NumericType::Ordinal;
  if (name == "special") return NumericType::Special;
  throw std::invalid_argument("unknown numeric type: " + std::string(name));
}

Direction direction_from_string(std::string_view name) {
  if (name == "en-zh") return Direction::EnZh;
  if (name == "zh-en") return Direction::ZhEn;
  throw std::invalid_argument("unknown direction: " + std::string(name));
}

CanonicalNumeral CanonicalNumeral::scalar(NumericType type,
                                          NumericValue value) {
  CanonicalNumeral c;
  c.type = type;
  c.values = {std::move(value)};
  return c;
}

CanonicalNumeral CanonicalNumeral::range(NumericValue low, NumericValue high) {
  if (high < low) std::swap(low, high);
  CanonicalNumeral c;
  c.type = NumericType::Range;
  c.values = {std::move(low), std::move(high)};
  return c;
}

CanonicalNumeral CanonicalNumeral::fraction(NumericValue numerator,
                                            NumericValue denominator) {
  if (denominator.is_zero())
    throw std::invalid_argument("fraction denominator is zero");
  CanonicalNumeral c;
  c.type = NumericType::Fraction;
  c.values = {std::move(numerator), std::move(denominator)};
  return c;
}

CanonicalNumeral CanonicalNumeral::ratio(NumericValue left,
                                         NumericValue right) {
  CanonicalNumeral c;
  c.type = NumericType::Ratio;
  c.values = {std::move(left), std::move(right)};
  return c;
}

CanonicalNumeral CanonicalNumeral::ordinal(NumericValue value) {
  return scalar(NumericType::Ordinal, std::move(value));
}

CanonicalNumeral CanonicalNumeral::number_string(std::string literal) {
  if (literal.empty())
    throw std::invalid_argument("empty number string literal");
  CanonicalNumeral c;
  c.type = NumericType::NumberString;
  c.literal = std::move(literal);
  return c;
}

CanonicalNumeral CanonicalNumeral::formula(FormulaOp op,
                                           std::vector<NumericValue> operands) {
  if (operands.size() < 2)
    throw std::invalid_argument("formula needs at least two operands");
  CanonicalNumeral c;
  c.type = NumericType::Formula;
  c.values = std::move(operands);
  c.op = op;
  return c;
}

CanonicalNumeral CanonicalNumeral::special(Measure measure,
                                           NumericValue value) {
  CanonicalNumeral c;
  c.type = NumericType::Special;
  c.values = {std::move(value)};
  c.measure = measure;
  return c;
}

bool is_scalar_like(const CanonicalNumeral& c) {
  switch (c.type) {
    case NumericType::Decimal:
    case NumericType::LargeUnit:
    case NumericType::NegativeNumber:
    case NumericType::Ordinal:
      return true;
    default:
      return false;
  }
}

namespace {

// A NumberString whose literal is a clean number (no leading zero, no
// hyphens or letters) re-reads as the value it spells. Grouping commas are
// accepted; anything from_decimal_string rejects stays opaque.
std::optional<NumericValue> reread_as_value(const CanonicalNumeral& c) {
  if (c.type != NumericType::NumberString) return std::nullopt;
  const std::string& s = c.literal;
  if (s.empty()) return std::nullopt;
  if (s[0] == '0' && s.size() > 1 && s[1] != '.') return std::nullopt;
  try {
    return NumericValue::from_decimal_string(s);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace

bool canonical_equal(const CanonicalNumeral& source,
                     const CanonicalNumeral& target) {
  if (source.type == NumericType::NumberString)
    return target.type == NumericType::NumberString &&
           source.literal == target.literal;

  if (target.type == NumericType::NumberString) {
    if (!is_scalar_like(source)) return false;
    std::optional<NumericValue> v = reread_as_value(target);
    return v && source.values.size() == 1 && source.values[0] == *v;
  }

  if (is_scalar_like(source) && is_scalar_like(target))
    return source.values.size() == 1 && target.values.size() == 1 &&
           source.values[0] == target.values[0];

  if (source.type != target.type) return false;

  switch (source.type) {
    case NumericType::Range:
    case NumericType::Ratio:
    case NumericType::Fraction:
      return source.values == target.values;
    case NumericType::Formula:
      return source.op == target.op && source.values == target.values;
    case NumericType::Special:
      return source.measure == target.measure &&
             source.values == target.values;
    default:
      return source.values == target.values;
  }
}

}  // namespace numtrans

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace numtrans {

/// Exact signed decimal: value = (negative ? -1 : 1) * digits * 10^exponent.
///
/// `digits` is an arbitrary-precision natural number written in base 10,
/// most significant digit first. The representation is kept normalized:
///   - zero is always {+, "0", 0};
///   - otherwise `digits` has no leading zeros and no trailing zeros
///     (trailing zeros are folded into the exponent).
/// Normalization makes equality structural, which keeps comparison O(1)-ish
/// in the verification loops. No floating point is involved anywhere.
class NumericValue {
 public:
  NumericValue() = default;  // zero

  /// Parses "[+-]digits[,ddd]*[.frac]". Grouping commas are validated
  /// (first group 1-3 digits, later groups exactly 3, none after the point)
  /// and ignored for the value. Throws ParseError with the byte offset of
  /// the first offending character.
  static NumericValue from_decimal_string(std::string_view text);

  static NumericValue from_int(long long value);

  /// Builds from raw parts and normalizes. `digits` must be nonempty ASCII
  /// digits.
  static NumericValue from_parts(bool negative, std::string digits,
                                 int exponent);

  bool negative() const { return negative_; }
  const std::string& digits() const { return digits_; }
  int exponent() const { return exponent_; }

  bool is_zero() const { return digits_ == "0"; }
  bool is_integer() const { return exponent_ >= 0; }
  /// Number of digits after the decimal point in the plain rendering.
  int fraction_digits() const { return exponent_ < 0 ? -exponent_ : 0; }

  /// Exact multiplication by 10^power.
  NumericValue scaled(int power) const;
  NumericValue negated() const;
  NumericValue abs() const;
  NumericValue plus(const NumericValue& other) const;

  static std::strong_ordering compare(const NumericValue& a,
                                      const NumericValue& b);

  bool operator==(const NumericValue&) const = default;

  /// Plain decimal rendering: "-105", "2.82", "2820000000", "0.001".
  std::string to_plain_string() const;

  /// Unsigned integer digit string (requires is_integer()): "2820000000".
  std::string integer_digit_string() const;

 private:
  void normalize();

  bool negative_ = false;
  std::string digits_ = "0";
  int exponent_ = 0;
};

inline bool operator<(const NumericValue& a, const NumericValue& b) {
  return NumericValue::compare(a, b) == std::strong_ordering::less;
}
inline bool operator>(const NumericValue& a, const NumericValue& b) {
  return NumericValue::compare(a, b) == std::strong_ordering::greater;
}
inline bool operator<=(const NumericValue& a, const NumericValue& b) {
  return NumericValue::compare(a, b) != std::strong_ordering::greater;
}
inline bool operator>=(const NumericValue& a, const NumericValue& b) {
  return NumericValue::compare(a, b) != std::strong_ordering::less;
}

}  // namespace numtrans

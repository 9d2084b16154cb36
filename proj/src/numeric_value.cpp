#include "numtrans/numeric_value.hpp"

#include <algorithm>
#include <cassert>

#include "numtrans/errors.hpp"

namespace numtrans {

namespace {

// Unsigned decimal string arithmetic. Operands are plain digit strings,
// MSD first, possibly with leading zeros; results may carry leading zeros
// (normalize() strips them).

int compare_magnitude(const std::string& a, const std::string& b) {
  std::size_t ia = a.find_first_not_of('0');
  std::size_t ib = b.find_first_not_of('0');
  std::size_t la = ia == std::string::npos ? 0 : a.size() - ia;
  std::size_t lb = ib == std::string::npos ? 0 : b.size() - ib;
  if (la != lb) return la < lb ? -1 : 1;
  if (la == 0) return 0;
  int c = a.compare(ia, la, b, ib, lb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string add_magnitude(const std::string& a, const std::string& b) {
  std::string out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  int carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    int da = i < a.size() ? a[a.size() - 1 - i] - '0' : 0;
    int db = i < b.size() ? b[b.size() - 1 - i] - '0' : 0;
    int s = da + db + carry;
    out.push_back(static_cast<char>('0' + s % 10));
    carry = s / 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Requires a >= b.
std::string sub_magnitude(const std::string& a, const std::string& b) {
  std::string out;
  out.reserve(a.size());
  int borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int da = a[a.size() - 1 - i] - '0';
    int db = i < b.size() ? b[b.size() - 1 - i] - '0' : 0;
    int d = da - db - borrow;
    if (d < 0) {
      d += 10;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<char>('0' + d));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

void NumericValue::normalize() {
  std::size_t first = digits_.find_first_not_of('0');
  if (first == std::string::npos) {
    negative_ = false;
    digits_ = "0";
    exponent_ = 0;
    return;
  }
  digits_.erase(0, first);
  std::size_t last = digits_.find_last_not_of('0');
  std::size_t trailing = digits_.size() - 1 - last;
  if (trailing > 0) {
    digits_.erase(last + 1);
    exponent_ += static_cast<int>(trailing);
  }
}

NumericValue NumericValue::from_parts(bool negative, std::string digits,
                                      int exponent) {
  if (digits.empty()) throw ParseError("empty digit string", 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9')
      throw ParseError("invalid digit", i);
  }
  NumericValue v;
  v.negative_ = negative;
  v.digits_ = std::move(digits);
  v.exponent_ = exponent;
  v.normalize();
  return v;
}

NumericValue NumericValue::from_int(long long value) {
  bool neg = value < 0;
  unsigned long long mag =
      neg ? (~static_cast<unsigned long long>(value) + 1ull)
          : static_cast<unsigned long long>(value);
  return from_parts(neg, std::to_string(mag), 0);
}

NumericValue NumericValue::from_decimal_string(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_digits;
  std::size_t group_len = 0;
  bool saw_comma = false;
  bool first_group_done = false;
  std::size_t start = i;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      int_digits.push_back(ch);
      ++group_len;
      if (saw_comma && group_len > 3)
        throw ParseError("comma group longer than 3 digits", i);
      if (!saw_comma && first_group_done)
        throw ParseError("unexpected digit", i);
    } else if (ch == ',') {
      if (group_len == 0 || (saw_comma && group_len != 3) || group_len > 3)
        throw ParseError("misplaced grouping comma", i);
      saw_comma = true;
      group_len = 0;
    } else {
      break;
    }
  }
  if (saw_comma && group_len != 3)
    throw ParseError("misplaced grouping comma", i == 0 ? 0 : i - 1);
  if (int_digits.empty()) throw ParseError("expected digits", start);
  std::string frac_digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      frac_digits.push_back(text[i]);
      ++i;
    }
    if (frac_digits.empty())
      throw ParseError("expected digits after decimal point", frac_start);
  }
  if (i != text.size()) throw ParseError("trailing characters", i);
  return from_parts(negative, int_digits + frac_digits,
                    -static_cast<int>(frac_digits.size()));
}

NumericValue NumericValue::scaled(int power) const {
  if (is_zero()) return NumericValue();
  NumericValue v = *this;
  v.exponent_ += power;
  return v;
}

NumericValue NumericValue::negated() const {
  if (is_zero()) return NumericValue();
  NumericValue v = *this;
  v.negative_ = !v.negative_;
  return v;
}

NumericValue NumericValue::abs() const {
  NumericValue v = *this;
  v.negative_ = false;
  return v;
}

NumericValue NumericValue::plus(const NumericValue& other) const {
  int e = std::min(exponent_, other.exponent_);
  std::string a = digits_ + std::string(exponent_ - e, '0');
  std::string b = other.digits_ + std::string(other.exponent_ - e, '0');
  if (negative_ == other.negative_)
    return from_parts(negative_, add_magnitude(a, b), e);
  int cmp = compare_magnitude(a, b);
  if (cmp == 0) return NumericValue();
  if (cmp > 0) return from_parts(negative_, sub_magnitude(a, b), e);
  return from_parts(other.negative_, sub_magnitude(b, a), e);
}

std::strong_ordering NumericValue::compare(const NumericValue& a,
                                           const NumericValue& b) {
  if (a.negative_ != b.negative_)
    return a.negative_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  int e = std::min(a.exponent_, b.exponent_);
  std::string da = a.digits_ + std::string(a.exponent_ - e, '0');
  std::string db = b.digits_ + std::string(b.exponent_ - e, '0');
  int cmp = compare_magnitude(da, db);
  if (a.negative_) cmp = -cmp;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string NumericValue::to_plain_string() const {
  std::string out;
  if (negative_) out.push_back('-');
  if (exponent_ >= 0) {
    out += digits_;
    out.append(static_cast<std::size_t>(exponent_), '0');
    return out;
  }
  std::size_t frac = static_cast<std::size_t>(-exponent_);
  if (digits_.size() > frac) {
    out += digits_.substr(0, digits_.size() - frac);
    out.push_back('.');
    out += digits_.substr(digits_.size() - frac);
  } else {
    out += "0.";
    out.append(frac - digits_.size(), '0');
    out += digits_;
  }
  return out;
}

std::string NumericValue::integer_digit_string() const {
  assert(is_integer());
  return digits_ + std::string(static_cast<std::size_t>(exponent_), '0');
}

}  // namespace numtrans

#include "scan_common.hpp"

namespace numtrans::detail {

std::size_t skip_spaces(const std::u32string& s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == U' ' || s[pos] == U'\t')) ++pos;
  return pos;
}

NumericValue pow10(int k) {
  return NumericValue::from_parts(false, "1", k);
}

std::optional<DigitRun> lex_digit_run(const std::u32string& s,
                                      std::size_t pos) {
  if (pos >= s.size() || !is_ascii_digit(s[pos])) return std::nullopt;
  std::size_t i = pos;
  DigitRun run;
  while (i < s.size() && is_ascii_digit(s[i])) {
    run.digits.push_back(static_cast<char>(s[i]));
    ++i;
  }
  std::size_t first_group = i - pos;
  if (first_group <= 3) {
    while (i + 3 < s.size() && s[i] == U',' && is_ascii_digit(s[i + 1]) &&
           is_ascii_digit(s[i + 2]) && is_ascii_digit(s[i + 3]) &&
           (i + 4 >= s.size() || !is_ascii_digit(s[i + 4]))) {
      run.has_comma = true;
      run.digits.push_back(static_cast<char>(s[i + 1]));
      run.digits.push_back(static_cast<char>(s[i + 2]));
      run.digits.push_back(static_cast<char>(s[i + 3]));
      i += 4;
    }
  }
  run.int_len = run.digits.size();
  if (run.digits.size() > 1 && run.digits[0] == '0') return std::nullopt;
  if (i + 1 < s.size() && s[i] == U'.' && is_ascii_digit(s[i + 1])) {
    run.has_point = true;
    ++i;
    while (i < s.size() && is_ascii_digit(s[i])) {
      run.digits.push_back(static_cast<char>(s[i]));
      ++run.frac_len;
      ++i;
    }
  }
  run.len = i - pos;
  run.value = NumericValue::from_parts(false, run.digits, -run.frac_len);
  return run;
}

std::optional<Match> match_number_string(const std::u32string& s,
                                         std::size_t pos, bool scan) {
  if (pos >= s.size() || !is_ascii_digit(s[pos])) return std::nullopt;
  std::size_t i = pos;
  while (i < s.size() && is_ascii_digit(s[i])) ++i;
  bool leading_zero = s[pos] == U'0' && i - pos > 1;

  std::size_t end = i;
  std::size_t groups = 1;
  bool group_leading_zero = leading_zero;
  if (leading_zero && i < s.size() && s[i] == U',') {
    // 00,326,264 style: a leading-zero run extends through commas opaquely
    while (i + 1 < s.size() && s[i] == U',' && is_ascii_digit(s[i + 1])) {
      ++i;
      while (i < s.size() && is_ascii_digit(s[i])) ++i;
    }
    end = i;
  } else {
    while (i + 1 < s.size() && s[i] == U'-' && is_ascii_digit(s[i + 1])) {
      ++i;
      std::size_t b = i;
      while (i < s.size() && is_ascii_digit(s[i])) ++i;
      if (i - b > 1 && s[b] == U'0') group_leading_zero = true;
      ++groups;
    }
    if (groups > 1) {
      if (!group_leading_zero && groups < 3) return std::nullopt;
      end = i;
    }
  }

  bool opaque = leading_zero || group_leading_zero ||
                (groups >= 3 && end - pos > 0) ||
                (scan && groups == 1 && end - pos >= 6);
  if (!opaque) return std::nullopt;

  std::string literal;
  literal.reserve(end - pos);
  for (std::size_t k = pos; k < end; ++k)
    literal.push_back(static_cast<char>(s[k]));
  Match m;
  m.len = end - pos;
  m.canonical = CanonicalNumeral::number_string(std::move(literal));
  m.priority = 0;
  return m;
}

}  // namespace numtrans::detail

#include "numtrans/parse_zh.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <utility>

#include "numtrans/errors.hpp"
#include "numtrans/text.hpp"
#include "scan_common.hpp"

namespace numtrans {
namespace {

using detail::DigitRun;
using detail::Match;
using detail::lex_digit_run;
using detail::match_number_string;
using detail::pow10;
using detail::skip_spaces;

int zh_digit(char32_t cp) {
  switch (cp) {
    case U'零': case U'〇': return 0;
    case U'一': case U'壹': return 1;
    case U'二': case U'贰': case U'两': case U'兩': return 2;
    case U'三': case U'叁': return 3;
    case U'四': case U'肆': return 4;
    case U'五': case U'伍': return 5;
    case U'六': case U'陆': return 6;
    case U'七': case U'柒': return 7;
    case U'八': case U'捌': return 8;
    case U'九': case U'玖': return 9;
    default: return -1;
  }
}

bool is_liang(char32_t cp) { return cp == U'两' || cp == U'兩'; }

// 十/百/千 as decimal places 1..3.
int zh_place(char32_t cp) {
  switch (cp) {
    case U'十': case U'拾': return 1;
    case U'百': case U'佰': return 2;
    case U'千': case U'仟': return 3;
    default: return 0;
  }
}

// 万 / 亿 / 万亿 with traditional aliases. 兆 is not supported.
struct UnitTok {
  int exp = 0;
  std::size_t len = 0;
};
std::optional<UnitTok> lex_unit(const std::u32string& s, std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;
  char32_t c = s[pos];
  if (c == U'万' || c == U'萬') {
    if (pos + 1 < s.size() && (s[pos + 1] == U'亿' || s[pos + 1] == U'億'))
      return UnitTok{12, 2};
    return UnitTok{4, 1};
  }
  if (c == U'亿' || c == U'億') return UnitTok{8, 1};
  return std::nullopt;
}

// A group below 万: digit and place words with strictly decreasing places,
// Arabic digits accepted in digit slots (2千3百), 零 bridging gaps, leading
// 十 for 10..19. 两 is accepted before 千/百 and standalone, not before 十
// and not as a trailing ones digit.
struct Small {
  long long value = 0;
  std::size_t len = 0;
  int highest_place = 0;  // 3=千 2=百 1=十 0=bare digit
  bool used_place = false;
  bool single_digit = false;
};

std::optional<Small> parse_small(const std::u32string& s, std::size_t pos) {
  std::size_t i = pos;
  if (i >= s.size()) return std::nullopt;

  if (zh_digit(s[i]) == 0) {  // lone 零 is the number 0
    Small out;
    out.len = 1;
    out.single_digit = true;
    return out;
  }

  Small out;
  long long value = 0;
  int last_place = 4;

  while (i < s.size()) {
    char32_t c = s[i];
    std::size_t step = i;

    if (zh_digit(c) == 0) {  // gap marker; must be followed by a lower part
      if (out.len == 0 || last_place == 0) break;
      std::size_t j = i + 1;
      if (j >= s.size()) break;
      int d2 = zh_digit(s[j]);
      bool ok = d2 > 0 ||
                (is_ascii_digit(s[j]) && j + 1 < s.size() &&
                 zh_place(s[j + 1]) != 0);
      if (!ok) break;
      ++i;
      continue;
    }

    int d = -1;
    std::size_t dlen = 0;
    if (zh_digit(c) > 0) {
      d = zh_digit(c);
      dlen = 1;
    } else if (is_ascii_digit(c) && c != U'0' && i + 1 < s.size() &&
               zh_place(s[i + 1]) != 0) {
      d = static_cast<int>(c - U'0');
      dlen = 1;
    }

    if (d > 0) {
      int place = i + dlen < s.size() ? zh_place(s[i + dlen]) : 0;
      if (place > 0) {
        if (place >= last_place) break;
        if (is_liang(c) && place < 2) break;  // 两十 is not a form
        value += d * (place == 1 ? 10 : place == 2 ? 100 : 1000);
        last_place = place;
        out.used_place = true;
        out.highest_place = std::max(out.highest_place, place);
        i += dlen + 1;
        out.len = i - pos;
        continue;
      }
      // ones digit, or a standalone digit word
      if (!is_ascii_digit(c)) {
        if (out.len == 0) {
          out.value = d;
          out.len = 1;
          out.single_digit = true;
          return out;
        }
        if (is_liang(c)) break;
        if (last_place == 0) break;
        value += d;
        last_place = 0;
        i += 1;
        out.len = i - pos;
      }
      break;
    }

    if (zh_place(c) == 1 && out.len == 0) {  // leading 十: 十一 = 11
      value += 10;
      last_place = 1;
      out.used_place = true;
      out.highest_place = 1;
      ++i;
      out.len = i - pos;
      continue;
    }
    (void)step;
    break;
  }

  if (out.len == 0) return std::nullopt;
  out.value = value;
  return out;
}

// One mantissa segment: an Arabic run or a word group, optionally with a
// fractional part (ASCII point inside the run, or 点 followed by digits).
struct Segment {
  NumericValue value;
  std::size_t len = 0;
  bool has_fraction = false;
  bool arabic = false;
  bool comma = false;
  std::size_t int_len = 0;
  int highest_place = 0;
  bool used_place = false;
  bool single_digit = false;
};

// Fraction digits after 点: word digits (零..九, not 两) or Arabic digits.
std::optional<std::pair<std::string, std::size_t>> lex_point_fraction(
    const std::u32string& s, std::size_t pos) {
  if (pos >= s.size() || s[pos] != U'点') return std::nullopt;
  std::size_t i = pos + 1;
  std::string digits;
  while (i < s.size()) {
    char32_t c = s[i];
    if (is_ascii_digit(c)) {
      digits.push_back(static_cast<char>(c));
    } else if (zh_digit(c) >= 0 && !is_liang(c)) {
      digits.push_back(static_cast<char>('0' + zh_digit(c)));
    } else {
      break;
    }
    ++i;
  }
  if (digits.empty()) return std::nullopt;
  return std::make_pair(digits, i - pos);
}

std::optional<Segment> parse_segment(const std::u32string& s,
                                     std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;

  if (is_ascii_digit(s[pos])) {
    bool mixed_small = s[pos] != U'0' && pos + 1 < s.size() &&
                       zh_place(s[pos + 1]) != 0;
    if (!mixed_small) {
      auto run = lex_digit_run(s, pos);
      if (!run) return std::nullopt;
      Segment seg;
      seg.value = run->value;
      seg.len = run->len;
      seg.has_fraction = run->has_point;
      seg.arabic = true;
      seg.comma = run->has_comma;
      seg.int_len = run->int_len;
      seg.single_digit = run->int_len == 1 && !run->has_point;
      if (!seg.has_fraction) {
        if (auto frac = lex_point_fraction(s, pos + seg.len)) {
          seg.value = NumericValue::from_parts(
              false, seg.value.integer_digit_string() + frac->first,
              -static_cast<int>(frac->first.size()));
          seg.len += frac->second;
          seg.has_fraction = true;
          seg.single_digit = false;
        }
      }
      return seg;
    }
  }

  auto small = parse_small(s, pos);
  if (!small) return std::nullopt;
  Segment seg;
  seg.value = NumericValue::from_int(small->value);
  seg.len = small->len;
  seg.highest_place = small->highest_place;
  seg.used_place = small->used_place;
  seg.single_digit = small->single_digit;
  if (auto frac = lex_point_fraction(s, pos + seg.len)) {
    seg.value = NumericValue::from_parts(
        false, std::to_string(small->value) + frac->first,
        -static_cast<int>(frac->first.size()));
    seg.len += frac->second;
    seg.has_fraction = true;
    seg.single_digit = false;
  }
  return seg;
}

// A full unsigned value: segments times strictly decreasing units, an
// optional trailing group, fractions only on the leading segment. A bare
// digit after a unit (三万五) is reported as ambiguous instead of guessed.
struct ZhValue {
  NumericValue value;      // safe reading
  std::size_t len = 0;     // safe length
  bool used_unit = false;
  bool arabic_simple = false;  // single Arabic segment, no unit
  bool comma = false;
  std::size_t int_len = 0;
  bool ambiguous = false;
  std::size_t amb_len = 0;
  NumericValue amb_literal;    // 三万五 read as 30005
  NumericValue amb_shorthand;  // 三万五 read as 35000
};

std::optional<ZhValue> parse_value(const std::u32string& s, std::size_t pos) {
  std::size_t i = pos;
  NumericValue total;
  int prev_exp = INT_MAX;
  bool first = true;
  ZhValue out;

  while (true) {
    std::size_t j = i;
    bool zero_sep = false;
    if (!first && j < s.size() && zh_digit(s[j]) == 0) {
      zero_sep = true;
      ++j;
    }
    auto seg = parse_segment(s, j);
    if (!seg) break;

    auto unit = lex_unit(s, j + seg->len);
    if (unit) {
      if (!first) {
        if (unit->exp >= prev_exp) break;
        if (seg->has_fraction) break;
        if (seg->value.scaled(unit->exp) >= pow10(prev_exp)) break;
      }
      total = total.plus(seg->value.scaled(unit->exp));
      prev_exp = unit->exp;
      out.used_unit = true;
      i = j + seg->len + unit->len;
      out.len = i - pos;
      first = false;
      if (seg->has_fraction) break;  // 28.2亿 ends the number
      continue;
    }

    if (first) {
      total = seg->value;
      i = j + seg->len;
      out.len = i - pos;
      out.arabic_simple = seg->arabic;
      out.comma = seg->comma;
      out.int_len = seg->int_len;
      first = false;
      break;
    }

    // trailing group after a unit
    if (seg->has_fraction) break;
    if (zero_sep) {
      if (seg->value >= pow10(prev_exp)) break;
      total = total.plus(seg->value);
      out.len = j + seg->len - pos;
      break;
    }
    if (seg->arabic) {
      if (seg->int_len == static_cast<std::size_t>(prev_exp)) {
        total = total.plus(seg->value);  // 3万5000
        out.len = j + seg->len - pos;
      } else if (seg->single_digit) {
        out.ambiguous = true;  // 3万5
        out.amb_len = j + seg->len - pos;
        out.amb_literal = total.plus(seg->value);
        out.amb_shorthand = total.plus(seg->value.scaled(prev_exp - 1));
      }
      break;
    }
    if (seg->used_place) {
      if (seg->highest_place == prev_exp - 1) {  // 三万五千, no gap
        total = total.plus(seg->value);
        out.len = j + seg->len - pos;
      }
      break;
    }
    if (seg->single_digit) {  // 三万五
      out.ambiguous = true;
      out.amb_len = j + seg->len - pos;
      out.amb_literal = total.plus(seg->value);
      out.amb_shorthand = total.plus(seg->value.scaled(prev_exp - 1));
    }
    break;
  }

  if (out.len == 0 && !out.ambiguous) return std::nullopt;
  out.value = total;
  return out;
}

// Side of a range/ratio/fraction: optional sign, then a value.
struct Side {
  NumericValue value;
  std::size_t len = 0;
  bool used_unit = false;
};
std::optional<Side> parse_side(const std::u32string& s, std::size_t pos) {
  std::size_t i = pos;
  bool neg = false;
  if (i < s.size() && (s[i] == U'负' || s[i] == U'負')) {
    neg = true;
    ++i;
  } else if (i < s.size() && s[i] == U'-' && i + 1 < s.size() &&
             is_ascii_digit(s[i + 1])) {
    neg = true;
    ++i;
  }
  auto v = parse_value(s, i);
  if (!v || v->len == 0) return std::nullopt;
  Side side;
  side.value = neg ? v->value.negated() : v->value;
  side.len = i + v->len - pos;
  side.used_unit = v->used_unit;
  return side;
}

bool is_mul_op(char32_t c) {
  return c == U'x' || c == U'X' || c == U'×';  // ×
}

std::optional<Match> match_range(const std::u32string& s, std::size_t pos) {
  auto left = parse_side(s, pos);
  if (!left) return std::nullopt;
  std::size_t i = skip_spaces(s, pos + left->len);
  if (i >= s.size()) return std::nullopt;
  char32_t c = s[i];
  if (c != U'到' && c != U'至' && c != U'~' && c != U'-') return std::nullopt;
  std::size_t j = skip_spaces(s, i + 1);
  auto right = parse_side(s, j);
  if (!right) return std::nullopt;
  Match m;
  m.len = j + right->len - pos;
  m.canonical = CanonicalNumeral::range(left->value, right->value);
  m.priority = 1;
  return m;
}

std::optional<Match> match_fraction(const std::u32string& s,
                                    std::size_t pos) {
  if (pos < s.size() && s[pos] == U'半') {
    Match m;
    m.len = 1;
    m.canonical = CanonicalNumeral::fraction(NumericValue::from_int(1),
                                             NumericValue::from_int(2));
    m.priority = 1;
    return m;
  }
  if (pos + 1 < s.size() && zh_digit(s[pos]) == 1 && s[pos + 1] == U'半') {
    Match m;
    m.len = 2;
    m.canonical = CanonicalNumeral::fraction(NumericValue::from_int(1),
                                             NumericValue::from_int(2));
    m.priority = 1;
    return m;
  }
  // numerator/denominator in digits
  if (pos < s.size() && is_ascii_digit(s[pos])) {
    auto numer = lex_digit_run(s, pos);
    if (numer && !numer->has_point && !numer->has_comma) {
      std::size_t sl = skip_spaces(s, pos + numer->len);
      if (sl < s.size() && s[sl] == U'/') {
        std::size_t j = skip_spaces(s, sl + 1);
        auto den = lex_digit_run(s, j);
        if (den && !den->has_point && !den->has_comma &&
            !den->value.is_zero()) {
          Match m;
          m.len = j + den->len - pos;
          m.canonical = CanonicalNumeral::fraction(numer->value, den->value);
          m.priority = 1;
          return m;
        }
      }
    }
  }
  // denominator 分之 numerator; a bare place/unit word may stand alone as
  // the denominator (百分之五十, 万分之一)
  NumericValue denom;
  std::size_t dlen = 0;
  if (pos < s.size()) {
    char32_t c = s[pos];
    if (zh_place(c) >= 2) {
      denom = pow10(zh_place(c));
      dlen = 1;
    } else if (auto unit = lex_unit(s, pos)) {
      denom = pow10(unit->exp);
      dlen = unit->len;
    }
  }
  if (dlen == 0) {
    auto d = parse_value(s, pos);
    if (!d || d->len == 0) return std::nullopt;
    denom = d->value;
    dlen = d->len;
  }
  std::size_t i = pos + dlen;
  if (i + 1 >= s.size() || s[i] != U'分' || s[i + 1] != U'之')
    return std::nullopt;
  auto numer = parse_value(s, i + 2);
  if (!numer || numer->len == 0) return std::nullopt;
  if (denom.is_zero()) return std::nullopt;
  Match m;
  m.len = i + 2 + numer->len - pos;
  m.canonical = CanonicalNumeral::fraction(numer->value, denom);
  m.priority = 1;
  return m;
}

std::optional<Match> match_ratio(const std::u32string& s, std::size_t pos) {
  auto left = parse_value(s, pos);
  if (!left || left->len == 0) return std::nullopt;
  std::size_t i = skip_spaces(s, pos + left->len);
  if (i >= s.size() || (s[i] != U'比' && s[i] != U':')) return std::nullopt;
  std::size_t j = skip_spaces(s, i + 1);
  auto right = parse_value(s, j);
  if (!right || right->len == 0) return std::nullopt;
  Match m;
  m.len = j + right->len - pos;
  m.canonical = CanonicalNumeral::ratio(left->value, right->value);
  m.priority = 1;
  return m;
}

std::optional<Match> match_formula(const std::u32string& s, std::size_t pos) {
  auto first = parse_value(s, pos);
  if (!first || first->len == 0) return std::nullopt;
  std::vector<NumericValue> operands{first->value};
  std::optional<FormulaOp> op;
  std::size_t end = pos + first->len;
  while (true) {
    std::size_t i = skip_spaces(s, end);
    if (i >= s.size()) break;
    FormulaOp this_op;
    if (s[i] == U'+') {
      this_op = FormulaOp::Add;
    } else if (is_mul_op(s[i]) || s[i] == U'*') {
      this_op = FormulaOp::Mul;
    } else {
      break;
    }
    if (op && *op != this_op) break;
    std::size_t j = skip_spaces(s, i + 1);
    auto next = parse_value(s, j);
    if (!next || next->len == 0) break;
    op = this_op;
    operands.push_back(next->value);
    end = j + next->len;
  }
  if (!op) return std::nullopt;
  Match m;
  m.len = end - pos;
  m.canonical = CanonicalNumeral::formula(*op, std::move(operands));
  m.priority = 1;
  return m;
}

std::optional<Match> match_ordinal(const std::u32string& s, std::size_t pos) {
  if (pos >= s.size() || s[pos] != U'第') return std::nullopt;
  auto v = parse_value(s, pos + 1);
  if (!v || v->len == 0) return std::nullopt;
  if (!v->value.is_integer()) return std::nullopt;
  Match m;
  m.len = 1 + v->len;
  m.canonical = CanonicalNumeral::ordinal(v->value);
  m.priority = 2;
  return m;
}

std::optional<Match> match_negative(const std::u32string& s,
                                    std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;
  std::size_t i = pos;
  if (s[i] == U'负' || s[i] == U'負') {
    ++i;
  } else if (s[i] == U'-' && i + 1 < s.size() && is_ascii_digit(s[i + 1])) {
    ++i;
  } else {
    return std::nullopt;
  }
  auto v = parse_value(s, i);
  if (!v || v->len == 0) return std::nullopt;
  Match m;
  m.len = i + v->len - pos;
  m.canonical = CanonicalNumeral::scalar(NumericType::NegativeNumber,
                                         v->value.negated());
  m.priority = 2;
  return m;
}

std::optional<Match> match_special(const std::u32string& s, std::size_t pos) {
  auto v = parse_value(s, pos);
  if (!v || v->len == 0) return std::nullopt;
  std::size_t i = pos + v->len;
  if (i < s.size() && s[i] == U'倍') {
    Match m;
    m.len = i + 1 - pos;
    m.canonical = CanonicalNumeral::special(Measure::Fold, v->value);
    m.priority = 2;
    return m;
  }
  if (i + 1 < s.size() && s[i] == U'像' && s[i + 1] == U'素') {
    Match m;
    m.len = i + 2 - pos;
    m.canonical =
        CanonicalNumeral::special(Measure::Megapixel, v->value.scaled(-6));
    m.priority = 2;
    return m;
  }
  return std::nullopt;
}

std::optional<Match> match_scalar(const std::u32string& s, std::size_t pos,
                                  bool scan) {
  auto v = parse_value(s, pos);
  if (!v) return std::nullopt;
  if (v->len == 0 && !(v->ambiguous && !scan)) return std::nullopt;
  Match m;
  m.len = v->len;
  m.canonical = CanonicalNumeral::scalar(
      v->used_unit ? NumericType::LargeUnit : NumericType::Decimal, v->value);
  m.priority = v->used_unit ? 3 : 4;
  if (v->ambiguous) {
    m.ambiguous = true;
    m.amb_len = v->amb_len;
    m.candidates = {v->amb_literal.to_plain_string(),
                    v->amb_shorthand.to_plain_string()};
  }
  return m;
}

void consider(std::optional<Match> m, std::optional<Match>& best) {
  if (!m || m->len == 0) {
    if (m && m->ambiguous && (!best || best->len == 0)) best = std::move(m);
    return;
  }
  if (!best || best->len == 0 || m->len > best->len ||
      (m->len == best->len && m->priority < best->priority))
    best = std::move(m);
}

std::optional<Match> best_match(const std::u32string& s, std::size_t pos,
                                bool scan) {
  std::optional<Match> best;
  consider(match_number_string(s, pos, scan), best);
  consider(match_range(s, pos), best);
  consider(match_fraction(s, pos), best);
  consider(match_ratio(s, pos), best);
  consider(match_formula(s, pos), best);
  consider(match_ordinal(s, pos), best);
  consider(match_negative(s, pos), best);
  consider(match_special(s, pos), best);
  consider(match_scalar(s, pos, scan), best);
  return best;
}

bool is_han(char32_t cp) { return cp >= 0x4E00 && cp <= 0x9FFF; }

bool zh_start_cp(char32_t c) {
  return is_ascii_digit(c) || zh_digit(c) >= 0 || zh_place(c) == 1 ||
         c == U'第' || c == U'负' || c == U'負' || c == U'半' || c == U'-';
}

// Single word-character matches that are almost always prose, not numbers.
bool suppressed_single(const std::u32string& s, std::size_t pos,
                       const Match& m) {
  if (m.len != 1) return false;
  char32_t c = s[pos];
  if (is_ascii_digit(c)) return false;
  char32_t n = pos + 1 < s.size() ? s[pos + 1] : 0;
  if ((c == U'零' || c == U'〇') && is_han(n)) return true;
  static const std::pair<char32_t, char32_t> kStop[] = {
      {U'十', U'分'}, {U'一', U'起'}, {U'一', U'些'}, {U'一', U'直'},
      {U'一', U'般'}, {U'一', U'样'}, {U'一', U'定'}, {U'一', U'旦'},
      {U'一', U'切'}, {U'一', U'致'}, {U'一', U'再'}, {U'一', U'番'},
      {U'一', U'味'}, {U'一', U'点'}, {U'一', U'边'}, {U'一', U'面'},
      {U'一', U'同'}, {U'一', U'体'}, {U'一', U'时'}, {U'一', U'下'},
  };
  for (auto [a, b] : kStop)
    if (c == a && n == b) return true;
  return false;
}

bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

}  // namespace

CanonicalNumeral parse_zh_number(std::string_view phrase) {
  Utf8Text t = Utf8Text::decode(phrase);
  std::size_t b = 0, e = t.size();
  while (b < e && is_ascii_space(t.folded[b])) ++b;
  while (e > b && is_ascii_space(t.folded[e - 1])) --e;
  if (b == e) throw ParseError("empty numeric phrase", 0);
  auto m = best_match(t.folded, b, /*scan=*/false);
  if (!m || (m->len == 0 && !m->ambiguous))
    throw ParseError("not a numeric phrase", t.offsets[b]);
  if (m->ambiguous && b + m->amb_len == e)
    throw ParseError("ambiguous numeric phrase", t.offsets[b + m->len],
                     m->candidates);
  if (b + m->len != e)
    throw ParseError("unexpected trailing text", t.offsets[b + m->len]);
  return m->canonical;
}

std::vector<SpannedExpression> scan_zh(std::string_view sentence) {
  Utf8Text t = Utf8Text::decode(sentence);
  std::vector<SpannedExpression> out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (!zh_start_cp(t.folded[pos])) {
      ++pos;
      continue;
    }
    auto m = best_match(t.folded, pos, /*scan=*/true);
    if (!m || m->len == 0 || suppressed_single(t.folded, pos, *m)) {
      ++pos;
      continue;
    }
    out.push_back(SpannedExpression{{pos, pos + m->len},
                                    t.slice(pos, pos + m->len),
                                    std::move(m->canonical)});
    pos += m->len;
  }
  return out;
}

}  // namespace numtrans

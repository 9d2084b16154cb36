#include "numtrans/format.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "numtrans/errors.hpp"
#include "numtrans/parse_en.hpp"
#include "numtrans/text.hpp"

namespace numtrans {
namespace {

const std::pair<int, const char*> kZhUnits[] = {
    {12, "万亿"}, {8, "亿"}, {4, "万"}};
const std::pair<int, const char*> kEnUnits[] = {
    {12, "trillion"}, {9, "billion"}, {6, "million"}, {3, "thousand"}};

const NumericValue kOne = NumericValue::from_int(1);

std::string plain(const NumericValue& v) { return v.to_plain_string(); }

std::string group_commas(const std::string& digits) {
  std::string out;
  std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

// signed comma-grouped rendering; integers only
std::string grouped(const NumericValue& v) {
  std::string s = v.negative() ? "-" : "";
  return s + group_commas(v.abs().integer_digit_string());
}

bool fits_words(const NumericValue& v, Lang lang) {
  if (!v.is_integer()) return false;
  std::size_t cap = lang == Lang::ZH ? 16 : 15;
  return v.abs().integer_digit_string().size() <= cap;
}

// low-to-high base-10^k sections of an integer digit string
std::vector<long long> split_sections(const std::string& digits, int width) {
  std::vector<long long> sec;
  int i = static_cast<int>(digits.size());
  while (i > 0) {
    int b = std::max(0, i - width);
    sec.push_back(std::stoll(digits.substr(b, i - b)));
    i = b;
  }
  return sec;
}

const char* kZhDigit[] = {"零", "一", "二", "三", "四",
                          "五", "六", "七", "八", "九"};

// 1..9999 in place words; `leading` enables the bare-十 idiom (十一, not
// 一十一) at the front of a whole number
std::string zh_group_words(long long g, bool leading) {
  std::string s;
  bool started = false, gap = false;
  long long d3 = g / 1000, d2 = g / 100 % 10, d1 = g / 10 % 10, d0 = g % 10;
  auto emit = [&](long long d, const char* place, bool tens) {
    if (d == 0) {
      if (started) gap = true;
      return;
    }
    if (gap) {
      s += "零";
      gap = false;
    }
    if (tens && d == 1 && !started && leading) {
      s += "十";
    } else {
      s += kZhDigit[d];
      if (place != nullptr) s += place;
    }
    started = true;
  };
  emit(d3, "千", false);
  emit(d2, "百", false);
  emit(d1, "十", true);
  emit(d0, nullptr, false);
  return s;
}

std::string zh_sectioned(const std::string& digits,
                         const std::function<std::string(long long, bool)>&
                             render_section) {
  static const char* units[] = {"", "万", "亿", "万亿"};
  std::vector<long long> sec = split_sections(digits, 4);
  std::string out;
  bool pending_zero = false;
  for (int si = static_cast<int>(sec.size()) - 1; si >= 0; --si) {
    long long g = sec[si];
    if (g == 0) {
      if (!out.empty()) pending_zero = true;
      continue;
    }
    if (!out.empty() && (pending_zero || g < 1000)) out += "零";
    pending_zero = false;
    out += render_section(g, out.empty());
    out += units[si];
  }
  return out;
}

// per-digit reading of a fraction part: "525" -> 五二五
std::string zh_frac_words(const std::string& frac) {
  std::string s;
  for (char c : frac) s += kZhDigit[c - '0'];
  return s;
}

// words for a non-negative value with a decimal point: 28.2 -> 二十八点二
std::string zh_point_words(const NumericValue& v) {
  std::string p = plain(v);
  std::size_t dot = p.find('.');
  std::string int_part = dot == std::string::npos ? p : p.substr(0, dot);
  std::string s = zh_words_integer(NumericValue::from_decimal_string(int_part));
  if (dot != std::string::npos) {
    s += "点";
    s += zh_frac_words(p.substr(dot + 1));
  }
  return s;
}

// 二 -> 两 where idiomatic: before 千/百/万/亿/倍 or standing alone.
// Empty when nothing changes.
std::string liang_variant(const std::string& words) {
  std::u32string s = decode_utf8(words);
  bool changed = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != U'二') continue;
    bool eligible = s.size() == 1;
    if (i + 1 < s.size()) {
      char32_t n = s[i + 1];
      eligible = n == U'千' || n == U'百' || n == U'万' || n == U'亿' ||
                 n == U'倍';
    }
    if (eligible) {
      s[i] = U'两';
      changed = true;
    }
  }
  return changed ? encode_utf8(s) : std::string();
}

const char* kEnOnes[] = {"zero", "one", "two",   "three", "four",
                         "five", "six", "seven", "eight", "nine"};
const char* kEnTeens[] = {"ten",      "eleven",  "twelve",   "thirteen",
                          "fourteen", "fifteen", "sixteen",  "seventeen",
                          "eighteen", "nineteen"};
const char* kEnTens[] = {"",      "",      "twenty", "thirty", "forty",
                         "fifty", "sixty", "seventy", "eighty", "ninety"};

std::string en_tens_words(long long t) {
  if (t < 10) return kEnOnes[t];
  if (t < 20) return kEnTeens[t - 10];
  std::string s = kEnTens[t / 10];
  if (t % 10) {
    s += "-";
    s += kEnOnes[t % 10];
  }
  return s;
}

std::string en_group_words(long long g, bool with_and) {
  std::string s;
  if (g >= 100) {
    s = std::string(kEnOnes[g / 100]) + " hundred";
    if (g % 100) s += (with_and ? " and " : " ") + en_tens_words(g % 100);
    return s;
  }
  return en_tens_words(g);
}

std::map<std::string, std::string> en_cardinal_to_ordinal() {
  return {{"one", "first"},       {"two", "second"},
          {"three", "third"},     {"four", "fourth"},
          {"five", "fifth"},      {"six", "sixth"},
          {"seven", "seventh"},   {"eight", "eighth"},
          {"nine", "ninth"},      {"ten", "tenth"},
          {"eleven", "eleventh"}, {"twelve", "twelfth"},
          {"thirteen", "thirteenth"}, {"fourteen", "fourteenth"},
          {"fifteen", "fifteenth"},   {"sixteen", "sixteenth"},
          {"seventeen", "seventeenth"}, {"eighteen", "eighteenth"},
          {"nineteen", "nineteenth"},   {"twenty", "twentieth"},
          {"thirty", "thirtieth"},      {"forty", "fortieth"},
          {"fifty", "fiftieth"},        {"sixty", "sixtieth"},
          {"seventy", "seventieth"},    {"eighty", "eightieth"},
          {"ninety", "ninetieth"},      {"hundred", "hundredth"},
          {"thousand", "thousandth"},   {"million", "millionth"},
          {"billion", "billionth"},     {"trillion", "trillionth"}};
}

// rewrite the final word of a cardinal phrase as an ordinal; empty on
// unknown vocabulary
std::string en_ordinalize(const std::string& words) {
  std::size_t cut = words.find_last_of(" -");
  std::size_t start = cut == std::string::npos ? 0 : cut + 1;
  static const std::map<std::string, std::string> k = en_cardinal_to_ordinal();
  auto it = k.find(words.substr(start));
  if (it == k.end()) return std::string();
  return words.substr(0, start) + it->second;
}

std::string en_ordinal_suffix(const std::string& digits) {
  int last = digits.back() - '0';
  int last2 = digits.size() >= 2
                  ? (digits[digits.size() - 2] - '0') * 10 + last
                  : last;
  if (last2 >= 11 && last2 <= 13) return "th";
  if (last == 1) return "st";
  if (last == 2) return "nd";
  if (last == 3) return "rd";
  return "th";
}

// integer rendering with an extra ".0", accepted by both parsers
std::string one_decimal(const NumericValue& v) {
  return plain(v) + ".0";
}

bool mantissa_ok(const NumericValue& m) {
  // at most 4 decimal places and |m| >= 0.1
  return m.fraction_digits() <= 4 && m.abs().scaled(1) >= kOne;
}

void add(std::vector<std::string>& cand, std::string s) {
  if (!s.empty()) cand.push_back(std::move(s));
}

// digit, grouped, unit, word, and mixed-section forms of one scalar value
void scalar_form_candidates(const NumericValue& v, Lang lang,
                            std::vector<std::string>& cand) {
  add(cand, plain(v));
  if (v.is_integer() && v.abs().integer_digit_string().size() >= 5)
    add(cand, grouped(v));
  if (!v.is_zero()) {
    auto units = lang == Lang::ZH ? std::vector<std::pair<int, const char*>>(
                                        std::begin(kZhUnits),
                                        std::end(kZhUnits))
                                  : std::vector<std::pair<int, const char*>>(
                                        std::begin(kEnUnits),
                                        std::end(kEnUnits));
    for (auto& [exp, unit] : units) {
      NumericValue m = v.scaled(-exp);
      if (!mantissa_ok(m)) continue;
      if (lang == Lang::EN) {
        add(cand, plain(m) + " " + unit);
      } else {
        add(cand, plain(m) + unit);
        if (!m.negative() && m.abs() >= kOne) {
          std::string w =
              m.is_integer() && fits_words(m, lang)
                  ? zh_words_integer(m)
                  : (m.is_integer() ? std::string() : zh_point_words(m));
          if (!w.empty()) {
            add(cand, w + unit);
            std::string lv = liang_variant(w);
            if (!lv.empty()) add(cand, lv + unit);
          }
        }
      }
    }
  }
  if (!v.negative() && fits_words(v, lang)) {
    if (lang == Lang::ZH) {
      std::string w = zh_words_integer(v);
      add(cand, w);
      add(cand, liang_variant(w));
    } else {
      add(cand, en_words_integer(v, false));
      add(cand, en_words_integer(v, true));
    }
  }
  if (lang == Lang::ZH && !v.negative() && !v.is_integer())
    add(cand, zh_point_words(v));
  if (lang == Lang::ZH && !v.negative() && v.is_integer() &&
      fits_words(v, lang) && v >= NumericValue::from_int(10000)) {
    std::string ds = v.integer_digit_string();
    add(cand, zh_sectioned(ds, [](long long g, bool) {
          if (g % 1000 == 0) return std::to_string(g / 1000) + "千";
          if (g < 1000 && g % 100 == 0) return std::to_string(g / 100) + "百";
          return std::to_string(g);
        }));
    add(cand, zh_sectioned(
                  ds, [](long long g, bool) { return std::to_string(g); }));
  }
}

std::string unit_form(const NumericValue& v, Lang lang) {
  if (v.is_zero()) return std::string();
  NumericValue a = v.abs();
  auto consider = [&](int exp, const char* unit) -> std::string {
    NumericValue m = a.scaled(-exp);
    if (m >= kOne && m.fraction_digits() <= 4) {
      std::string sign = v.negative() ? "-" : "";
      if (lang == Lang::EN) return sign + plain(m) + " " + unit;
      return sign + plain(m) + unit;
    }
    return std::string();
  };
  if (lang == Lang::ZH) {
    for (auto& [exp, unit] : kZhUnits) {
      std::string s = consider(exp, unit);
      if (!s.empty()) return s;
    }
  } else {
    for (auto& [exp, unit] : kEnUnits) {
      if (exp == 3) continue;  // thousands stay in digits
      std::string s = consider(exp, unit);
      if (!s.empty()) return s;
    }
  }
  return std::string();
}

std::string scalar_digits(const NumericValue& v, Lang lang) {
  if (lang == Lang::EN && v.is_integer() &&
      v.abs().integer_digit_string().size() >= 5)
    return grouped(v);
  return plain(v);
}

std::string zh_pixel_digits(const NumericValue& mp) {
  NumericValue pixels = mp.scaled(6);
  NumericValue m = pixels.scaled(-4);
  if (m.is_integer() && !m.is_zero()) return plain(m) + "万像素";
  return plain(pixels) + "像素";
}

}  // namespace

std::string zh_words_integer(const NumericValue& value) {
  assert(value.is_integer() && !value.negative());
  std::string ds = value.integer_digit_string();
  assert(ds.size() <= 16);
  if (ds == "0") return "零";
  return zh_sectioned(ds, [](long long g, bool leading) {
    return zh_group_words(g, leading);
  });
}

std::string en_words_integer(const NumericValue& value, bool with_and) {
  assert(value.is_integer() && !value.negative());
  std::string ds = value.integer_digit_string();
  assert(ds.size() <= 15);
  if (ds == "0") return "zero";
  static const char* units[] = {"", "thousand", "million", "billion",
                                "trillion"};
  std::vector<long long> sec = split_sections(ds, 3);
  int lowest = 0;
  while (sec[lowest] == 0) ++lowest;
  std::string out;
  for (int si = static_cast<int>(sec.size()) - 1; si >= 0; --si) {
    long long g = sec[si];
    if (g == 0) continue;
    if (!out.empty()) {
      if (with_and && si == 0 && g < 100)
        out += " and ";
      else
        out += " ";
    }
    out += en_group_words(g, with_and);
    if (si > 0) {
      out += " ";
      out += units[si];
    }
  }
  return out;
}

std::string render_digits(const CanonicalNumeral& c, Lang lang) {
  switch (c.type) {
    case NumericType::Decimal:
    case NumericType::LargeUnit:
      return scalar_digits(c.values[0], lang);
    case NumericType::NegativeNumber:
      return "-" + scalar_digits(c.values[0].abs(), lang);
    case NumericType::Range:
      if (c.values[0].negative() || c.values[1].negative()) {
        const char* sep = lang == Lang::ZH ? "到" : " to ";
        return plain(c.values[0]) + sep + plain(c.values[1]);
      }
      return plain(c.values[0]) + "-" + plain(c.values[1]);
    case NumericType::Ratio:
      return plain(c.values[0]) + ":" + plain(c.values[1]);
    case NumericType::Fraction:
      return plain(c.values[0]) + "/" + plain(c.values[1]);
    case NumericType::Ordinal: {
      std::string d = c.values[0].integer_digit_string();
      if (lang == Lang::ZH) return "第" + d;
      return d + en_ordinal_suffix(d);
    }
    case NumericType::NumberString:
      return c.literal;
    case NumericType::Formula:
      throw ParseError("formula has no digit rendering", 0);
    case NumericType::Special:
      if (*c.measure == Measure::Fold) {
        if (lang == Lang::ZH) return plain(c.values[0]) + "倍";
        return plain(c.values[0]) + "-fold";
      }
      if (lang == Lang::ZH) return zh_pixel_digits(c.values[0]);
      return plain(c.values[0]) +
             (c.values[0] == kOne ? " megapixel" : " megapixels");
  }
  throw ParseError("unknown numeric type", 0);
}

std::string render_large_unit(const CanonicalNumeral& c, Lang lang) {
  switch (c.type) {
    case NumericType::Decimal:
    case NumericType::LargeUnit:
    case NumericType::NegativeNumber: {
      std::string s = unit_form(c.values[0], lang);
      if (!s.empty()) return s;
      return render_digits(c, lang);
    }
    default:
      return render_digits(c, lang);
  }
}

std::set<std::string> render_forms(const CanonicalNumeral& c, Lang lang) {
  std::vector<std::string> cand;
  switch (c.type) {
    case NumericType::Decimal:
    case NumericType::LargeUnit:
      scalar_form_candidates(c.values[0], lang, cand);
      break;
    case NumericType::NegativeNumber: {
      std::vector<std::string> inner;
      scalar_form_candidates(c.values[0].abs(), lang, inner);
      for (auto& f : inner) {
        add(cand, "-" + f);
        if (lang == Lang::ZH)
          add(cand, "负" + f);
        else
          add(cand, "minus " + f);
      }
      break;
    }
    case NumericType::Range: {
      std::string a = plain(c.values[0]), b = plain(c.values[1]);
      if (lang == Lang::ZH) {
        add(cand, a + "~" + b);
        add(cand, a + "-" + b);
        add(cand, a + "到" + b);
        add(cand, a + "至" + b);
        if (fits_words(c.values[0], lang) && fits_words(c.values[1], lang) &&
            !c.values[0].negative() && !c.values[1].negative())
          add(cand, zh_words_integer(c.values[0]) + "到" +
                        zh_words_integer(c.values[1]));
      } else {
        add(cand, a + "-" + b);
        add(cand, a + "~" + b);
        add(cand, a + " to " + b);
        add(cand, "between " + a + " and " + b);
        if (fits_words(c.values[0], lang) && fits_words(c.values[1], lang) &&
            !c.values[0].negative() && !c.values[1].negative()) {
          std::string wa = en_words_integer(c.values[0], false);
          std::string wb = en_words_integer(c.values[1], false);
          add(cand, wa + " to " + wb);
          add(cand, "between " + wa + " and " + wb);
        }
      }
      break;
    }
    case NumericType::Ratio: {
      std::string a = plain(c.values[0]), b = plain(c.values[1]);
      add(cand, a + ":" + b);
      if (lang == Lang::ZH) {
        add(cand, a + "比" + b);
        if (fits_words(c.values[0], lang) && fits_words(c.values[1], lang) &&
            !c.values[0].negative() && !c.values[1].negative())
          add(cand, zh_words_integer(c.values[0]) + "比" +
                        zh_words_integer(c.values[1]));
      }
      break;
    }
    case NumericType::Fraction: {
      const NumericValue& n = c.values[0];
      const NumericValue& m = c.values[1];
      std::string dn = plain(n), dm = plain(m);
      add(cand, dn + "/" + dm);
      bool word_ok = fits_words(n, lang) && fits_words(m, lang) &&
                     !n.negative() && !m.negative();
      if (lang == Lang::ZH) {
        add(cand, dm + "分之" + dn);
        if (word_ok)
          add(cand, zh_words_integer(m) + "分之" + zh_words_integer(n));
        if (n == kOne && m == NumericValue::from_int(2)) {
          add(cand, "一半");
          add(cand, "半");
        }
      } else if (word_ok) {
        std::string wn = en_words_integer(n, false);
        std::string wm = en_words_integer(m, false);
        std::string dord = en_ordinalize(wm);
        if (!dord.empty() && m > NumericValue::from_int(2)) {
          std::string pl = n == kOne ? "" : "s";
          add(cand, wn + " " + dord + pl);
          add(cand, wn + "-" + dord + pl);
          if (n == kOne) add(cand, "a " + dord);
        }
        if (n <= m && n >= kOne) {
          add(cand, dn + " in " + dm);
          add(cand, wn + " in " + wm);
        }
        if (m == NumericValue::from_int(2)) {
          if (n == kOne) {
            add(cand, "half");
            add(cand, "a half");
            add(cand, "one half");
          } else {
            add(cand, wn + " halves");
          }
        }
        if (m == NumericValue::from_int(4)) {
          if (n == kOne) {
            add(cand, "quarter");
            add(cand, "a quarter");
            add(cand, "one quarter");
          } else {
            add(cand, wn + " quarters");
          }
        }
      }
      break;
    }
    case NumericType::Ordinal: {
      std::string d = c.values[0].integer_digit_string();
      if (lang == Lang::ZH) {
        add(cand, "第" + d);
        if (fits_words(c.values[0], lang))
          add(cand, "第" + zh_words_integer(c.values[0]));
      } else {
        add(cand, d + en_ordinal_suffix(d));
        if (fits_words(c.values[0], lang))
          add(cand, en_ordinalize(en_words_integer(c.values[0], false)));
      }
      break;
    }
    case NumericType::NumberString:
      add(cand, c.literal);
      break;
    case NumericType::Formula: {
      std::vector<std::string> reps;
      for (auto& v : c.values) reps.push_back(plain(v));
      auto join = [&](const std::string& sep) {
        std::string s = reps[0];
        for (std::size_t i = 1; i < reps.size(); ++i) s += sep + reps[i];
        return s;
      };
      if (*c.op == FormulaOp::Add) {
        add(cand, join("+"));
        add(cand, join(" + "));
        bool word_ok = true;
        std::vector<std::string> words;
        for (auto& v : c.values) {
          if (!fits_words(v, lang) || v.negative()) word_ok = false;
          else if (lang == Lang::EN) words.push_back(en_words_integer(v, false));
        }
        if (word_ok && lang == Lang::EN) {
          std::string s = words[0];
          for (std::size_t i = 1; i < words.size(); ++i)
            s += " plus " + words[i];
          add(cand, s);
        }
      } else {
        add(cand, join("*"));
        add(cand, join(" * "));
        add(cand, join("x"));
        add(cand, join(" x "));
      }
      break;
    }
    case NumericType::Special: {
      const NumericValue& v = c.values[0];
      if (*c.measure == Measure::Fold) {
        if (lang == Lang::ZH) {
          add(cand, plain(v) + "倍");
          if (fits_words(v, lang) && !v.negative()) {
            std::string w = zh_words_integer(v) + "倍";
            add(cand, w);
            add(cand, liang_variant(w));
          }
        } else {
          add(cand, plain(v) + "-fold");
          add(cand, plain(v) + " fold");
          if (fits_words(v, lang) && !v.negative()) {
            std::string w = en_words_integer(v, false);
            add(cand, w + "-fold");
            if (w.find(' ') == std::string::npos &&
                w.find('-') == std::string::npos)
              add(cand, w + "fold");
          }
        }
      } else {
        if (lang == Lang::ZH) {
          add(cand, zh_pixel_digits(v));
          add(cand, plain(v.scaled(6)) + "像素");
        } else {
          std::vector<std::string> reps{plain(v)};
          if (v.is_integer()) reps.push_back(one_decimal(v));
          for (auto& r : reps) {
            add(cand, r + " MP");
            add(cand, r + " megapixel");
            add(cand, r + " megapixels");
            add(cand, r + "-megapixel");
            add(cand, r + "-megapixels");
          }
        }
      }
      break;
    }
  }

  std::set<std::string> out;
  for (auto& s : cand) {
    try {
      CanonicalNumeral parsed = parse_number(s, lang);
      if (canonical_equal(c, parsed)) out.insert(s);
    } catch (const ParseError&) {
    }
  }
  return out;
}

}  // namespace numtrans

#include "numtrans/parse_en.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "numtrans/errors.hpp"
#include "numtrans/parse_zh.hpp"
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

struct Word {
  std::string text;  // lowercased ASCII
  std::size_t end = 0;
};

std::optional<Word> lex_word(const std::u32string& s, std::size_t pos) {
  if (pos >= s.size() || !is_ascii_alpha(s[pos])) return std::nullopt;
  Word w;
  std::size_t i = pos;
  while (i < s.size() && is_ascii_alpha(s[i])) {
    w.text.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(static_cast<char>(s[i])))));
    ++i;
  }
  w.end = i;
  return w;
}

int ones_word(const std::string& w) {
  static const std::map<std::string, int> k = {
      {"one", 1}, {"two", 2},   {"three", 3}, {"four", 4}, {"five", 5},
      {"six", 6}, {"seven", 7}, {"eight", 8}, {"nine", 9}};
  auto it = k.find(w);
  return it == k.end() ? -1 : it->second;
}

int teens_word(const std::string& w) {
  static const std::map<std::string, int> k = {
      {"ten", 10},      {"eleven", 11},    {"twelve", 12},
      {"thirteen", 13}, {"fourteen", 14},  {"fifteen", 15},
      {"sixteen", 16},  {"seventeen", 17}, {"eighteen", 18},
      {"nineteen", 19}};
  auto it = k.find(w);
  return it == k.end() ? -1 : it->second;
}

int tens_word(const std::string& w) {
  static const std::map<std::string, int> k = {
      {"twenty", 20}, {"thirty", 30}, {"forty", 40},  {"fifty", 50},
      {"sixty", 60},  {"seventy", 70}, {"eighty", 80}, {"ninety", 90}};
  auto it = k.find(w);
  return it == k.end() ? -1 : it->second;
}

int unit_word_exp(const std::string& w) {
  if (w == "thousand") return 3;
  if (w == "million") return 6;
  if (w == "billion") return 9;
  if (w == "trillion") return 12;
  return -1;
}

// Ordinal word -> its cardinal word; empty when not an ordinal.
std::string ordinal_to_cardinal(const std::string& w) {
  static const std::map<std::string, std::string> k = {
      {"first", "one"},          {"second", "two"},
      {"third", "three"},        {"fourth", "four"},
      {"fifth", "five"},         {"sixth", "six"},
      {"seventh", "seven"},      {"eighth", "eight"},
      {"ninth", "nine"},         {"tenth", "ten"},
      {"eleventh", "eleven"},    {"twelfth", "twelve"},
      {"thirteenth", "thirteen"}, {"fourteenth", "fourteen"},
      {"fifteenth", "fifteen"},  {"sixteenth", "sixteen"},
      {"seventeenth", "seventeen"}, {"eighteenth", "eighteen"},
      {"nineteenth", "nineteen"}, {"twentieth", "twenty"},
      {"thirtieth", "thirty"},   {"fortieth", "forty"},
      {"fiftieth", "fifty"},     {"sixtieth", "sixty"},
      {"seventieth", "seventy"}, {"eightieth", "eighty"},
      {"ninetieth", "ninety"},   {"hundredth", "hundred"},
      {"thousandth", "thousand"}, {"millionth", "million"},
      {"billionth", "billion"},  {"trillionth", "trillion"}};
  auto it = k.find(w);
  return it == k.end() ? std::string() : it->second;
}

// Words joined by single spaces or a hyphen, cp-indexed.
struct Tok {
  bool number = false;
  std::string word;
  DigitRun run;
  std::size_t begin = 0, end = 0;
  bool hyphen_before = false;
};

std::vector<Tok> lex_tokens(const std::u32string& s, std::size_t pos) {
  std::vector<Tok> toks;
  std::size_t i = pos;
  bool hyphen = false;
  while (toks.size() < 24) {
    Tok t;
    t.begin = i;
    t.hyphen_before = hyphen;
    if (auto run = lex_digit_run(s, i)) {
      t.number = true;
      t.run = *run;
      t.end = i + run->len;
    } else if (auto w = lex_word(s, i)) {
      t.word = w->text;
      t.end = w->end;
    } else {
      break;
    }
    i = t.end;
    toks.push_back(std::move(t));
    hyphen = false;
    std::size_t j = skip_spaces(s, i);
    if (j > i && j < s.size() && (is_ascii_alpha(s[j]) || is_ascii_digit(s[j]))) {
      i = j;
      continue;
    }
    if (j == i && i < s.size() && s[i] == U'-' && i + 1 < s.size() &&
        is_ascii_alpha(s[i + 1])) {
      // hyphen joins word tokens only (twenty-one); digit hyphens are
      // ranges or opaque strings
      hyphen = true;
      i = i + 1;
      continue;
    }
    break;
  }
  return toks;
}

// 0..999 from words: [ones|a] hundred [and] [tens[-ones]|teens|ones], or a
// bare tens/teens/ones/zero group.
struct TokSmall {
  long long value = 0;
  std::size_t next = 0;
};

std::optional<TokSmall> parse_tail_tens(const std::vector<Tok>& toks,
                                        std::size_t i) {
  if (i >= toks.size() || toks[i].number) return std::nullopt;
  const std::string& w = toks[i].word;
  int v = teens_word(w);
  if (v >= 0) return TokSmall{v, i + 1};
  v = tens_word(w);
  if (v >= 0) {
    if (i + 1 < toks.size() && !toks[i + 1].number) {
      int d = ones_word(toks[i + 1].word);
      if (d > 0) return TokSmall{v + d, i + 2};
    }
    return TokSmall{v, i + 1};
  }
  v = ones_word(w);
  if (v > 0) return TokSmall{v, i + 1};
  if (w == "zero") return TokSmall{0, i + 1};
  return std::nullopt;
}

std::optional<TokSmall> parse_small_tokens(const std::vector<Tok>& toks,
                                           std::size_t i, bool allow_and) {
  if (i >= toks.size() || toks[i].number) return std::nullopt;
  const std::string& w = toks[i].word;
  int d = ones_word(w);
  bool article = w == "a" || w == "an";
  if ((d > 0 || article) && i + 1 < toks.size() &&
      toks[i + 1].word == "hundred") {
    long long v = (article ? 1 : d) * 100;
    std::size_t j = i + 2;
    std::size_t k = j;
    if (allow_and && k < toks.size() && toks[k].word == "and") ++k;
    if (auto tail = parse_tail_tens(toks, k)) {
      if (tail->value > 0) return TokSmall{v + tail->value, tail->next};
    }
    return TokSmall{v, j};
  }
  return parse_tail_tens(toks, i);
}

// Full value: groups (word smalls or digit runs) times strictly decreasing
// units thousand/million/billion/trillion, plus an optional trailing group.
// A fractional mantissa (2.82 billion) ends the number after its unit.
struct EnVal {
  NumericValue value;
  std::size_t len = 0;  // cps
  bool used_unit = false;
  bool arabic_simple = false;
  bool comma = false;
  std::size_t int_len = 0;
  bool integer_words = true;  // no digit runs involved
};

std::optional<EnVal> value_at(const std::u32string& s, std::size_t pos,
                              bool allow_and) {
  std::vector<Tok> toks = lex_tokens(s, pos);
  if (toks.empty()) return std::nullopt;
  NumericValue total;
  int prev_exp = INT_MAX;
  bool first = true;
  std::size_t j = 0;
  EnVal out;

  while (j < toks.size()) {
    std::size_t k = j;
    if (!first && allow_and && k < toks.size() && toks[k].word == "and") ++k;
    if (k >= toks.size()) break;

    NumericValue gv;
    bool gfrac = false;
    bool gnumber = false;
    bool gcomma = false;
    std::size_t gint_len = 0;
    std::size_t after = k;
    if (toks[k].number) {
      if (toks[k].hyphen_before) break;
      gv = toks[k].run.value;
      gfrac = toks[k].run.has_point;
      gnumber = true;
      gcomma = toks[k].run.has_comma;
      gint_len = toks[k].run.int_len;
      after = k + 1;
    } else if ((toks[k].word == "a" || toks[k].word == "an") &&
               k + 1 < toks.size() && unit_word_exp(toks[k + 1].word) >= 0) {
      gv = NumericValue::from_int(1);
      after = k + 1;
    } else if (auto small = parse_small_tokens(toks, k, allow_and)) {
      gv = NumericValue::from_int(small->value);
      after = small->next;
    } else {
      break;
    }

    int exp = after < toks.size() && !toks[after].number
                  ? unit_word_exp(toks[after].word)
                  : -1;
    if (exp >= 0) {
      if (!first) {
        if (exp >= prev_exp) break;
        if (gfrac) break;
        if (gv.scaled(exp) >= pow10(prev_exp)) break;
      }
      total = total.plus(gv.scaled(exp));
      prev_exp = exp;
      out.used_unit = true;
      if (gnumber) out.integer_words = false;
      j = after + 1;
      out.len = toks[after].end - pos;
      first = false;
      if (gfrac) break;
      continue;
    }

    if (first) {
      total = gv;
      out.len = toks[after - 1].end - pos;
      out.arabic_simple = gnumber;
      out.comma = gcomma;
      out.int_len = gint_len;
      out.integer_words = !gnumber;
      break;
    }
    if (gfrac) break;
    if (gv < pow10(prev_exp)) {
      total = total.plus(gv);
      if (gnumber) out.integer_words = false;
      out.len = toks[after - 1].end - pos;
    }
    break;
  }

  if (out.len == 0) return std::nullopt;
  out.value = total;
  return out;
}

std::optional<Match> match_range(const std::u32string& s, std::size_t pos) {
  if (auto w = lex_word(s, pos); w && w->text == "between") {
    std::size_t i = skip_spaces(s, w->end);
    auto a = value_at(s, i, /*allow_and=*/false);
    if (!a) return std::nullopt;
    std::size_t j = skip_spaces(s, i + a->len);
    auto sep = lex_word(s, j);
    if (!sep || sep->text != "and") return std::nullopt;
    std::size_t k = skip_spaces(s, sep->end);
    auto b = value_at(s, k, /*allow_and=*/false);
    if (!b) return std::nullopt;
    Match m;
    m.len = k + b->len - pos;
    m.canonical = CanonicalNumeral::range(a->value, b->value);
    m.priority = 1;
    return m;
  }
  auto a = value_at(s, pos, /*allow_and=*/false);
  if (!a) return std::nullopt;
  std::size_t i = skip_spaces(s, pos + a->len);
  if (i >= s.size()) return std::nullopt;
  std::size_t j = 0;
  if (s[i] == U'~' || s[i] == U'-') {
    if (s[i] == U'-' && !a->arabic_simple) return std::nullopt;
    j = skip_spaces(s, i + 1);
  } else if (auto w = lex_word(s, i); w && w->text == "to") {
    j = skip_spaces(s, w->end);
  } else {
    return std::nullopt;
  }
  auto b = value_at(s, j, /*allow_and=*/false);
  if (!b) return std::nullopt;
  Match m;
  m.len = j + b->len - pos;
  m.canonical = CanonicalNumeral::range(a->value, b->value);
  m.priority = 1;
  return m;
}

// Fraction denominator word (never "first"/"second"); plural accepted.
long long fraction_denominator(const std::string& w) {
  std::string base = w;
  if (base.size() > 1 && base.back() == 's') base.pop_back();
  if (base == "half" || base == "halve" || w == "halves") return 2;
  if (base == "quarter") return 4;
  if (base == "first" || base == "second") return -1;
  std::string card = ordinal_to_cardinal(base);
  if (card.empty()) return -1;
  int v = ones_word(card);
  if (v < 0) v = teens_word(card);
  if (v < 0) v = tens_word(card);
  if (v < 0 && card == "hundred") v = 100;
  if (v < 0) {
    int e = unit_word_exp(card);
    if (e == 3) return 1000;
    if (e == 6) return 1000000;
    return -1;
  }
  return v;
}

std::optional<Match> match_fraction(const std::u32string& s,
                                    std::size_t pos) {
  // bare or article-led half/quarter/denominator
  if (auto w = lex_word(s, pos)) {
    if (w->text == "half" || w->text == "halves") {
      Match m;
      m.len = w->end - pos;
      m.canonical = CanonicalNumeral::fraction(NumericValue::from_int(1),
                                               NumericValue::from_int(2));
      m.priority = 1;
      return m;
    }
    if (w->text == "quarter" || w->text == "quarters") {
      Match m;
      m.len = w->end - pos;
      m.canonical = CanonicalNumeral::fraction(NumericValue::from_int(1),
                                               NumericValue::from_int(4));
      m.priority = 1;
      return m;
    }
    if (w->text == "a" || w->text == "an") {
      std::size_t i = skip_spaces(s, w->end);
      auto d = lex_word(s, i);
      if (d) {
        long long den = fraction_denominator(d->text);
        if (den > 1) {
          Match m;
          m.len = d->end - pos;
          m.canonical = CanonicalNumeral::fraction(
              NumericValue::from_int(1), NumericValue::from_int(den));
          m.priority = 1;
          return m;
        }
      }
      return std::nullopt;
    }
  }

  auto numer = value_at(s, pos, /*allow_and=*/false);
  if (!numer || !numer->value.is_integer()) return std::nullopt;
  std::size_t i = pos + numer->len;

  // N/M
  std::size_t sl = skip_spaces(s, i);
  if (numer->arabic_simple && !numer->comma && sl < s.size() &&
      s[sl] == U'/') {
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
    return std::nullopt;
  }

  // "one fourth", "three fifths", "one-fourth", "three halves"
  std::size_t j = sl;
  bool joined = false;
  if (j == i && j < s.size() && s[j] == U'-') {
    ++j;
    joined = true;
  }
  if (j > i || joined) {
    if (auto d = lex_word(s, j)) {
      long long den = fraction_denominator(d->text);
      if (den > 1) {
        Match m;
        m.len = d->end - pos;
        m.canonical = CanonicalNumeral::fraction(numer->value,
                                                 NumericValue::from_int(den));
        m.priority = 1;
        return m;
      }
    }
  }

  // "one in four"
  if (auto w = lex_word(s, sl); w && w->text == "in") {
    std::size_t k = skip_spaces(s, w->end);
    auto den = value_at(s, k, /*allow_and=*/false);
    if (den && den->value.is_integer() && !den->value.is_zero() &&
        !numer->value.is_zero() && numer->value <= den->value) {
      Match m;
      m.len = k + den->len - pos;
      m.canonical = CanonicalNumeral::fraction(numer->value, den->value);
      m.priority = 1;
      return m;
    }
  }
  return std::nullopt;
}

std::optional<Match> match_ratio(const std::u32string& s, std::size_t pos) {
  auto left = lex_digit_run(s, pos);
  if (!left) return std::nullopt;
  std::size_t i = skip_spaces(s, pos + left->len);
  if (i >= s.size() || s[i] != U':') return std::nullopt;
  std::size_t j = skip_spaces(s, i + 1);
  auto right = lex_digit_run(s, j);
  if (!right) return std::nullopt;
  Match m;
  m.len = j + right->len - pos;
  m.canonical = CanonicalNumeral::ratio(left->value, right->value);
  m.priority = 1;
  return m;
}

std::optional<Match> match_formula(const std::u32string& s,
                                   std::size_t pos) {
  auto first = value_at(s, pos, /*allow_and=*/false);
  if (!first) return std::nullopt;
  std::vector<NumericValue> operands{first->value};
  std::optional<FormulaOp> op;
  std::size_t end = pos + first->len;
  while (true) {
    std::size_t i = skip_spaces(s, end);
    if (i >= s.size()) break;
    FormulaOp this_op;
    std::size_t op_end = 0;
    if (s[i] == U'+') {
      this_op = FormulaOp::Add;
      op_end = i + 1;
    } else if (s[i] == U'*' || s[i] == U'×') {
      this_op = FormulaOp::Mul;
      op_end = i + 1;
    } else if (auto w = lex_word(s, i)) {
      if (w->text == "x") {
        this_op = FormulaOp::Mul;
        op_end = w->end;
      } else if (w->text == "plus") {
        this_op = FormulaOp::Add;
        op_end = w->end;
      } else {
        break;
      }
    } else {
      break;
    }
    if (op && *op != this_op) break;
    std::size_t j = skip_spaces(s, op_end);
    auto next = value_at(s, j, /*allow_and=*/false);
    if (!next) break;
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

bool valid_ordinal_suffix(const std::string& digits,
                          const std::string& suffix) {
  int last = digits.back() - '0';
  int last2 = digits.size() >= 2
                  ? (digits[digits.size() - 2] - '0') * 10 + last
                  : last;
  if (last2 >= 11 && last2 <= 13) return suffix == "th";
  if (last == 1) return suffix == "st";
  if (last == 2) return suffix == "nd";
  if (last == 3) return suffix == "rd";
  return suffix == "th";
}

std::optional<Match> match_ordinal(const std::u32string& s, std::size_t pos,
                                   bool scan) {
  // 62nd
  if (auto run = lex_digit_run(s, pos);
      run && !run->has_point && !run->has_comma) {
    auto w = lex_word(s, pos + run->len);
    if (w && w->end - (pos + run->len) == 2 &&
        valid_ordinal_suffix(run->digits, w->text)) {
      Match m;
      m.len = w->end - pos;
      m.canonical = CanonicalNumeral::ordinal(run->value);
      m.priority = 2;
      return m;
    }
  }
  // word chain ending in an ordinal word
  std::vector<Tok> toks = lex_tokens(s, pos);
  std::size_t last = 0;
  std::string converted;
  for (; last < toks.size(); ++last) {
    if (toks[last].number) return std::nullopt;
    converted = ordinal_to_cardinal(toks[last].word);
    if (!converted.empty()) break;
    const std::string& w = toks[last].word;
    bool cardinal = ones_word(w) >= 0 || teens_word(w) >= 0 ||
                    tens_word(w) >= 0 || w == "hundred" ||
                    unit_word_exp(w) >= 0 || w == "and";
    if (!cardinal) return std::nullopt;
  }
  if (last >= toks.size()) return std::nullopt;
  if (scan && last == 0 && toks[0].word == "second") return std::nullopt;
  std::vector<Tok> chain(toks.begin(), toks.begin() + last + 1);
  chain.back().word = converted;
  // re-parse the rewritten chain as a cardinal value, all tokens consumed
  std::u32string rebuilt;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) rebuilt.push_back(U' ');
    for (char c : chain[k].word) rebuilt.push_back(static_cast<char32_t>(c));
  }
  auto v = value_at(rebuilt, 0, /*allow_and=*/true);
  if (!v || v->len != rebuilt.size() || !v->value.is_integer())
    return std::nullopt;
  Match m;
  m.len = toks[last].end - pos;
  m.canonical = CanonicalNumeral::ordinal(v->value);
  m.priority = 2;
  return m;
}

std::optional<Match> match_negative(const std::u32string& s,
                                    std::size_t pos) {
  std::size_t i = 0;
  if (auto w = lex_word(s, pos); w && w->text == "minus") {
    i = skip_spaces(s, w->end);
  } else if (pos < s.size() && s[pos] == U'-' && pos + 1 < s.size() &&
             is_ascii_digit(s[pos + 1])) {
    i = pos + 1;
  } else {
    return std::nullopt;
  }
  auto v = value_at(s, i, /*allow_and=*/true);
  if (!v) return std::nullopt;
  Match m;
  m.len = i + v->len - pos;
  m.canonical = CanonicalNumeral::scalar(NumericType::NegativeNumber,
                                         v->value.negated());
  m.priority = 2;
  return m;
}

std::optional<Match> match_special(const std::u32string& s,
                                   std::size_t pos) {
  // single-token folds: threefold
  if (auto w = lex_word(s, pos)) {
    const std::string& t = w->text;
    if (t.size() > 4 && t.compare(t.size() - 4, 4, "fold") == 0) {
      std::string prefix = t.substr(0, t.size() - 4);
      int v = ones_word(prefix);
      if (v < 0) v = teens_word(prefix);
      if (v < 0) v = tens_word(prefix);
      if (v > 0) {
        Match m;
        m.len = w->end - pos;
        m.canonical = CanonicalNumeral::special(Measure::Fold,
                                                NumericValue::from_int(v));
        m.priority = 2;
        return m;
      }
    }
  }
  auto v = value_at(s, pos, /*allow_and=*/false);
  if (!v) return std::nullopt;
  std::size_t i = pos + v->len;
  std::size_t j = skip_spaces(s, i);
  bool hyphen = false;
  if (j == i && j < s.size() && s[j] == U'-') {
    ++j;
    hyphen = true;
  }
  if (j == i && !hyphen) return std::nullopt;
  auto w = lex_word(s, j);
  if (!w) return std::nullopt;
  if (w->text == "fold") {
    Match m;
    m.len = w->end - pos;
    m.canonical = CanonicalNumeral::special(Measure::Fold, v->value);
    m.priority = 2;
    return m;
  }
  if (w->text == "mp" || w->text == "megapixel" || w->text == "megapixels") {
    Match m;
    m.len = w->end - pos;
    m.canonical = CanonicalNumeral::special(Measure::Megapixel, v->value);
    m.priority = 2;
    return m;
  }
  return std::nullopt;
}

std::optional<Match> match_scalar(const std::u32string& s, std::size_t pos) {
  auto v = value_at(s, pos, /*allow_and=*/true);
  if (!v) return std::nullopt;
  Match m;
  m.len = v->len;
  m.canonical = CanonicalNumeral::scalar(
      v->used_unit ? NumericType::LargeUnit : NumericType::Decimal, v->value);
  m.priority = v->used_unit ? 3 : 4;
  return m;
}

void consider(std::optional<Match> m, std::optional<Match>& best) {
  if (!m || m->len == 0) return;
  if (!best || m->len > best->len ||
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
  consider(match_ordinal(s, pos, scan), best);
  consider(match_negative(s, pos), best);
  consider(match_special(s, pos), best);
  consider(match_scalar(s, pos), best);
  return best;
}

bool start_word(const std::string& w) {
  if (ones_word(w) >= 0 || teens_word(w) >= 0 || tens_word(w) >= 0)
    return true;
  if (w == "zero" || w == "a" || w == "an" || w == "between" ||
      w == "minus" || w == "half" || w == "halves" || w == "quarter" ||
      w == "quarters")
    return true;
  if (!ordinal_to_cardinal(w).empty() && w != "second") return true;
  if (w.size() > 4 && w.compare(w.size() - 4, 4, "fold") == 0) return true;
  return false;
}

bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

}  // namespace

CanonicalNumeral parse_en_number(std::string_view phrase) {
  Utf8Text t = Utf8Text::decode(phrase);
  std::size_t b = 0, e = t.size();
  while (b < e && is_ascii_space(t.folded[b])) ++b;
  while (e > b && is_ascii_space(t.folded[e - 1])) --e;
  if (b == e) throw ParseError("empty numeric phrase", 0);
  auto m = best_match(t.folded, b, /*scan=*/false);
  if (!m || m->len == 0)
    throw ParseError("not a numeric phrase", t.offsets[b]);
  if (b + m->len != e)
    throw ParseError("unexpected trailing text", t.offsets[b + m->len]);
  return m->canonical;
}

std::vector<SpannedExpression> scan_en(std::string_view sentence) {
  Utf8Text t = Utf8Text::decode(sentence);
  std::vector<SpannedExpression> out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    char32_t c = t.folded[pos];
    bool boundary = pos == 0 || !is_ascii_alnum(t.folded[pos - 1]);
    bool try_here = false;
    if (boundary && is_ascii_digit(c)) {
      try_here = true;
    } else if (boundary && is_ascii_alpha(c)) {
      auto w = lex_word(t.folded, pos);
      try_here = w && start_word(w->text);
    } else if (c == U'-' && pos + 1 < t.size() &&
               is_ascii_digit(t.folded[pos + 1]) &&
               (pos == 0 || !is_ascii_alnum(t.folded[pos - 1]))) {
      try_here = true;
    }
    if (!try_here) {
      ++pos;
      continue;
    }
    auto m = best_match(t.folded, pos, /*scan=*/true);
    if (!m || m->len == 0) {
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

CanonicalNumeral parse_number(std::string_view phrase, Lang lang) {
  return lang == Lang::ZH ? parse_zh_number(phrase) : parse_en_number(phrase);
}

std::vector<SpannedExpression> scan(std::string_view sentence, Lang lang) {
  return lang == Lang::ZH ? scan_zh(sentence) : scan_en(sentence);
}

}  // namespace numtrans

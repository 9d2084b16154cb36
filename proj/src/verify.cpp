#include "numtrans/verify.hpp"

#include <algorithm>
#include <map>

#include "numtrans/errors.hpp"
#include "numtrans/format.hpp"
#include "numtrans/parse_en.hpp"
#include "numtrans/text.hpp"

namespace numtrans {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Unset: return "unset";
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Omitted: return "omitted";
    case Verdict::Spurious: return "spurious";
    case Verdict::Unverifiable: return "unverifiable";
  }
  return "unset";
}

namespace {

// Alignment classes: scalar-likes and opaque digit strings interchange
// freely across translation, the structured types only with themselves.
int type_class(NumericType t) {
  switch (t) {
    case NumericType::Decimal:
    case NumericType::LargeUnit:
    case NumericType::NegativeNumber:
    case NumericType::Ordinal:
    case NumericType::NumberString:
      return 0;
    case NumericType::Range: return 1;
    case NumericType::Fraction: return 2;
    case NumericType::Ratio: return 3;
    case NumericType::Formula: return 4;
    case NumericType::Special: return 5;
  }
  return 0;
}

std::vector<NumericPair> align(std::vector<SpannedExpression> src,
                               std::vector<SpannedExpression> tgt) {
  std::vector<int> src_to(src.size(), -1);
  std::vector<char> tgt_used(tgt.size(), 0);

  // exact canonical agreement
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      if (tgt_used[j]) continue;
      if (canonical_equal(src[i].canonical, tgt[j].canonical)) {
        src_to[i] = static_cast<int>(j);
        tgt_used[j] = 1;
        break;
      }
    }

  // same class, in order
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src_to[i] >= 0) continue;
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      if (tgt_used[j]) continue;
      if (type_class(src[i].canonical.type) ==
          type_class(tgt[j].canonical.type)) {
        src_to[i] = static_cast<int>(j);
        tgt_used[j] = 1;
        break;
      }
    }
  }

  // positional, only when the leftovers pair off exactly
  std::vector<std::size_t> src_left, tgt_left;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src_to[i] < 0) src_left.push_back(i);
  for (std::size_t j = 0; j < tgt.size(); ++j)
    if (!tgt_used[j]) tgt_left.push_back(j);
  if (src_left.size() == tgt_left.size()) {
    for (std::size_t k = 0; k < src_left.size(); ++k) {
      src_to[src_left[k]] = static_cast<int>(tgt_left[k]);
      tgt_used[tgt_left[k]] = 1;
    }
  }

  std::vector<NumericPair> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    NumericPair p;
    p.source = src[i];
    if (src_to[i] >= 0) p.target = tgt[static_cast<std::size_t>(src_to[i])];
    out.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    if (tgt_used[j]) continue;
    NumericPair p;
    p.target = tgt[j];
    out.push_back(std::move(p));
  }
  return out;
}

// Locates `phrase` in `text` (width-folded), returning its cp span.
// `from` advances per repeated needle so duplicates map to distinct spans.
std::optional<Span> locate(const Utf8Text& text, const std::string& phrase,
                           std::map<std::string, std::size_t>& from) {
  std::u32string needle;
  for (char32_t cp : decode_utf8(phrase)) needle.push_back(fold_width(cp));
  if (needle.empty()) return std::nullopt;
  std::size_t start = 0;
  if (auto it = from.find(phrase); it != from.end()) start = it->second;
  std::size_t at = text.folded.find(needle, start);
  if (at == std::u32string::npos && start > 0)
    at = text.folded.find(needle, 0);
  if (at == std::u32string::npos) return std::nullopt;
  from[phrase] = at + needle.size();
  return Span{at, at + needle.size()};
}

std::optional<SpannedExpression> resolve_phrase(
    const Utf8Text& text, const std::string& phrase, Lang lang,
    std::map<std::string, std::size_t>& from, std::string& fail) {
  auto span = locate(text, phrase, from);
  if (!span) {
    fail = "phrase not found: \"" + phrase + "\"";
    return std::nullopt;
  }
  try {
    CanonicalNumeral c = parse_number(phrase, lang);
    return SpannedExpression{*span, text.slice(span->begin, span->end),
                             std::move(c)};
  } catch (const ParseError& e) {
    fail = "unparseable phrase \"" + phrase + "\": " + e.what();
    return std::nullopt;
  }
}

std::string replacement_text(const CanonicalNumeral& c, Lang lang,
                             PostEditStyle style) {
  if (c.type == NumericType::Formula) {
    const char* sep = *c.op == FormulaOp::Add ? "+" : "*";
    std::string s = c.values[0].to_plain_string();
    for (std::size_t i = 1; i < c.values.size(); ++i)
      s += sep + c.values[i].to_plain_string();
    return s;
  }
  return style == PostEditStyle::Digits ? render_digits(c, lang)
                                        : render_large_unit(c, lang);
}

}  // namespace

std::vector<NumericPair> extract_pairs(const std::string& source,
                                       const std::string& target,
                                       Direction direction,
                                       const PairExtractor* extractor) {
  Lang slang = source_lang(direction);
  Lang tlang = target_lang(direction);
  if (extractor == nullptr)
    return align(scan(source, slang), scan(target, tlang));

  Utf8Text stext = Utf8Text::decode(source);
  Utf8Text ttext = Utf8Text::decode(target);
  std::map<std::string, std::size_t> sfrom, tfrom;
  std::vector<NumericPair> out;
  for (auto& [sp, tp] : (*extractor)(source, target)) {
    NumericPair p;
    std::string sfail, tfail;
    p.source = resolve_phrase(stext, sp, slang, sfrom, sfail);
    p.target = resolve_phrase(ttext, tp, tlang, tfrom, tfail);
    if (!p.source || !p.target) {
      p.verdict = Verdict::Unverifiable;
      p.reason = !p.source ? "source " + sfail : "target " + tfail;
    }
    out.push_back(std::move(p));
  }
  return out;
}

NumericPair verify_pair(NumericPair pair) {
  if (pair.verdict == Verdict::Unverifiable) return pair;
  if (!pair.source && !pair.target) return pair;
  if (!pair.target) {
    pair.verdict = Verdict::Omitted;
    return pair;
  }
  if (!pair.source) {
    pair.verdict = Verdict::Spurious;
    return pair;
  }
  if (canonical_equal(pair.source->canonical, pair.target->canonical)) {
    pair.verdict = Verdict::Match;
  } else {
    pair.verdict = Verdict::Mismatch;
    pair.expected = pair.source->canonical;
  }
  return pair;
}

PostEditReport post_edit(const std::string& source, const std::string& target,
                         Direction direction, PostEditStyle style,
                         const PairExtractor* extractor) {
  PostEditReport report;
  report.pairs = extract_pairs(source, target, direction, extractor);
  for (auto& p : report.pairs) p = verify_pair(std::move(p));

  Lang tlang = target_lang(direction);
  struct Edit {
    Span span;
    std::string text;
  };
  std::vector<Edit> edits;
  for (auto& p : report.pairs) {
    if (p.verdict == Verdict::Mismatch && p.expected && p.target)
      edits.push_back(
          Edit{p.target->span, replacement_text(*p.expected, tlang, style)});
    if (p.verdict == Verdict::Omitted || p.verdict == Verdict::Unverifiable)
      ++report.unresolved;
  }
  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.span.begin < b.span.begin; });

  Utf8Text t = Utf8Text::decode(target);
  std::string out;
  std::size_t done = 0;  // cp index
  for (auto& e : edits) {
    if (e.span.begin < done) continue;  // overlap: keep the earlier edit
    out += t.slice(done, e.span.begin);
    out += e.text;
    done = e.span.end;
    ++report.edit_count;
  }
  out += t.slice(done, t.size());
  report.edited = std::move(out);
  return report;
}

}  // namespace numtrans

#include "numtrans/text.hpp"

#include <cctype>

namespace numtrans {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = kReplacement;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok || cp > 0x10FFFF) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t cp : text) out += encode_utf8(cp);
  return out;
}

char32_t fold_width(char32_t cp) {
  if (cp >= 0xFF01 && cp <= 0xFF5E) return cp - 0xFEE0;  // full-width ASCII
  switch (cp) {
    case 0x3000:  // ideographic space
    case 0x00A0:  // no-break space
      return U' ';
    case 0x2212:  // minus sign
    case 0x2013:  // en dash
    case 0x2014:  // em dash
      return U'-';
    case 0x301C:  // wave dash
      return U'~';
    default:
      return cp;
  }
}

std::u32string fold_width(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = fold_width(cp);
  return out;
}

Utf8Text Utf8Text::decode(std::string_view text) {
  Utf8Text t;
  t.bytes.assign(text);
  std::size_t i = 0;
  while (i < t.bytes.size()) {
    t.offsets.push_back(i);
    unsigned char b0 = static_cast<unsigned char>(t.bytes[i]);
    std::size_t len = 1;
    if (b0 >= 0xF0)
      len = 4;
    else if (b0 >= 0xE0)
      len = 3;
    else if (b0 >= 0xC0)
      len = 2;
    if (i + len > t.bytes.size()) len = 1;
    std::u32string cp = decode_utf8(std::string_view(t.bytes).substr(i, len));
    t.cps.push_back(cp.empty() ? kReplacement : cp[0]);
    i += len;
  }
  t.offsets.push_back(t.bytes.size());
  t.folded = fold_width(t.cps);
  return t;
}

std::string Utf8Text::slice(std::size_t from, std::size_t to) const {
  if (from >= offsets.size()) return "";
  if (to >= offsets.size()) to = offsets.size() - 1;
  if (to < from) return "";
  return bytes.substr(offsets[from], offsets[to] - offsets[from]);
}

std::string normalize_for_match(std::string_view text) {
  std::u32string cps = fold_width(decode_utf8(text));
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (cp == U'~') cp = U'-';  // dash/tilde variants are one class
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return encode_utf8(out);
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_ascii_alpha(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}
bool is_ascii_alnum(char32_t cp) { return is_ascii_digit(cp) || is_ascii_alpha(cp); }

}  // namespace numtrans

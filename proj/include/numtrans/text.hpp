#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace numtrans {

// UTF-8 helpers shared by the parsers, the verifier and the eval harness.
// All spans in the library are half-open code-point intervals, so every
// sentence is decoded once into a Utf8Text before scanning.

std::u32string decode_utf8(std::string_view text);  // invalid bytes -> U+FFFD
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

/// Full-width to half-width folding plus dash/minus unification. One code
/// point in, one code point out, so folded text stays index-aligned with the
/// original.
char32_t fold_width(char32_t cp);
std::u32string fold_width(std::u32string_view text);

struct Utf8Text {
  std::string bytes;           // original input
  std::u32string cps;          // decoded code points
  std::u32string folded;       // width-folded, same length as cps
  std::vector<std::size_t> offsets;  // byte offset per cp, plus one past-the-end

  static Utf8Text decode(std::string_view text);

  std::size_t size() const { return cps.size(); }
  /// Original bytes for the half-open cp interval [from, to).
  std::string slice(std::size_t from, std::size_t to) const;
};

/// Normalization applied before reference matching: width fold, dash/tilde
/// unification, whitespace runs collapsed to a single space, ends trimmed.
std::string normalize_for_match(std::string_view text);

bool is_ascii_digit(char32_t cp);
bool is_ascii_alpha(char32_t cp);
bool is_ascii_alnum(char32_t cp);

}  // namespace numtrans

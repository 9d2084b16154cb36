#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "numtrans/canonical.hpp"
#include "numtrans/numeric_value.hpp"
#include "numtrans/text.hpp"

namespace numtrans::detail {

// One candidate parse at a position. `len` is the safe length in code
// points; when `ambiguous` is set, consuming `amb_len` instead would admit
// the readings in `candidates` (plain value strings). Lower `priority` wins
// a length tie.
struct Match {
  std::size_t len = 0;
  CanonicalNumeral canonical;
  int priority = 9;
  bool ambiguous = false;
  std::size_t amb_len = 0;
  std::vector<std::string> candidates;
};

// Arabic digit run over folded code points. Grouping commas are consumed
// only in the canonical d{1,3}(,ddd)* shape and a point only when at least
// one digit follows; anything else ends the run.
struct DigitRun {
  std::size_t len = 0;   // code points consumed
  std::size_t int_len = 0;  // integer-part digits (commas excluded)
  std::string digits;    // all digits, commas stripped
  int frac_len = 0;
  bool has_point = false;
  bool has_comma = false;
  NumericValue value;
};

// Returns nullopt when `pos` is not at a digit or the run begins with a
// redundant leading zero (those runs are opaque number strings, parsed
// separately). "0" and "0.5" are fine.
std::optional<DigitRun> lex_digit_run(const std::u32string& s,
                                      std::size_t pos);

std::size_t skip_spaces(const std::u32string& s, std::size_t pos);

NumericValue pow10(int k);

// Opaque number strings, shared by both languages: digit runs with a
// redundant leading zero (optionally extended through commas), hyphen-joined
// digit groups when a group has a leading zero or there are three or more
// groups, and, during sentence scans only, bare context-free runs of six or
// more digits.
std::optional<Match> match_number_string(const std::u32string& s,
                                         std::size_t pos, bool scan);

}  // namespace numtrans::detail

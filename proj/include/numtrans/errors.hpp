#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace numtrans {

/// Failure to parse a numeric phrase or value. `offset` is the index of the
/// first offending position (code points for sentence text, bytes for plain
/// digit strings). When a phrase admits more than one reading, `candidates`
/// lists the conflicting parses instead of guessing.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> candidates)
      : std::runtime_error(std::move(message)),
        offset_(offset),
        candidates_(std::move(candidates)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  bool ambiguous() const { return !candidates_.empty(); }

 private:
  std::size_t offset_ = 0;
  std::vector<std::string> candidates_;
};

/// Schema violation while loading a dataset file.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::string message, std::size_t line, std::string field)
      : std::runtime_error(std::move(message)),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_ = 0;
  std::string field_;
};

}  // namespace numtrans

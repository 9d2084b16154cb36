#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numtrans/canonical.hpp"

namespace numtrans {

/// Connection settings for a chat-completion endpoint. The API key comes
/// from the environment (see eval_cli); temperature stays 0 and a fixed seed
/// is sent so runs are repeatable.
struct LlmConfig {
  std::string endpoint;  // base URL, e.g. "http://127.0.0.1:8080"
  std::string model = "default";
  std::string api_key;
  double timeout_seconds = 30.0;
  int max_retries = 2;
  double temperature = 0.0;
  int seed = 0;
  int parallelism = 4;
  bool verbose = false;  // log request/response to stderr, key redacted
};

enum class Strategy { Base, ICL, COT };
const char* to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HttpStatusError : public std::runtime_error {
 public:
  HttpStatusError(int status, std::string body)
      : std::runtime_error("HTTP status " + std::to_string(status)),
        status_(status),
        body_(std::move(body)) {}
  int status() const { return status_; }
  const std::string& body() const { return body_; }

 private:
  int status_;
  std::string body_;
};

class EmptyCompletionError : public std::runtime_error {
 public:
  EmptyCompletionError() : std::runtime_error("empty completion") {}
};

/// The extractor answered with something the tolerant list parser cannot
/// read; carries the raw completion for diagnostics.
class ExtractParseError : public std::runtime_error {
 public:
  explicit ExtractParseError(std::string raw)
      : std::runtime_error("cannot parse extraction answer"),
        raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

/// Prompt templates. Exposed so tests can pin the emitted bytes.
std::string translate_prompt(const std::string& source, Direction direction,
                             Strategy strategy);
std::string extraction_prompt(const std::string& source,
                              const std::string& target);

/// Tolerant parser for the extractor's bracketed-list answers. Accepts
/// mixed quote styles (including the ``…" style), single quotes, trailing
/// commas, prose around the list, and tuples written with () or [].
/// Returns pairs in answer order; throws ExtractParseError otherwise.
std::vector<std::pair<std::string, std::string>> parse_pair_list(
    const std::string& text);

class LlmClient {
 public:
  explicit LlmClient(LlmConfig config);

  const LlmConfig& config() const { return config_; }

  /// Exact request body bytes for a prompt (stable across calls).
  std::string request_body(const std::string& prompt) const;

  /// Full completion text for one translation call.
  std::string translate(const std::string& source, Direction direction,
                        Strategy strategy) const;

  /// Runs the extraction prompt and parses the answer.
  std::vector<std::pair<std::string, std::string>> extract_pairs(
      const std::string& source, const std::string& target) const;

 private:
  std::string complete(const std::string& prompt) const;

  LlmConfig config_;
};

}  // namespace numtrans

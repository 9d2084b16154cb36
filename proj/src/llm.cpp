#include "numtrans/llm.hpp"

#include <chrono>
#include <iostream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "numtrans/text.hpp"

namespace numtrans {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Base: return "base";
    case Strategy::ICL: return "icl";
    case Strategy::COT: return "cot";
  }
  return "base";
}

Strategy strategy_from_string(std::string_view name) {
  std::string lower;
  for (char c : name)
    lower.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "base") return Strategy::Base;
  if (lower == "icl") return Strategy::ICL;
  if (lower == "cot") return Strategy::COT;
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

std::string translate_prompt(const std::string& source, Direction direction,
                             Strategy strategy) {
  const char* src = direction == Direction::ZhEn ? "Chinese" : "English";
  const char* tgt = direction == Direction::ZhEn ? "English" : "Chinese";
  std::string head = std::string("You are a good translator. Help me "
                                 "translate the ") +
                     src + " sentence into " + tgt + " sentence";
  std::string body;
  switch (strategy) {
    case Strategy::Base:
      head += ".\n";
      break;
    case Strategy::ICL:
      head += " based on the given unit conversion principle.\n";
      body =
          "Unit Conversion Principle:\n"
          "1 million = 100 万\n"
          "1 billion = 10 亿\n"
          "1 trillion = 1 万亿\n"
          "1 万 = 10 thousand\n"
          "1 亿 = 100 million\n";
      break;
    case Strategy::COT:
      head += " step by step.\n";
      body =
          "Please pay attention to the unit conversion between Chinese and "
          "English and first translate the numerical parts, and then "
          "translate the sentence.\n";
      break;
  }
  return head + body + src + " sentence: " + source + "\n" + tgt +
         " sentence:";
}

std::string extraction_prompt(const std::string& source,
                              const std::string& target) {
  return std::string(
             "You are an excellent extractor of numerical translation "
             "pairs. Please extract all the numerical translation pairs "
             "from the given [Source]-[Target] translation pairs. Please "
             "output the extracted numerical translation pairs in the form "
             "of list without giving any explanation. Here is an example: "
             "[Source]: It will provide EUR 72.2 billion over 7 years in "
             "funding. [Target]: 它将在7年内提供722亿欧元的资金。 "
             "output:[(\"72.2 billion\", \"722亿\")]. Here is the "
             "[Source]-[Target] translation pair you need to extract: "
             "[Source]: ") +
         source + ", [Target]: " + target;
}

namespace {

bool is_ws(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
         c == U'　';
}

std::size_t skip_ws(const std::u32string& s, std::size_t i) {
  while (i < s.size() && is_ws(s[i])) ++i;
  return i;
}

bool is_open_quote(char32_t c) {
  return c == U'"' || c == U'\'' || c == U'“' || c == U'‘' ||
         c == U'`';
}

bool closes(char32_t opener, char32_t c) {
  switch (opener) {
    case U'"': return c == U'"' || c == U'”';
    case U'\'': return c == U'\'' || c == U'’';
    case U'“': return c == U'”' || c == U'"';
    case U'‘': return c == U'’' || c == U'\'';
    case U'`': return c == U'\'' || c == U'"' || c == U'’';
  }
  return false;
}

struct Quoted {
  std::u32string text;
  std::size_t next = 0;
};

// Reads one quoted string. The closer must be followed by , ) ] or a
// trailing comma, so apostrophes inside the text do not end it early.
std::optional<Quoted> read_quoted(const std::u32string& s, std::size_t i) {
  if (i >= s.size() || !is_open_quote(s[i])) return std::nullopt;
  char32_t opener = s[i];
  std::size_t start = i + 1;
  if (opener == U'`' && start < s.size() && s[start] == U'`') ++start;
  for (std::size_t j = start; j < s.size(); ++j) {
    if (!closes(opener, s[j])) continue;
    std::size_t after = j + 1;
    // `` text '' closes with a doubled single quote
    if (s[j] == U'\'' && after < s.size() && s[after] == U'\'') ++after;
    std::size_t k = skip_ws(s, after);
    if (k < s.size() &&
        (s[k] == U',' || s[k] == U'，' || s[k] == U')' || s[k] == U']')) {
      return Quoted{s.substr(start, j - start), after};
    }
  }
  return std::nullopt;
}

struct Tuple {
  std::u32string a, b;
  std::size_t next = 0;
};

std::optional<Tuple> read_tuple(const std::u32string& s, std::size_t i) {
  if (i >= s.size() || (s[i] != U'(' && s[i] != U'[')) return std::nullopt;
  std::size_t j = skip_ws(s, i + 1);
  auto q1 = read_quoted(s, j);
  if (!q1) return std::nullopt;
  j = skip_ws(s, q1->next);
  if (j >= s.size() || (s[j] != U',' && s[j] != U'，'))
    return std::nullopt;
  j = skip_ws(s, j + 1);
  auto q2 = read_quoted(s, j);
  if (!q2) return std::nullopt;
  j = skip_ws(s, q2->next);
  if (j < s.size() && (s[j] == U',' || s[j] == U'，'))
    j = skip_ws(s, j + 1);
  if (j >= s.size() || (s[j] != U')' && s[j] != U']')) return std::nullopt;
  return Tuple{std::move(q1->text), std::move(q2->text), j + 1};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_pair_list(
    const std::string& text) {
  std::u32string s = decode_utf8(text);
  std::vector<std::pair<std::string, std::string>> out;
  bool saw_empty_list = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == U'[') {
      std::size_t j = skip_ws(s, i + 1);
      if (j < s.size() && s[j] == U']') saw_empty_list = true;
    }
    if (s[i] != U'(' && s[i] != U'[') continue;
    if (auto t = read_tuple(s, i)) {
      out.emplace_back(encode_utf8(t->a), encode_utf8(t->b));
      i = t->next - 1;
    }
  }
  if (out.empty() && !saw_empty_list) throw ExtractParseError(text);
  return out;
}

LlmClient::LlmClient(LlmConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty())
    throw std::invalid_argument("llm endpoint is not configured");
}

std::string LlmClient::request_body(const std::string& prompt) const {
  nlohmann::json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["seed"] = config_.seed;
  body["messages"] = nlohmann::json::array(
      {nlohmann::json{{"role", "user"}, {"content", prompt}}});
  return body.dump();
}

std::string LlmClient::complete(const std::string& prompt) const {
  const std::string body = request_body(prompt);
  const char* path = "/v1/chat/completions";
  httplib::Client cli(config_.endpoint);
  auto seconds = static_cast<time_t>(config_.timeout_seconds);
  auto usec = static_cast<time_t>(
      (config_.timeout_seconds - static_cast<double>(seconds)) * 1e6);
  cli.set_connection_timeout(seconds, usec);
  cli.set_read_timeout(seconds, usec);
  cli.set_write_timeout(seconds, usec);
  httplib::Headers headers;
  if (!config_.api_key.empty())
    headers.emplace("Authorization", "Bearer " + config_.api_key);

  int attempts = config_.max_retries + 1;
  std::string last_error;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(50 << attempt));
    if (config_.verbose)
      std::cerr << "llm: POST " << config_.endpoint << path << " attempt "
                << attempt + 1 << "/" << attempts << " body " << body << "\n";
    auto res = cli.Post(path, headers, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 408 || res->status == 429 || res->status >= 500) {
      last_error = "HTTP status " + std::to_string(res->status);
      if (attempt + 1 == attempts)
        throw HttpStatusError(res->status, res->body);
      continue;
    }
    if (res->status != 200) throw HttpStatusError(res->status, res->body);
    if (config_.verbose)
      std::cerr << "llm: response " << res->body << "\n";
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded()) throw EmptyCompletionError();
    auto content = reply["/choices/0/message/content"_json_pointer];
    if (!content.is_string() || content.get<std::string>().empty())
      throw EmptyCompletionError();
    return content.get<std::string>();
  }
  throw TransportError("request failed after " + std::to_string(attempts) +
                       " attempts: " + last_error);
}

std::string LlmClient::translate(const std::string& source,
                                 Direction direction,
                                 Strategy strategy) const {
  return complete(translate_prompt(source, direction, strategy));
}

std::vector<std::pair<std::string, std::string>> LlmClient::extract_pairs(
    const std::string& source, const std::string& target) const {
  return parse_pair_list(complete(extraction_prompt(source, target)));
}

}  // namespace numtrans

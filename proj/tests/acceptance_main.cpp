// End-to-end acceptance checks. Each criterion prints exactly one PASS or
// FAIL line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "generators.hpp"
#include "numtrans/errors.hpp"
#include "numtrans/eval.hpp"
#include "numtrans/format.hpp"
#include "numtrans/llm.hpp"
#include "numtrans/parse_en.hpp"
#include "numtrans/parse_zh.hpp"
#include "numtrans/text.hpp"
#include "numtrans/verify.hpp"
#include "oracles.hpp"

using namespace numtrans;

namespace {

#ifndef FIXTURES_DIR
#error "FIXTURES_DIR must point at the fixture directory"
#endif
const std::string kFixtures = FIXTURES_DIR;

int failures = 0;

void run(const std::string& name, const std::function<bool(std::string&)>& f) {
  std::string detail;
  bool ok = false;
  try {
    ok = f(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

// --- 1. the financial report sample -----------------------------------------

bool check_report_sample(std::string& detail) {
  const std::string source =
      "某公司去年的年收入超过了1000亿美元，净利润达到5000万美元，"
      "总资产达到三千五百亿美元，其中包括134亿美元的现金储备。";
  const std::string hypothesis =
      "A company's revenue last year exceeded $10 billion, net profit "
      "reached $50 million, and total assets reached $35 billion, including "
      "$3.4 billion in cash reserves.";

  auto start = std::chrono::steady_clock::now();
  PostEditReport report = post_edit(source, hypothesis, Direction::ZhEn,
                                    PostEditStyle::LargeUnit);
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  for (const char* needle :
       {"100 billion", "50 million", "350 billion", "13.4 billion"}) {
    if (report.edited.find(needle) == std::string::npos) {
      detail = std::string("missing \"") + needle + "\" in: " + report.edited;
      return false;
    }
  }
  if (report.edit_count != 3) {
    detail = "edit_count " + std::to_string(report.edit_count) + ", want 3";
    return false;
  }
  if (report.unresolved != 0) {
    detail = "unresolved " + std::to_string(report.unresolved);
    return false;
  }
  if (elapsed >= 1.0) {
    detail = "took " + std::to_string(elapsed) + "s, budget 1s";
    return false;
  }
  return true;
}

// --- 2. fixture reference coverage -------------------------------------------

bool check_fixture_coverage(std::string& detail) {
  auto items = load_dataset(kFixtures + "/table2.jsonl");
  if (items.size() != 20) {
    detail = "fixture has " + std::to_string(items.size()) + " items";
    return false;
  }
  int good = 0;
  for (const auto& item : items) {
    Utf8Text text = Utf8Text::decode(item.source);
    bool item_ok = true;
    for (const auto& entry : item.targets) {
      std::string phrase =
          text.slice(entry.source_span.begin, entry.source_span.end);
      CanonicalNumeral example =
          parse_number(phrase, source_lang(item.direction));
      auto forms = render_forms(example, target_lang(item.direction));
      for (const auto& ref : entry.references) {
        CanonicalNumeral parsed;
        try {
          parsed = parse_number(ref, target_lang(item.direction));
        } catch (const ParseError& e) {
          detail = item.id + ": reference \"" + ref +
                   "\" does not parse: " + e.what();
          item_ok = false;
          break;
        }
        if (!canonical_equal(example, parsed)) {
          detail = item.id + ": reference \"" + ref +
                   "\" parses to a different value";
          item_ok = false;
          break;
        }
        if (!forms.count(ref)) {
          detail = item.id + ": render_forms misses \"" + ref + "\"";
          item_ok = false;
          break;
        }
      }
      if (!item_ok) break;
    }
    if (item_ok) ++good;
  }
  if (good != 20) {
    detail = std::to_string(good) + "/20 items covered; first failure: " +
             detail;
    return false;
  }
  return true;
}

// --- 3. brute-force renderer inversion ---------------------------------------

bool check_oracle_inversion(std::string& detail) {
  for (unsigned long long n = 0; n <= 99999; ++n) {
    std::string words = oracles::zh_place_value(n);
    CanonicalNumeral c = parse_zh_number(words);
    if (c.values.size() != 1 ||
        c.values[0] != NumericValue::from_int(static_cast<long long>(n))) {
      detail = "zh " + std::to_string(n) + " via \"" + words + "\"";
      return false;
    }
  }
  for (unsigned long long d = 1; d <= 999; ++d) {
    for (int k = 4; k <= 12; ++k) {
      unsigned long long n = d;
      for (int i = 0; i < k; ++i) n *= 10;
      std::string words = oracles::zh_place_value(n);
      CanonicalNumeral c = parse_zh_number(words);
      NumericValue want =
          NumericValue::from_int(static_cast<long long>(d)).scaled(k);
      if (c.values.size() != 1 || c.values[0] != want) {
        detail = "zh " + std::to_string(d) + "e" + std::to_string(k) +
                 " via \"" + words + "\"";
        return false;
      }
    }
  }
  for (unsigned n = 0; n <= 9999; ++n) {
    std::string words = oracles::en_words(n);
    CanonicalNumeral c = parse_en_number(words);
    if (c.values.size() != 1 || c.values[0] != NumericValue::from_int(n)) {
      detail = "en " + std::to_string(n) + " via \"" + words + "\"";
      return false;
    }
  }
  return true;
}

// --- 4. render and reparse round trip ----------------------------------------

bool check_round_trip(std::string& detail) {
  std::mt19937 rng(424242);
  for (int i = 0; i < 10000; ++i) {
    CanonicalNumeral c = generators::random_canonical(rng);
    for (Lang lang : {Lang::EN, Lang::ZH}) {
      auto forms = render_forms(c, lang);
      if (forms.empty()) {
        detail = "no forms for case " + std::to_string(i);
        return false;
      }
      for (const auto& form : forms) {
        CanonicalNumeral back;
        try {
          back = parse_number(form, lang);
        } catch (const ParseError& e) {
          detail = "case " + std::to_string(i) + " form \"" + form +
                   "\" does not parse: " + e.what();
          return false;
        }
        if (!canonical_equal(c, back)) {
          detail = "case " + std::to_string(i) + " form \"" + form +
                   "\" reparses to a different value";
          return false;
        }
      }
    }
  }
  return true;
}

// --- 5. corruption repair ----------------------------------------------------

bool check_corruption_repair(std::string& detail) {
  std::mt19937 rng(20260818);
  for (int i = 0; i < 200; ++i) {
    Direction direction = i % 2 ? Direction::EnZh : Direction::ZhEn;
    int kind = i % 5;

    long long d;
    if (kind == 4) {
      d = 100 + static_cast<long long>(rng() % 900);
    } else {
      d = 1 + static_cast<long long>(rng() % 999);
    }
    int k = 4 + static_cast<int>(rng() % 9);
    NumericValue truth = NumericValue::from_int(d).scaled(k);

    NumericValue corrupted;
    bool zh_target = target_lang(direction) == Lang::ZH;
    switch (kind) {
      case 0: corrupted = truth.scaled(1); break;
      case 1: corrupted = truth.scaled(-1); break;
      case 2: corrupted = truth.scaled(zh_target ? 4 : 3); break;
      case 3: corrupted = truth.scaled(zh_target ? -4 : -3); break;
      default: {
        // drop the middle digit of a three-digit significand
        long long dropped = (d / 100) * 10 + d % 10;
        corrupted = NumericValue::from_int(dropped).scaled(k);
        break;
      }
    }

    CanonicalNumeral truth_canonical =
        CanonicalNumeral::scalar(NumericType::LargeUnit, truth);
    std::string source, target;
    if (direction == Direction::ZhEn) {
      source = "今年的总投资达到了" + render_large_unit(truth_canonical, Lang::ZH) +
               "元。";
      target = "Total investment reached " +
               render_large_unit(
                   CanonicalNumeral::scalar(NumericType::LargeUnit, corrupted),
                   Lang::EN) +
               " yuan this year.";
    } else {
      source = "The project budget reached " +
               render_large_unit(truth_canonical, Lang::EN) + " dollars.";
      target = "项目预算达到了" +
               render_large_unit(
                   CanonicalNumeral::scalar(NumericType::LargeUnit, corrupted),
                   Lang::ZH) +
               "美元。";
    }

    PostEditReport report =
        post_edit(source, target, direction, PostEditStyle::LargeUnit);
    if (report.edit_count != 1 || report.unresolved != 0) {
      detail = "case " + std::to_string(i) + " edits " +
               std::to_string(report.edit_count) + " unresolved " +
               std::to_string(report.unresolved) + " on: " + target;
      return false;
    }
    auto found = scan(report.edited, target_lang(direction));
    bool repaired = false;
    for (const auto& expr : found)
      if (canonical_equal(truth_canonical, expr.canonical)) repaired = true;
    if (!repaired) {
      detail = "case " + std::to_string(i) + " edited text \"" +
               report.edited + "\" does not carry the source value";
      return false;
    }

    PostEditReport second = post_edit(source, report.edited, direction,
                                      PostEditStyle::LargeUnit);
    if (second.edit_count != 0 || second.edited != report.edited) {
      detail = "case " + std::to_string(i) + " second pass edited " +
               std::to_string(second.edit_count) + " spans";
      return false;
    }
  }
  return true;
}

// --- 6. pass rate bookkeeping ------------------------------------------------

std::vector<std::pair<std::string, std::string>> load_hypotheses(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    out.emplace_back(j.at("id").get<std::string>(),
                     j.at("hypothesis").get<std::string>());
  }
  return out;
}

bool check_pass_rate(std::string& detail) {
  auto items = load_dataset(kFixtures + "/table2.jsonl");
  auto hyps = load_hypotheses(kFixtures + "/table2_hyps.jsonl");

  EvalResult base = pass_rate(items, hyps);
  if (base.passed != 14 || base.total != 20) {
    detail = "pass rate " + std::to_string(base.passed) + "/" +
             std::to_string(base.total) + ", hand count is 14/20";
    return false;
  }

  // extending a hypothesis can only add reference hits, never remove them
  std::map<std::string, std::string> by_id(hyps.begin(), hyps.end());
  for (const auto& item : items) {
    const std::string& h = by_id.at(item.id);
    bool before = judge(item, h).pass;
    if (before && !judge(item, h + " with further commentary").pass) {
      detail = "suffix flipped " + item.id + " to fail";
      return false;
    }
    std::string all = h;
    for (const auto& entry : item.targets)
      for (const auto& ref : entry.references) all += " " + ref;
    if (!judge(item, all).pass) {
      detail = "appending every reference did not satisfy " + item.id;
      return false;
    }
  }

  // shuffling items and hypotheses independently must not move any count
  std::mt19937 rng(99);
  for (int round = 0; round < 5; ++round) {
    auto shuffled_items = items;
    auto shuffled_hyps = hyps;
    std::shuffle(shuffled_items.begin(), shuffled_items.end(), rng);
    std::shuffle(shuffled_hyps.begin(), shuffled_hyps.end(), rng);
    EvalResult r = pass_rate(shuffled_items, shuffled_hyps);
    if (r.passed != base.passed || r.total != base.total) {
      detail = "shuffle changed the overall count";
      return false;
    }
    for (const auto& [direction, row] : base.by_type) {
      for (const auto& [type, cell] : row) {
        const EvalCell& other = r.by_type.at(direction).at(type);
        if (other.passed != cell.passed || other.total != cell.total) {
          detail = std::string("shuffle changed the ") + to_string(direction) +
                   " " + to_string(type) + " cell";
          return false;
        }
      }
    }
  }
  return true;
}

// --- 7. llm wire format ------------------------------------------------------

std::string golden_body(const std::string& prompt) {
  nlohmann::json body;
  body["model"] = "default";
  body["temperature"] = 0.0;
  body["seed"] = 0;
  body["messages"] = nlohmann::json::array(
      {nlohmann::json{{"role", "user"}, {"content", prompt}}});
  return body.dump();
}

bool check_llm_wire(std::string& detail) {
  httplib::Server server;
  std::vector<std::string> bodies;
  server.Post("/v1/chat/completions", [&](const httplib::Request& req,
                                          httplib::Response& res) {
    bodies.push_back(req.body);
    nlohmann::json reply{
        {"choices", nlohmann::json::array({nlohmann::json{
                        {"message",
                         nlohmann::json{{"content", "[(\"7\", \"7\")]"}}}}})}};
    res.set_content(reply.dump(), "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) {
    detail = "could not bind a loopback port";
    return false;
  }
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  bool ok = true;
  try {
    LlmConfig cfg;
    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port);
    LlmClient client(cfg);

    const std::string zh = "该公司去年的收入超过了1000亿美元。";
    client.translate(zh, Direction::ZhEn, Strategy::Base);
    client.translate(zh, Direction::ZhEn, Strategy::ICL);
    client.translate(zh, Direction::ZhEn, Strategy::COT);
    client.extract_pairs(
        "It will provide EUR 72.2 billion over 7 years in funding.",
        "它将在7年内提供722亿欧元的资金。");

    const std::string base_prompt =
        "You are a good translator. Help me translate the Chinese sentence "
        "into English sentence.\n"
        "Chinese sentence: " + zh + "\nEnglish sentence:";
    const std::string icl_prompt =
        "You are a good translator. Help me translate the Chinese sentence "
        "into English sentence based on the given unit conversion "
        "principle.\n"
        "Unit Conversion Principle:\n"
        "1 million = 100 万\n"
        "1 billion = 10 亿\n"
        "1 trillion = 1 万亿\n"
        "1 万 = 10 thousand\n"
        "1 亿 = 100 million\n"
        "Chinese sentence: " + zh + "\nEnglish sentence:";
    const std::string cot_prompt =
        "You are a good translator. Help me translate the Chinese sentence "
        "into English sentence step by step.\n"
        "Please pay attention to the unit conversion between Chinese and "
        "English and first translate the numerical parts, and then translate "
        "the sentence.\n"
        "Chinese sentence: " + zh + "\nEnglish sentence:";
    const std::string extract_prompt =
        "You are an excellent extractor of numerical translation pairs. "
        "Please extract all the numerical translation pairs from the given "
        "[Source]-[Target] translation pairs. Please output the extracted "
        "numerical translation pairs in the form of list without giving any "
        "explanation. Here is an example: [Source]: It will provide EUR "
        "72.2 billion over 7 years in funding. [Target]: "
        "它将在7年内提供722亿欧元的资金。 output:[(\"72.2 billion\", "
        "\"722亿\")]. Here is the [Source]-[Target] translation pair you "
        "need to extract: [Source]: It will provide EUR 72.2 billion over 7 "
        "years in funding., [Target]: 它将在7年内提供722亿欧元的资金。";

    const std::string golden[] = {golden_body(base_prompt),
                                  golden_body(icl_prompt),
                                  golden_body(cot_prompt),
                                  golden_body(extract_prompt)};
    const char* names[] = {"base", "icl", "cot", "extraction"};
    if (bodies.size() != 4) {
      detail = "captured " + std::to_string(bodies.size()) + " requests";
      ok = false;
    }
    for (std::size_t i = 0; ok && i < 4; ++i) {
      if (bodies[i] != golden[i]) {
        detail = std::string(names[i]) + " request body differs from golden";
        ok = false;
      }
    }
    if (ok && (bodies[3].find("72.2 billion") == std::string::npos ||
               bodies[3].find("722亿") == std::string::npos)) {
      detail = "extraction request is missing the worked example";
      ok = false;
    }
  } catch (...) {
    server.stop();
    thread.join();
    throw;
  }
  server.stop();
  thread.join();
  if (!ok) return false;

  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::pair<std::string, std::string>> pairs;
    int n = static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j)
      pairs.emplace_back(oracles::random_pair_text(rng),
                         oracles::random_pair_text(rng));
    std::string wire = oracles::fuzz_pair_list(pairs, rng);
    if (parse_pair_list(wire) != pairs) {
      detail = "fuzz case " + std::to_string(i) + " not inverted: " + wire;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run("post-edit corrects every unit error in the report sample",
      check_report_sample);
  run("fixture references parse and render consistently",
      check_fixture_coverage);
  run("parsers invert the brute-force word renderers", check_oracle_inversion);
  run("random canonicals survive render and reparse", check_round_trip);
  run("injected corruptions are repaired and repairs are idempotent",
      check_corruption_repair);
  run("pass rate matches the hand-labeled fixture", check_pass_rate);
  run("llm requests match golden bytes and extraction parsing inverts",
      check_llm_wire);
  return failures == 0 ? 0 : 1;
}

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numtrans/errors.hpp"
#include "numtrans/eval.hpp"
#include "numtrans/format.hpp"
#include "numtrans/llm.hpp"
#include "numtrans/parse_en.hpp"
#include "numtrans/serialize.hpp"
#include "numtrans/verify.hpp"

namespace {

using namespace numtrans;

std::vector<std::string> read_lines(const std::string& spec) {
  std::vector<std::string> lines;
  std::string line;
  auto take = [&](std::istream& in) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  };
  if (spec == "-") {
    take(std::cin);
  } else {
    std::ifstream f(spec, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input: " + spec);
    take(f);
  }
  return lines;
}

std::pair<std::string, std::string> split_pair(const std::string& line,
                                               std::size_t lineno) {
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos)
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": expected source<TAB>target");
  return {line.substr(0, tab), line.substr(tab + 1)};
}

LlmConfig llm_config_from_env(bool verbose) {
  LlmConfig cfg;
  if (const char* e = std::getenv("NUMTRANS_ENDPOINT")) cfg.endpoint = e;
  if (const char* e = std::getenv("NUMTRANS_API_KEY")) cfg.api_key = e;
  if (const char* e = std::getenv("NUMTRANS_MODEL")) cfg.model = e;
  if (const char* e = std::getenv("NUMTRANS_PARALLELISM"))
    cfg.parallelism = std::max(1, std::atoi(e));
  cfg.verbose = verbose;
  if (cfg.endpoint.empty())
    throw std::runtime_error(
        "NUMTRANS_ENDPOINT is not set; LLM calls need an endpoint");
  return cfg;
}

// Applies fn to every index with at most `par` workers; results keep input
// order and the first failure is rethrown.
template <typename Fn>
std::vector<std::string> parallel_map(std::size_t n, int par, Fn fn) {
  std::vector<std::string> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int workers = std::max(1, std::min<int>(par, static_cast<int>(n)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string canonical_text(const CanonicalNumeral& c) {
  std::string s = to_string(c.type);
  if (c.type == NumericType::NumberString) return s + " " + c.literal;
  if (c.op) s += std::string(" ") + to_string(*c.op);
  if (c.measure) s += std::string(" ") + to_string(*c.measure);
  for (auto& v : c.values) s += " " + v.to_plain_string();
  return s;
}

std::string surface_or_dash(const std::optional<SpannedExpression>& e) {
  return e ? e->surface : std::string("-");
}

struct Options {
  std::string text;
  std::string input = "-";
  std::string format = "text";
  std::string lang = "en";
  std::string direction = "en-zh";
  std::string style = "digits";
  std::string extractor = "rules";
  std::string strategy;
  std::string dataset;
  std::string hyp;
  bool pe = false;
  bool verbose = false;
};

Lang lang_from_name(const std::string& name) {
  if (name == "en") return Lang::EN;
  if (name == "zh") return Lang::ZH;
  throw std::runtime_error("unknown language: " + name);
}

std::vector<std::string> inputs_or_text(const Options& opt) {
  if (!opt.text.empty()) return {opt.text};
  return read_lines(opt.input);
}

int run_parse(const Options& opt) {
  Lang lang = lang_from_name(opt.lang);
  for (auto& line : inputs_or_text(opt)) {
    if (line.empty()) continue;
    CanonicalNumeral c = parse_number(line, lang);
    if (opt.format == "json")
      std::cout << canonical_to_json(c).dump() << "\n";
    else
      std::cout << canonical_text(c) << "\n";
  }
  return 0;
}

int run_genrefs(const Options& opt) {
  Direction dir = direction_from_string(opt.direction);
  for (auto& line : inputs_or_text(opt)) {
    if (line.empty()) continue;
    CanonicalNumeral c = parse_number(line, source_lang(dir));
    std::set<std::string> forms = render_forms(c, target_lang(dir));
    if (opt.format == "json") {
      nlohmann::json j{{"phrase", line},
                       {"canonical", canonical_to_json(c)},
                       {"forms", forms}};
      std::cout << j.dump() << "\n";
    } else {
      for (auto& f : forms) std::cout << f << "\n";
    }
  }
  return 0;
}

// Shared driver for extract / verify / postedit over source<TAB>target lines.
int run_pairwise(const Options& opt, const std::string& mode) {
  Direction dir = direction_from_string(opt.direction);
  PostEditStyle style = opt.style == "large_unit" ? PostEditStyle::LargeUnit
                                                  : PostEditStyle::Digits;
  std::optional<LlmClient> client;
  PairExtractor llm_extractor;
  const PairExtractor* extractor = nullptr;
  if (opt.extractor == "llm") {
    client.emplace(llm_config_from_env(opt.verbose));
    llm_extractor = [&client](const std::string& s, const std::string& t) {
      return client->extract_pairs(s, t);
    };
    extractor = &llm_extractor;
  }

  std::vector<std::string> lines = inputs_or_text(opt);
  std::size_t lineno = 0;
  for (auto& line : lines) {
    ++lineno;
    if (line.empty()) continue;
    auto [source, target] = split_pair(line, lineno);
    if (mode == "postedit") {
      PostEditReport r = post_edit(source, target, dir, style, extractor);
      if (opt.format == "json")
        std::cout << report_to_json(r).dump() << "\n";
      else
        std::cout << r.edited << "\n";
      continue;
    }
    std::vector<NumericPair> pairs = extract_pairs(source, target, dir,
                                                   extractor);
    if (mode == "verify")
      for (auto& p : pairs) p = verify_pair(std::move(p));
    if (opt.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (auto& p : pairs) arr.push_back(pair_to_json(p));
      std::cout << nlohmann::json{{"pairs", std::move(arr)}}.dump() << "\n";
    } else {
      for (auto& p : pairs) {
        if (mode == "verify") std::cout << to_string(p.verdict) << "\t";
        std::cout << surface_or_dash(p.source) << "\t"
                  << surface_or_dash(p.target) << "\n";
      }
    }
  }
  return 0;
}

std::vector<std::pair<std::string, std::string>> load_hypotheses(
    const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t lineno = 0;
  for (auto& line : read_lines(path)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
        !j.at("id").is_string() || !j.contains("hypothesis") ||
        !j.at("hypothesis").is_string())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected {\"id\", \"hypothesis\"}");
    out.emplace_back(j.at("id").get<std::string>(),
                     j.at("hypothesis").get<std::string>());
  }
  return out;
}

int run_evaluate(const Options& opt) {
  if (opt.dataset.empty()) throw std::runtime_error("--dataset is required");
  if (opt.hyp.empty() == opt.strategy.empty())
    throw std::runtime_error("pass exactly one of --hyp or --strategy");
  std::vector<DatasetItem> items = load_dataset(opt.dataset);

  std::vector<std::pair<std::string, std::string>> hyps;
  if (!opt.hyp.empty()) {
    hyps = load_hypotheses(opt.hyp);
  } else {
    Strategy strategy = strategy_from_string(opt.strategy);
    LlmClient client(llm_config_from_env(opt.verbose));
    std::vector<std::string> translations = parallel_map(
        items.size(), client.config().parallelism, [&](std::size_t i) {
          return client.translate(items[i].source, items[i].direction,
                                  strategy);
        });
    for (std::size_t i = 0; i < items.size(); ++i)
      hyps.emplace_back(items[i].id, std::move(translations[i]));
  }

  if (opt.pe) {
    PostEditStyle style = opt.style == "large_unit"
                              ? PostEditStyle::LargeUnit
                              : PostEditStyle::Digits;
    std::optional<LlmClient> client;
    PairExtractor llm_extractor;
    const PairExtractor* extractor = nullptr;
    if (opt.extractor == "llm") {
      client.emplace(llm_config_from_env(opt.verbose));
      llm_extractor = [&client](const std::string& s, const std::string& t) {
        return client->extract_pairs(s, t);
      };
      extractor = &llm_extractor;
    }
    std::map<std::string, const DatasetItem*> by_id;
    for (auto& item : items) by_id[item.id] = &item;
    for (auto& [id, hyp] : hyps) {
      auto it = by_id.find(id);
      if (it == by_id.end()) continue;  // pass_rate reports the mismatch
      hyp = post_edit(it->second->source, hyp, it->second->direction, style,
                      extractor)
                .edited;
    }
  }

  EvalResult result = pass_rate(items, hyps);
  if (opt.format == "json")
    std::cout << eval_to_json(result).dump() << "\n";
  else
    std::cout << render_eval_table(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numeric expression toolkit for zh/en translation pairs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool pairwise) {
    sub->add_option("--input", opt.input, "input file, or - for stdin");
    sub->add_option("--format", opt.format)
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", opt.verbose, "log LLM traffic to stderr");
    if (pairwise) {
      sub->add_option("--direction", opt.direction)
          ->check(CLI::IsMember({"en-zh", "zh-en"}))
          ->required();
    }
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a numeric phrase");
  parse->add_option("--lang", opt.lang)
      ->check(CLI::IsMember({"en", "zh"}))
      ->required();
  parse->add_option("text", opt.text, "phrase (otherwise read --input)");
  add_common(parse, false);

  CLI::App* genrefs = app.add_subcommand(
      "genrefs", "render accepted target-language forms of a source phrase");
  genrefs->add_option("--direction", opt.direction)
      ->check(CLI::IsMember({"en-zh", "zh-en"}))
      ->required();
  genrefs->add_option("text", opt.text, "phrase (otherwise read --input)");
  add_common(genrefs, false);

  CLI::App* extract = app.add_subcommand(
      "extract", "extract aligned numeric pairs from source<TAB>target lines");
  extract->add_option("text", opt.text, "pair (otherwise read --input)");
  extract->add_option("--extractor", opt.extractor)
      ->check(CLI::IsMember({"rules", "llm"}));
  add_common(extract, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "extract and verify numeric pairs from source<TAB>target lines");
  verify->add_option("text", opt.text, "pair (otherwise read --input)");
  verify->add_option("--extractor", opt.extractor)
      ->check(CLI::IsMember({"rules", "llm"}));
  add_common(verify, true);

  CLI::App* postedit = app.add_subcommand(
      "postedit", "rewrite mismatched numbers in source<TAB>target lines");
  postedit->add_option("text", opt.text, "pair (otherwise read --input)");
  postedit->add_option("--style", opt.style)
      ->check(CLI::IsMember({"digits", "large_unit"}));
  postedit->add_option("--extractor", opt.extractor)
      ->check(CLI::IsMember({"rules", "llm"}));
  add_common(postedit, true);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "pass-rate report over a dataset");
  evaluate->add_option("--dataset", opt.dataset, "dataset JSONL")->required();
  evaluate->add_option("--hyp", opt.hyp, "hypotheses JSONL (id, hypothesis)");
  evaluate->add_option("--strategy", opt.strategy,
                       "translate via the configured LLM endpoint")
      ->check(CLI::IsMember({"base", "icl", "cot"}));
  evaluate->add_flag("--pe", opt.pe, "post-edit hypotheses before judging");
  evaluate->add_option("--style", opt.style)
      ->check(CLI::IsMember({"digits", "large_unit"}));
  evaluate->add_option("--extractor", opt.extractor)
      ->check(CLI::IsMember({"rules", "llm"}));
  add_common(evaluate, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) return run_parse(opt);
    if (genrefs->parsed()) return run_genrefs(opt);
    if (extract->parsed()) return run_pairwise(opt, "extract");
    if (verify->parsed()) return run_pairwise(opt, "verify");
    if (postedit->parsed()) return run_pairwise(opt, "postedit");
    if (evaluate->parsed()) return run_evaluate(opt);
  } catch (const ParseError& e) {
    std::cerr << "numtrans: " << e.what() << " (offset " << e.offset() << ")";
    if (e.ambiguous()) {
      std::cerr << "; candidates:";
      for (auto& c : e.candidates()) std::cerr << " " << c;
    }
    std::cerr << "\n";
    return 1;
  } catch (const DatasetError& e) {
    std::cerr << "numtrans: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    if (!e.field().empty()) std::cerr << " [" << e.field() << "]";
    std::cerr << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numtrans: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

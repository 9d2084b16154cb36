#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <string>

#include "numtrans/errors.hpp"
#include "numtrans/eval.hpp"
#include "numtrans/serialize.hpp"
#include "numtrans/text.hpp"

using namespace numtrans;

namespace {

std::string fixture(const char* name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

std::vector<std::pair<std::string, std::string>> load_hyps(const char* name) {
  std::ifstream in(fixture(name), std::ios::binary);
  REQUIRE(in.good());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    out.emplace_back(j.at("id").get<std::string>(),
                     j.at("hypothesis").get<std::string>());
  }
  return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "eval_test_" + name + ".jsonl";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("the reference dataset loads with spans intact") {
  auto items = load_dataset(fixture("table2.jsonl"));
  REQUIRE(items.size() == 20);
  for (const auto& item : items) {
    CHECK(!item.targets.empty());
    Utf8Text t = Utf8Text::decode(item.source);
    for (const auto& entry : item.targets) {
      CHECK(entry.source_span.begin < entry.source_span.end);
      CHECK(entry.source_span.end <= t.size());
      CHECK(!entry.references.empty());
    }
  }
  CHECK(items[0].id == "t2-large-unit-en-zh");
  CHECK(items[0].direction == Direction::EnZh);
  CHECK(items[0].type == NumericType::LargeUnit);
  Utf8Text t0 = Utf8Text::decode(items[0].source);
  CHECK(t0.slice(items[0].targets[0].source_span.begin,
                 items[0].targets[0].source_span.end) == "2.82 billion");
}

TEST_CASE("dataset loading reports the offending line") {
  auto ok =
      R"({"id":"a","direction":"en-zh","type":"decimal","source":"has 2.5 in it","targets":[{"span":[4,7],"references":["2.5"]}]})";
  std::string path = write_temp("lines", std::string(ok) + "\nnot json\n");
  try {
    load_dataset(path);
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(e.line() == 2);
  }

  std::string dup = write_temp("dup", std::string(ok) + "\n" + ok + "\n");
  try {
    load_dataset(dup);
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("duplicate id") != std::string::npos);
  }

  CHECK_THROWS_AS(load_dataset("does_not_exist.jsonl"), DatasetError);

  std::string blank = write_temp("blank", std::string(ok) + "\n\n");
  CHECK(load_dataset(blank).size() == 1);
}

TEST_CASE("judging is normalized substring containment") {
  DatasetItem item;
  item.id = "j";
  item.direction = Direction::EnZh;
  item.type = NumericType::Range;
  item.source = "between 300 and 500 people";
  item.targets.push_back({{8, 19}, {"300~500", "300到500"}});

  CHECK(judge(item, "人数在300到500之间。").pass);
  CHECK(judge(item, "人数在300~500之间。").pass);
  // tilde and dash are one class after normalization
  CHECK(judge(item, "人数在300-500之间。").pass);
  CHECK(judge(item, "人数在３００～５００之间。").pass);
  auto miss = judge(item, "人数在300之间。");
  CHECK(!miss.pass);
  REQUIRE(miss.unmet.size() == 1);
  CHECK(miss.unmet[0] == 0);

  // every span must be covered
  item.targets.push_back({{0, 7}, {"不存在"}});
  auto partial = judge(item, "人数在300到500之间。");
  CHECK(!partial.pass);
  REQUIRE(partial.unmet.size() == 1);
  CHECK(partial.unmet[0] == 1);
}

TEST_CASE("pass rate on the labeled fixture") {
  auto items = load_dataset(fixture("table2.jsonl"));
  auto hyps = load_hyps("table2_hyps.jsonl");
  auto result = pass_rate(items, hyps);
  CHECK(result.total == 20);
  CHECK(result.passed == 14);
  REQUIRE(result.verdicts.size() == 20);
  CHECK(result.verdicts[0] ==
        std::pair<std::string, bool>{"t2-large-unit-en-zh", true});
  CHECK(result.verdicts[1] ==
        std::pair<std::string, bool>{"t2-large-unit-zh-en", false});

  auto& enzh = result.by_type.at(Direction::EnZh);
  auto& zhen = result.by_type.at(Direction::ZhEn);
  CHECK(enzh.at(NumericType::LargeUnit).passed == 1);
  CHECK(enzh.at(NumericType::LargeUnit).total == 1);
  CHECK(zhen.at(NumericType::LargeUnit).passed == 0);
  CHECK(enzh.at(NumericType::Range).passed == 1);
  CHECK(zhen.at(NumericType::Range).passed == 1);
  CHECK(enzh.at(NumericType::NegativeNumber).passed == 0);
  CHECK(zhen.at(NumericType::Ordinal).passed == 1);
  CHECK(enzh.at(NumericType::Ordinal).passed == 0);
  CHECK(zhen.at(NumericType::Special).passed == 0);

  int per_type_total = 0, per_type_passed = 0;
  for (auto& [dir, cells] : result.by_type)
    for (auto& [type, cell] : cells) {
      per_type_total += cell.total;
      per_type_passed += cell.passed;
    }
  CHECK(per_type_total == result.total);
  CHECK(per_type_passed == result.passed);
}

TEST_CASE("hypothesis bookkeeping is strict") {
  auto items = load_dataset(fixture("table2.jsonl"));
  auto hyps = load_hyps("table2_hyps.jsonl");

  auto shortened = hyps;
  shortened.pop_back();
  CHECK_THROWS_AS(pass_rate(items, shortened), DatasetError);

  auto duped = hyps;
  duped[3].first = duped[2].first;
  CHECK_THROWS_AS(pass_rate(items, duped), DatasetError);

  auto renamed = hyps;
  renamed[5].first = "unknown-id";
  CHECK_THROWS_AS(pass_rate(items, renamed), DatasetError);
}

TEST_CASE("appending text never turns a pass into a fail") {
  auto items = load_dataset(fixture("table2.jsonl"));
  auto hyps = load_hyps("table2_hyps.jsonl");
  std::map<std::string, std::string> by_id(hyps.begin(), hyps.end());
  std::mt19937 rng(7);
  const char* suffixes[] = {" 附加说明。", " extra words", "!!!", " 300到500"};
  for (const auto& item : items) {
    std::string h = by_id.at(item.id);
    bool before = judge(item, h).pass;
    std::string grown = h;
    for (int i = 0; i < 3; ++i) {
      grown += suffixes[rng() % 4];
      if (before) CHECK(judge(item, grown).pass);
      // appending a reference string can only help
      grown += " " + item.targets[0].references[0];
      CHECK(judge(item, grown).pass);
    }
  }
}

TEST_CASE("shuffling items and hypotheses together changes nothing") {
  auto items = load_dataset(fixture("table2.jsonl"));
  auto hyps = load_hyps("table2_hyps.jsonl");
  auto base = pass_rate(items, hyps);

  std::mt19937 rng(99);
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int round = 0; round < 5; ++round) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<DatasetItem> si;
    std::vector<std::pair<std::string, std::string>> sh;
    for (auto idx : order) {
      si.push_back(items[idx]);
      sh.push_back(hyps[idx]);
    }
    // hypothesis order is independent of item order
    std::shuffle(sh.begin(), sh.end(), rng);
    auto shuffled = pass_rate(si, sh);
    CHECK(shuffled.passed == base.passed);
    CHECK(shuffled.total == base.total);
    for (auto& [dir, cells] : base.by_type)
      for (auto& [type, cell] : cells) {
        CHECK(shuffled.by_type.at(dir).at(type).passed == cell.passed);
        CHECK(shuffled.by_type.at(dir).at(type).total == cell.total);
      }
  }
}

TEST_CASE("the table names every type it scored") {
  auto items = load_dataset(fixture("table2.jsonl"));
  auto hyps = load_hyps("table2_hyps.jsonl");
  auto table = render_eval_table(pass_rate(items, hyps));
  CHECK(table.find("pass rate: 14/20 (70.0%)") != std::string::npos);
  CHECK(table.find("large_unit") != std::string::npos);
  CHECK(table.find("number_string") != std::string::npos);
  CHECK(table.find("special") != std::string::npos);
  CHECK(table.find("en-zh") != std::string::npos);
  CHECK(table.find("zh-en") != std::string::npos);
  CHECK(table.find("1/1 (100.0%)") != std::string::npos);
}

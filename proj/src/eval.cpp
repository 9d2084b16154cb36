#include "numtrans/eval.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "numtrans/errors.hpp"
#include "numtrans/serialize.hpp"
#include "numtrans/text.hpp"

namespace numtrans {
namespace {

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

const NumericType kTypeOrder[] = {
    NumericType::LargeUnit,     NumericType::Range,
    NumericType::Decimal,       NumericType::NumberString,
    NumericType::Fraction,      NumericType::Ratio,
    NumericType::NegativeNumber, NumericType::Formula,
    NumericType::Ordinal,       NumericType::Special};

// percentage with one decimal, integer arithmetic only
std::string pct(int passed, int total) {
  if (total == 0) return "-";
  int permille = (passed * 2000 + total) / (2 * total);
  return std::to_string(permille / 10) + "." + std::to_string(permille % 10) +
         "%";
}

std::string cell_text(const EvalCell& cell) {
  return std::to_string(cell.passed) + "/" + std::to_string(cell.total) +
         " (" + pct(cell.passed, cell.total) + ")";
}

}  // namespace

std::vector<DatasetItem> load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open dataset: " + path, 0, "");
  std::vector<DatasetItem> items;
  std::set<std::string> seen;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (blank(line)) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DatasetError("invalid json", ln, "");
    DatasetItem item;
    try {
      item = dataset_item_from_json(j);
    } catch (const DatasetError& e) {
      throw DatasetError(e.what(), ln, e.field());
    }
    if (!seen.insert(item.id).second)
      throw DatasetError("duplicate id: " + item.id, ln, "id");
    items.push_back(std::move(item));
  }
  return items;
}

JudgeResult judge(const DatasetItem& item, const std::string& hypothesis) {
  std::string hyp = normalize_for_match(hypothesis);
  JudgeResult result;
  for (std::size_t i = 0; i < item.targets.size(); ++i) {
    bool hit = false;
    for (auto& ref : item.targets[i].references) {
      std::string needle = normalize_for_match(ref);
      if (!needle.empty() && hyp.find(needle) != std::string::npos) {
        hit = true;
        break;
      }
    }
    if (!hit) result.unmet.push_back(i);
  }
  result.pass = result.unmet.empty();
  return result;
}

EvalResult pass_rate(
    const std::vector<DatasetItem>& items,
    const std::vector<std::pair<std::string, std::string>>& hypotheses) {
  std::map<std::string, const std::string*> by_id;
  std::size_t pos = 0;
  for (auto& [id, hyp] : hypotheses) {
    ++pos;
    if (!by_id.emplace(id, &hyp).second)
      throw DatasetError("duplicate hypothesis id: " + id, pos, "id");
  }
  if (hypotheses.size() != items.size())
    throw DatasetError("hypothesis count " + std::to_string(hypotheses.size()) +
                           " does not match item count " +
                           std::to_string(items.size()),
                       0, "");
  EvalResult result;
  for (auto& item : items) {
    auto it = by_id.find(item.id);
    if (it == by_id.end())
      throw DatasetError("no hypothesis for id: " + item.id, 0, "id");
    bool pass = judge(item, *it->second).pass;
    EvalCell& cell = result.by_type[item.direction][item.type];
    ++cell.total;
    ++result.total;
    if (pass) {
      ++cell.passed;
      ++result.passed;
    }
    result.verdicts.emplace_back(item.id, pass);
  }
  return result;
}

std::string render_eval_table(const EvalResult& result) {
  std::vector<Direction> dirs;
  for (auto& [dir, cells] : result.by_type) dirs.push_back(dir);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"type"};
  for (Direction d : dirs) header.push_back(to_string(d));
  rows.push_back(header);
  for (NumericType t : kTypeOrder) {
    bool any = false;
    std::vector<std::string> row{to_string(t)};
    for (Direction d : dirs) {
      const auto& cells = result.by_type.at(d);
      auto it = cells.find(t);
      if (it != cells.end() && it->second.total > 0) {
        row.push_back(cell_text(it->second));
        any = true;
      } else {
        row.push_back("-");
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  std::vector<std::string> overall{"overall"};
  for (Direction d : dirs) {
    EvalCell sum;
    for (auto& [type, cell] : result.by_type.at(d)) {
      sum.passed += cell.passed;
      sum.total += cell.total;
    }
    overall.push_back(cell_text(sum));
  }
  rows.push_back(std::move(overall));

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  std::ostringstream out;
  for (auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(widths[i] - row[i].size(), ' ');
    }
    out << "\n";
  }
  out << "pass rate: " << result.passed << "/" << result.total << " ("
      << pct(result.passed, result.total) << ")\n";
  return out.str();
}

}  // namespace numtrans

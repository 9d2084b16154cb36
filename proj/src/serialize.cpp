#include "numtrans/serialize.hpp"

#include <utility>

#include "numtrans/errors.hpp"
#include "numtrans/text.hpp"

namespace numtrans {
namespace {

std::string field_type(const nlohmann::json& j, const char* key,
                       nlohmann::json::value_t t, const char* what) {
  if (!j.contains(key))
    throw DatasetError(std::string("missing field: ") + key, 0, key);
  if (j.at(key).type() != t)
    throw DatasetError(std::string(key) + " must be " + what, 0, key);
  return key;
}

nlohmann::json values_to_json(const std::vector<NumericValue>& values) {
  nlohmann::json a = nlohmann::json::array();
  for (auto& v : values) a.push_back(v.to_plain_string());
  return a;
}

}  // namespace

nlohmann::json canonical_to_json(const CanonicalNumeral& c) {
  nlohmann::json j;
  j["type"] = to_string(c.type);
  if (c.type == NumericType::NumberString) {
    j["literal"] = c.literal;
    return j;
  }
  j["values"] = values_to_json(c.values);
  if (c.op) j["op"] = to_string(*c.op);
  if (c.measure) j["measure"] = to_string(*c.measure);
  return j;
}

CanonicalNumeral canonical_from_json(const nlohmann::json& j) {
  NumericType type = numeric_type_from_string(j.at("type").get<std::string>());
  if (type == NumericType::NumberString)
    return CanonicalNumeral::number_string(j.at("literal").get<std::string>());
  std::vector<NumericValue> values;
  for (auto& v : j.at("values"))
    values.push_back(NumericValue::from_decimal_string(v.get<std::string>()));
  switch (type) {
    case NumericType::Range:
      return CanonicalNumeral::range(values.at(0), values.at(1));
    case NumericType::Fraction:
      return CanonicalNumeral::fraction(values.at(0), values.at(1));
    case NumericType::Ratio:
      return CanonicalNumeral::ratio(values.at(0), values.at(1));
    case NumericType::Ordinal:
      return CanonicalNumeral::ordinal(values.at(0));
    case NumericType::Formula:
      return CanonicalNumeral::formula(
          j.at("op").get<std::string>() == "add" ? FormulaOp::Add
                                                 : FormulaOp::Mul,
          std::move(values));
    case NumericType::Special:
      return CanonicalNumeral::special(
          j.at("measure").get<std::string>() == "fold" ? Measure::Fold
                                                       : Measure::Megapixel,
          values.at(0));
    default:
      return CanonicalNumeral::scalar(type, values.at(0));
  }
}

nlohmann::json spanned_to_json(const SpannedExpression& e) {
  return nlohmann::json{{"span", {e.span.begin, e.span.end}},
                        {"surface", e.surface},
                        {"canonical", canonical_to_json(e.canonical)}};
}

nlohmann::json pair_to_json(const NumericPair& p) {
  nlohmann::json j;
  j["verdict"] = to_string(p.verdict);
  if (p.source) j["source"] = spanned_to_json(*p.source);
  if (p.target) j["target"] = spanned_to_json(*p.target);
  if (p.expected) j["expected"] = canonical_to_json(*p.expected);
  if (!p.reason.empty()) j["reason"] = p.reason;
  return j;
}

nlohmann::json report_to_json(const PostEditReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto& p : r.pairs) pairs.push_back(pair_to_json(p));
  return nlohmann::json{{"edited", r.edited},
                        {"edit_count", r.edit_count},
                        {"unresolved", r.unresolved},
                        {"pairs", std::move(pairs)}};
}

nlohmann::json dataset_item_to_json(const DatasetItem& item) {
  nlohmann::json targets = nlohmann::json::array();
  for (auto& t : item.targets) {
    targets.push_back(
        nlohmann::json{{"span", {t.source_span.begin, t.source_span.end}},
                       {"references", t.references}});
  }
  return nlohmann::json{{"id", item.id},
                        {"direction", to_string(item.direction)},
                        {"type", to_string(item.type)},
                        {"source", item.source},
                        {"targets", std::move(targets)}};
}

DatasetItem dataset_item_from_json(const nlohmann::json& j) {
  using vt = nlohmann::json::value_t;
  if (!j.is_object()) throw DatasetError("item must be an object", 0, "");
  DatasetItem item;
  field_type(j, "id", vt::string, "a string");
  item.id = j.at("id").get<std::string>();
  if (item.id.empty()) throw DatasetError("id is empty", 0, "id");
  field_type(j, "direction", vt::string, "a string");
  try {
    item.direction = direction_from_string(j.at("direction").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DatasetError(e.what(), 0, "direction");
  }
  field_type(j, "type", vt::string, "a string");
  try {
    item.type = numeric_type_from_string(j.at("type").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DatasetError(e.what(), 0, "type");
  }
  field_type(j, "source", vt::string, "a string");
  item.source = j.at("source").get<std::string>();
  field_type(j, "targets", vt::array, "an array");
  if (j.at("targets").empty())
    throw DatasetError("targets must be non-empty", 0, "targets");
  std::size_t source_cps = decode_utf8(item.source).size();
  std::size_t idx = 0;
  for (auto& t : j.at("targets")) {
    std::string where = "targets[" + std::to_string(idx) + "]";
    if (!t.is_object())
      throw DatasetError("target entry must be an object", 0, where);
    auto is_index = [](const nlohmann::json& x) {
      return x.is_number_integer() && x.get<long long>() >= 0;
    };
    if (!t.contains("span") || !t.at("span").is_array() ||
        t.at("span").size() != 2 || !is_index(t.at("span").at(0)) ||
        !is_index(t.at("span").at(1)))
      throw DatasetError("span must be [begin, end]", 0, where + ".span");
    TargetEntry entry;
    entry.source_span.begin = t.at("span").at(0).get<std::size_t>();
    entry.source_span.end = t.at("span").at(1).get<std::size_t>();
    if (entry.source_span.begin >= entry.source_span.end ||
        entry.source_span.end > source_cps)
      throw DatasetError("span out of bounds", 0, where + ".span");
    if (!t.contains("references") || !t.at("references").is_array() ||
        t.at("references").empty())
      throw DatasetError("references must be a non-empty array", 0,
                         where + ".references");
    for (auto& r : t.at("references")) {
      if (!r.is_string() || r.get<std::string>().empty())
        throw DatasetError("references must be non-empty strings", 0,
                           where + ".references");
      entry.references.push_back(r.get<std::string>());
    }
    item.targets.push_back(std::move(entry));
    ++idx;
  }
  return item;
}

nlohmann::json eval_to_json(const EvalResult& result) {
  nlohmann::json by_type = nlohmann::json::object();
  for (auto& [dir, cells] : result.by_type) {
    nlohmann::json row = nlohmann::json::object();
    for (auto& [type, cell] : cells)
      row[to_string(type)] =
          nlohmann::json{{"passed", cell.passed}, {"total", cell.total}};
    by_type[to_string(dir)] = std::move(row);
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (auto& [id, pass] : result.verdicts)
    verdicts.push_back(nlohmann::json{{"id", id}, {"pass", pass}});
  return nlohmann::json{{"passed", result.passed},
                        {"total", result.total},
                        {"by_type", std::move(by_type)},
                        {"verdicts", std::move(verdicts)}};
}

}  // namespace numtrans

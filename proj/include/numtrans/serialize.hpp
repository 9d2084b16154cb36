#pragma once

#include <json.hpp>

#include "numtrans/canonical.hpp"
#include "numtrans/eval.hpp"
#include "numtrans/verify.hpp"

namespace numtrans {

// JSON views of the core types. Values are serialized as exact decimal
// strings; nothing goes through floating point.

nlohmann::json canonical_to_json(const CanonicalNumeral& c);
CanonicalNumeral canonical_from_json(const nlohmann::json& j);

nlohmann::json spanned_to_json(const SpannedExpression& e);
nlohmann::json pair_to_json(const NumericPair& p);
nlohmann::json report_to_json(const PostEditReport& r);

nlohmann::json dataset_item_to_json(const DatasetItem& item);
DatasetItem dataset_item_from_json(const nlohmann::json& j);

nlohmann::json eval_to_json(const EvalResult& result);

}  // namespace numtrans

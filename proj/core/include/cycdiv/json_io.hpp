#pragma once

#include <json.hpp>

#include "cycdiv/bounds.hpp"
#include "cycdiv/constructions.hpp"
#include "cycdiv/divisor_search.hpp"

namespace cycdiv {

using json = nlohmann::json;

// Int values are emitted as JSON numbers when they fit in 2^53, decimal
// strings otherwise; parsing accepts both.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json factored_to_json(const FactoredInt& n);
FactoredInt factored_from_json(const json& j);

json series_to_json(const IntSeries& s);
IntSeries series_from_json(const json& j);

/// {n, r, value, witness_subset}; r omitted for B(n) records.
json search_result_to_json(const SearchResult& res, std::optional<std::size_t> r);
SearchResult search_result_from_json(const json& j);

json witness_report_to_json(const WitnessReport& w);
WitnessReport witness_report_from_json(const json& j);

json bound_report_to_json(const BoundReport& b);

}  // namespace cycdiv

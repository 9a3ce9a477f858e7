#pragma once

#include <string>

#include "discrete_remez/favard.hpp"
#include "discrete_remez/remez_bounds.hpp"
#include "discrete_remez/remez_span.hpp"
#include "discrete_remez/span.hpp"
#include "discrete_remez/spread.hpp"

namespace discrete_remez {

// JSON documents for the report types. Numbers are written in shortest
// round-trip form; non-finite values become null.

std::string to_json(const SpanResult& r);
std::string to_json(const BoundReport& r);
std::string to_json(const RemezEstimate& r);
std::string to_json(const FalsifyReport& r);
std::string to_json(const FavardResult& r);
std::string to_json(const SpreadReport& r);
std::string to_json(const SpanningTree& t);

/// CSV with header p,eta_lo,eta_hi,exact.
std::string eta_table_to_csv(const SpreadReport& r);

}  // namespace discrete_remez

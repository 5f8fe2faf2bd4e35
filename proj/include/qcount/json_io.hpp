#pragma once

#include <json.hpp>

#include "qcount/moduli.hpp"
#include "qcount/partition.hpp"
#include "qcount/series.hpp"

namespace qcount {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// QPolynomial <-> JSON array of coefficient strings "num/den", ascending degree.
json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const json& j);

/// RatFunc <-> {"num": [...], "den": [...]}.
json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

/// Partition <-> array of parts in decreasing order.
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json dimvector_to_json(const DimVector& v);
DimVector dimvector_from_json(const json& j);

/// Quiver <-> {"n": int, "arrows": [[...], ...]}.
json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// Stability <-> {"theta": [...]}.
json stability_to_json(const Stability& s);
Stability stability_from_json(const json& j);

/// Series <-> sorted list of {"alpha": [...], "coeff": {...}}.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j, const SeriesBox& box);

}  // namespace qcount

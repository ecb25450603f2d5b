#pragma once

#include <string>

#include <json.hpp>

#include "edgespec/forbidden.hpp"
#include "edgespec/graph.hpp"
#include "edgespec/search.hpp"
#include "edgespec/spectral.hpp"
#include "edgespec/stability.hpp"

namespace edgespec {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; NaN and infinities become null.
Json real(double x);
/// printf("%.12g").
std::string format_real(double x);

/// {"n": n, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Json to_json(const SpectralResult& r);
Json to_json(const ForbiddenProfile& p);
/// elapsedMs is omitted when `stable` is set.
Json to_json(const SearchRecord& r, bool stable);
Json to_json(const NikiforovRow& r);
Json to_json(const StructureReport& r);
Json to_json(const AsymptoticReport& r);
Json to_json(const Table1Report& r);
Json to_json(const BnRow& r);
Json to_json(const OnsetReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const StabilityBatch& b);
Json to_json(const BlowupBatch& b);
Json to_json(const TuranBounds& b);

}  // namespace edgespec

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "condscreen/evalmetrics.hpp"
#include "condscreen/screening.hpp"

namespace condscreen {

/// Key order is fixed so serialized reports are deterministic byte for byte.
using Json = nlohmann::ordered_json;

struct MethodReport {
    Method method = Method::CSIRS;
    EvaluationMetrics metrics; // simulate mode
    ScreeningResult result;    // screen mode
};

/// Shortest round-trip decimal form of v ("1" for 1.0, "0.65", "1e-12").
std::string format_double(double v);

Json metrics_to_json(const EvaluationMetrics& m);

/// { manifest, methods: { <NAME>: { metrics: {R, S_quantiles, P_a, P_k} } } }
Json simulate_report(const Json& manifest, const std::vector<MethodReport>& methods);

/// { manifest, methods: { <NAME>: { utilities, ranking, selected } },
///   predictors: [...] }; the per-predictor table is sorted by the first
/// listed method's rank (the CLI puts CSIRS first when requested).
Json screen_report(const Json& manifest, const std::vector<MethodReport>& methods,
                   const std::vector<std::string>& predictor_names);

/// Long-format metrics table, one row per value: metric,key,subkey,value.
std::string metrics_csv(const EvaluationMetrics& m);

/// Per-predictor wide table: predictor,<m>_utility,<m>_rank,... sorted by
/// the first method's rank.
std::string screen_csv(const std::vector<MethodReport>& methods,
                       const std::vector<std::string>& predictor_names);

/// Writes atomically enough for our purposes: builds content first, then a
/// single stream write; throws Error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace condscreen

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condscreen/csvio.hpp"
#include "condscreen/simgen.hpp"
#include "condscreen/screening.hpp"

namespace condscreen {

enum class Mode { Simulate, ScreenFile };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    Mode mode = Mode::Simulate;
    ScenarioSpec scenario;                       // Simulate only
    int replications = 100;
    std::vector<Method> methods = {Method::CSIRS};
    std::vector<int> d_list;                     // explicit cutoffs, or
    std::vector<int> nu_list;                    // nu values via submodel_size
    std::optional<double> bandwidth;             // fixed override of the default rule
    std::uint64_t seed = 0;
    int threads = 1;                             // 0 = hardware concurrency
    std::string output_path;
    OutputFormat format = OutputFormat::Json;
    bool quiet = false;
};

/// One diagnostic line per invalid field; empty means valid. `input` is
/// consulted only in ScreenFile mode.
std::vector<std::string> validate_config(const RunConfig& config,
                                         const ScreenFileInput* input = nullptr);

/// d values for this run: d_list if given, else nu_list (default {1,2,3})
/// through submodel_size(n, nu). Clamped nowhere; invalid values throw
/// InvalidCutoff downstream.
std::vector<int> resolve_cutoffs(const RunConfig& config, Eigen::Index n);

int resolve_threads(int threads);

/// Seeded replication study. Writes, at completion only:
///   json: <output_path> with {manifest, methods:{<NAME>:{metrics}}}
///   csv:  <output_path>.manifest.json plus <output_path>.<name>.csv per method
/// Replications run concurrently; reports are byte-identical for any thread
/// count (per-replication streams, fixed-order aggregation; the manifest
/// carries no wall time or thread count for the same reason).
void run_simulation(const RunConfig& config);

/// Screens one CSV dataset. Writes <output_path> (json: full report; csv:
/// per-predictor table, manifest in <output_path>.manifest.json).
void run_screen_file(const RunConfig& config, const ScreenFileInput& input);

} // namespace condscreen

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condscreen/errors.hpp"
#include "condscreen/runner.hpp"

namespace {

int parse_threads(const std::string& s) {
    if (s == "auto") return 0;
    try {
        const int t = std::stoi(s);
        if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw condscreen::Error("threads: expected a positive integer or 'auto', got '" + s + "'");
}

} // namespace

int main(int argc, char** argv) {
    using namespace condscreen;

    CLI::App app{"condscreen: conditional feature screening (C-SIRS) and baselines"};
    app.set_config("--config", "", "flat key=value config file; flags override it");

    std::string mode = "simulate";
    std::string scenario = "Ex1Case1";
    long long n = 200;
    long long p = 1000;
    double rho = 0.5;
    int reps = 100;
    std::vector<std::string> methods = {"csirs"};
    std::vector<int> d_list;
    std::vector<int> nu_list;
    double bandwidth = 0.0;
    std::uint64_t seed = 0;
    std::string threads = "auto";
    std::string out;
    std::string format = "json";
    std::string data_path;
    std::string response_col;
    std::string exposure_col;
    bool quiet = false;

    app.add_option("--mode", mode, "simulate | screen")
        ->check(CLI::IsMember({"simulate", "screen"}));
    app.add_option("--scenario", scenario, "Ex1Case1 Ex1Case2 Ex2Case1 Ex2Case2 Ex2Case3 Ex2Case4");
    app.add_option("--n", n, "sample size (simulate)");
    app.add_option("--p", p, "predictor count (simulate)");
    app.add_option("--rho", rho, "AR(1) correlation of the Gaussian design");
    app.add_option("--reps", reps, "number of replications (simulate)");
    app.add_option("--methods", methods, "comma-separated: csirs,sirs,dcsis,ccsis")
        ->delimiter(',');
    app.add_option("--d", d_list, "explicit submodel sizes, e.g. 16,32,48")->delimiter(',');
    app.add_option("--nu", nu_list, "submodel multipliers resolved as nu*floor(n^0.8/ln n^0.8)")
        ->delimiter(',');
    auto* bw_opt = app.add_option("--bandwidth", bandwidth, "fixed kernel bandwidth h (default: 1.06*sd(u)*n^-0.2)");
    app.add_option("--seed", seed, "master seed; replication r uses stream (seed, r)");
    app.add_option("--threads", threads, "worker threads, or 'auto'")
        ->envname("CONDSCREEN_THREADS");
    app.add_option("--out", out, "output path (json: the file; csv: path/stem)")->required();
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--data", data_path, "input CSV (screen mode)");
    app.add_option("--response", response_col, "response column name (screen mode)");
    app.add_option("--exposure", exposure_col, "exposure column name (screen mode)");
    app.add_flag("--quiet", quiet, "suppress progress lines on stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config;
        config.mode = mode == "screen" ? Mode::ScreenFile : Mode::Simulate;
        config.scenario.name = scenario_from_string(scenario);
        config.scenario.n = n;
        config.scenario.p = p;
        config.scenario.rho = rho;
        config.replications = reps;
        config.methods.clear();
        for (const auto& m : methods) config.methods.push_back(method_from_string(m));
        config.d_list = d_list;
        config.nu_list = nu_list;
        if (bw_opt->count() > 0) config.bandwidth = bandwidth;
        config.seed = seed;
        config.threads = parse_threads(threads);
        config.output_path = out;
        config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        config.quiet = quiet;

        ScreenFileInput input{data_path, response_col, exposure_col};
        const auto errors = validate_config(config, &input);
        if (!errors.empty()) {
            for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
            return 2;
        }

        if (config.mode == Mode::Simulate) {
            run_simulation(config);
        } else {
            run_screen_file(config, input);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

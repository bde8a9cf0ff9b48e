#include "condscreen/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <iostream>
#include <mutex>
#include <thread>

#include <Eigen/Core>

#include "condscreen/errors.hpp"
#include "condscreen/evalmetrics.hpp"
#include "condscreen/baselines.hpp"
#include "condscreen/report.hpp"

namespace condscreen {

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string lower_name(Method m) {
    std::string s = method_name(m);
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

Json version_block() {
    Json v;
    v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." +
                 std::to_string(EIGEN_MAJOR_VERSION) + "." +
                 std::to_string(EIGEN_MINOR_VERSION);
    v["compiler"] = __VERSION__;
    return v;
}

Json bandwidth_block(const std::optional<double>& override_h) {
    Json b;
    if (override_h) {
        b["rule"] = "fixed";
        b["value"] = *override_h;
    } else {
        b["rule"] = "default: 1.06 * sd(u) * n^(-1/5)";
        b["value"] = nullptr; // resolved per dataset; reproducible from rule + seed
    }
    return b;
}

Json method_list(const std::vector<Method>& methods) {
    Json a = Json::array();
    for (Method m : methods) a.push_back(method_name(m));
    return a;
}

UtilityVector run_method(Method m, const DataSet& data, const KernelSpec& ks) {
    switch (m) {
        case Method::CSIRS: return csirs_all(data, ks, kDefaultEps, 1);
        case Method::SIRS: return sirs_utility_all(data);
        case Method::DCSIS: return dcsis_utility_all(data);
        case Method::CCSIS: return ccsis_utility_all(data, ks);
    }
    throw Error("run_method: unknown method");
}

} // namespace

std::vector<std::string> validate_config(const RunConfig& config,
                                         const ScreenFileInput* input) {
    std::vector<std::string> errs;
    if (config.methods.empty()) errs.push_back("methods: at least one method is required");
    if (config.output_path.empty()) errs.push_back("out: output path is required");
    if (config.threads < 0) errs.push_back("threads: must be >= 1, or 0/'auto'");
    for (int d : config.d_list) {
        if (d < 1) errs.push_back("d: cutoff " + std::to_string(d) + " must be >= 1");
    }
    for (int nu : config.nu_list) {
        if (nu < 1) errs.push_back("nu: multiplier " + std::to_string(nu) + " must be >= 1");
    }
    if (!config.d_list.empty() && !config.nu_list.empty()) {
        errs.push_back("d/nu: give explicit cutoffs or nu multipliers, not both");
    }
    if (config.bandwidth && !(*config.bandwidth > 0.0)) {
        errs.push_back("bandwidth: must be > 0");
    }
    if (config.mode == Mode::Simulate) {
        if (config.replications < 1) errs.push_back("reps: must be >= 1");
        if (config.scenario.n < 2) errs.push_back("n: sample size must be >= 2");
        if (config.scenario.p < 5) errs.push_back("p: need at least 5 predictors for the active set");
        if (!(config.scenario.rho >= 0.0 && config.scenario.rho < 1.0)) {
            errs.push_back("rho: must lie in [0, 1)");
        }
        const bool nus_ok = std::all_of(config.nu_list.begin(), config.nu_list.end(),
                                        [](int v) { return v >= 1; });
        if (config.scenario.n >= 2 && nus_ok) {
            for (int d : resolve_cutoffs(config, config.scenario.n)) {
                if (d > config.scenario.p) {
                    errs.push_back("d: cutoff " + std::to_string(d) + " exceeds p = " +
                                   std::to_string(config.scenario.p) +
                                   (config.d_list.empty() ? " (resolved from nu)" : ""));
                }
            }
        }
    } else {
        if (input == nullptr) {
            errs.push_back("data: screen mode requires an input file");
        } else {
            if (input->path.empty()) errs.push_back("data: input CSV path is required");
            if (input->response_column.empty()) errs.push_back("response: column name is required");
            if (input->exposure_column.empty()) errs.push_back("exposure: column name is required");
        }
    }
    return errs;
}

std::vector<int> resolve_cutoffs(const RunConfig& config, Eigen::Index n) {
    if (!config.d_list.empty()) return config.d_list;
    std::vector<int> nus = config.nu_list.empty() ? std::vector<int>{1, 2, 3} : config.nu_list;
    std::vector<int> ds;
    ds.reserve(nus.size());
    for (int nu : nus) ds.push_back(submodel_size(n, nu));
    return ds;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void run_simulation(const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> cutoffs = resolve_cutoffs(config, config.scenario.n);
    for (int d : cutoffs) {
        if (d < 1 || d > config.scenario.p) {
            throw InvalidCutoff("cutoff " + std::to_string(d) + " outside [1, p]");
        }
    }
    const std::vector<int> active = config.scenario.resolved_active();
    const int reps = config.replications;
    const auto n_methods = config.methods.size();

    // slot per (method, replication) so aggregation order is fixed
    std::vector<std::vector<ScreeningResult>> results(
        n_methods, std::vector<ScreeningResult>(static_cast<std::size_t>(reps)));
    std::vector<int> clamp_counts(static_cast<std::size_t>(reps), 0);

    std::atomic<int> next{0};
    std::atomic<int> done{0};
    std::mutex io_mutex;
    std::atomic<bool> failed{false};
    std::string failure;
    int last_decile = 0;

    auto worker = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= reps || failed.load()) return;
            try {
                ScenarioSpec rep_spec = config.scenario;
                rep_spec.seed = stream_seed(config.seed, static_cast<std::uint64_t>(r));
                const Replication rep = generate(rep_spec);
                clamp_counts[static_cast<std::size_t>(r)] = rep.eta_clamp_count;
                const KernelSpec ks = fixed_bandwidth(
                    config.bandwidth ? *config.bandwidth : default_bandwidth(rep.data.u));
                for (std::size_t m = 0; m < n_methods; ++m) {
                    UtilityVector util = run_method(config.methods[m], rep.data, ks);
                    results[m][static_cast<std::size_t>(r)] = rank_and_select(util, cutoffs);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(io_mutex);
                failed.store(true);
                if (failure.empty()) failure = e.what();
                return;
            }
            const int completed = done.fetch_add(1) + 1;
            if (!config.quiet) {
                const int decile = completed * 10 / reps;
                std::lock_guard<std::mutex> lock(io_mutex);
                if (decile > last_decile) {
                    last_decile = decile;
                    std::cerr << "progress: " << decile * 10 << "% (" << completed
                              << "/" << reps << " replications)\n";
                }
            }
        }
    };

    const int n_threads = std::min(resolve_threads(config.threads), reps);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) throw Error("replication failed: " + failure);

    long long clamp_total = 0;
    for (int c : clamp_counts) clamp_total += c;

    Json manifest;
    manifest["tool"] = "condscreen";
    manifest["version"] = kToolVersion;
    manifest["versions"] = version_block();
    manifest["mode"] = "simulate";
    Json sc;
    sc["name"] = scenario_name(config.scenario.name);
    sc["n"] = config.scenario.n;
    sc["p"] = config.scenario.p;
    sc["rho"] = config.scenario.rho;
    sc["active"] = active;
    manifest["scenario"] = std::move(sc);
    manifest["seed"] = config.seed;
    manifest["replications"] = reps;
    manifest["methods"] = method_list(config.methods);
    manifest["cutoffs"] = cutoffs;
    manifest["kernel"] = "epanechnikov";
    manifest["bandwidth"] = bandwidth_block(config.bandwidth);
    manifest["eps"] = kDefaultEps;
    manifest["eta_clamp_total"] = clamp_total;

    std::vector<MethodReport> method_reports;
    method_reports.reserve(n_methods);
    for (std::size_t m = 0; m < n_methods; ++m) {
        MethodReport mr;
        mr.method = config.methods[m];
        mr.metrics = aggregate(results[m], active, cutoffs);
        method_reports.push_back(std::move(mr));
    }

    if (config.format == OutputFormat::Json) {
        write_text_file(config.output_path,
                        simulate_report(manifest, method_reports).dump(1) + "\n");
    } else {
        write_text_file(config.output_path + ".manifest.json", manifest.dump(1) + "\n");
        for (const auto& mr : method_reports) {
            write_text_file(config.output_path + "." + lower_name(mr.method) + ".csv",
                            metrics_csv(mr.metrics));
        }
    }

    if (!config.quiet) {
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
        std::cerr << "completed " << reps << " replications in " << dt.count() << " s\n";
    }
}

void run_screen_file(const RunConfig& config, const ScreenFileInput& input) {
    const NamedDataSet nd = load_screen_csv(input);
    const std::vector<int> cutoffs = resolve_cutoffs(config, nd.data.n());
    for (int d : cutoffs) {
        if (d < 1 || d > nd.data.p()) {
            throw InvalidCutoff("cutoff " + std::to_string(d) + " outside [1, p]");
        }
    }
    const double h = config.bandwidth ? *config.bandwidth : default_bandwidth(nd.data.u);
    const KernelSpec ks = fixed_bandwidth(h);

    // CSIRS first so the per-predictor table is sorted by its rank
    std::vector<Method> methods = config.methods;
    const auto csirs_at = std::find(methods.begin(), methods.end(), Method::CSIRS);
    if (csirs_at != methods.end()) std::rotate(methods.begin(), csirs_at, csirs_at + 1);

    std::vector<MethodReport> method_reports;
    method_reports.reserve(methods.size());
    for (Method m : methods) {
        MethodReport mr;
        mr.method = m;
        mr.result = rank_and_select(run_method(m, nd.data, ks), cutoffs);
        method_reports.push_back(std::move(mr));
    }

    Json manifest;
    manifest["tool"] = "condscreen";
    manifest["version"] = kToolVersion;
    manifest["versions"] = version_block();
    manifest["mode"] = "screen";
    Json in;
    in["path"] = input.path;
    in["response"] = input.response_column;
    in["exposure"] = input.exposure_column;
    manifest["input"] = std::move(in);
    manifest["n"] = nd.data.n();
    manifest["p"] = nd.data.p();
    manifest["methods"] = method_list(methods);
    manifest["cutoffs"] = cutoffs;
    manifest["kernel"] = "epanechnikov";
    Json b;
    b["rule"] = config.bandwidth ? "fixed" : "default: 1.06 * sd(u) * n^(-1/5)";
    b["value"] = h;
    manifest["bandwidth"] = std::move(b);
    manifest["eps"] = kDefaultEps;

    if (config.format == OutputFormat::Json) {
        write_text_file(config.output_path,
                        screen_report(manifest, method_reports, nd.predictor_names).dump(1) + "\n");
    } else {
        write_text_file(config.output_path + ".manifest.json", manifest.dump(1) + "\n");
        write_text_file(config.output_path, screen_csv(method_reports, nd.predictor_names));
    }
}

} // namespace condscreen

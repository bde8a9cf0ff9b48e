#include "condscreen/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "condscreen/errors.hpp"

namespace condscreen {

std::string format_double(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string percent_key(double level) {
    const double pct = level * 100.0;
    const double nearest = std::round(pct);
    if (std::abs(pct - nearest) < 1e-9) {
        return std::to_string(static_cast<long long>(nearest));
    }
    return format_double(pct);
}

} // namespace

Json metrics_to_json(const EvaluationMetrics& m) {
    Json j;
    Json r = Json::object();
    for (const auto& [k, v] : m.rank_by_active) r[std::to_string(k)] = v;
    j["R"] = std::move(r);
    Json s = Json::object();
    for (const auto& [level, v] : m.min_model_size_quantiles) s[percent_key(level)] = v;
    j["S_quantiles"] = std::move(s);
    Json pa = Json::object();
    for (const auto& [d, v] : m.p_all) pa[std::to_string(d)] = v;
    j["P_a"] = std::move(pa);
    Json pk = Json::object();
    for (const auto& [d, by_k] : m.p_each) {
        Json inner = Json::object();
        for (const auto& [k, v] : by_k) inner[std::to_string(k)] = v;
        pk[std::to_string(d)] = std::move(inner);
    }
    j["P_k"] = std::move(pk);
    return j;
}

Json simulate_report(const Json& manifest, const std::vector<MethodReport>& methods) {
    Json j;
    j["manifest"] = manifest;
    Json ms = Json::object();
    for (const auto& mr : methods) {
        Json entry;
        entry["metrics"] = metrics_to_json(mr.metrics);
        ms[method_name(mr.method)] = std::move(entry);
    }
    j["methods"] = std::move(ms);
    return j;
}

Json screen_report(const Json& manifest, const std::vector<MethodReport>& methods,
                   const std::vector<std::string>& predictor_names) {
    Json j;
    j["manifest"] = manifest;
    Json ms = Json::object();
    for (const auto& mr : methods) {
        Json entry;
        entry["utilities"] = std::vector<double>(
            mr.result.utilities.omega.data(),
            mr.result.utilities.omega.data() + mr.result.utilities.omega.size());
        entry["ranking"] = mr.result.ranking;
        Json sel = Json::object();
        for (const auto& [d, idx] : mr.result.selected) sel[std::to_string(d)] = idx;
        entry["selected"] = std::move(sel);
        ms[method_name(mr.method)] = std::move(entry);
    }
    j["methods"] = std::move(ms);

    Json table = Json::array();
    if (!methods.empty()) {
        for (int k : methods.front().result.ranking) {
            Json row;
            row["predictor"] = predictor_names[static_cast<std::size_t>(k) - 1];
            for (const auto& mr : methods) {
                const std::string name = method_name(mr.method);
                row[name + "_utility"] = mr.result.utilities.omega[k - 1];
                row[name + "_rank"] = mr.result.position[static_cast<std::size_t>(k) - 1];
            }
            table.push_back(std::move(row));
        }
    }
    j["predictors"] = std::move(table);
    return j;
}

std::string metrics_csv(const EvaluationMetrics& m) {
    std::ostringstream out;
    out << "metric,key,subkey,value\n";
    for (const auto& [k, v] : m.rank_by_active) {
        out << "R," << k << ",," << format_double(v) << "\n";
    }
    for (const auto& [level, v] : m.min_model_size_quantiles) {
        out << "S_quantile," << percent_key(level) << ",," << format_double(v) << "\n";
    }
    for (const auto& [d, v] : m.p_all) {
        out << "P_a," << d << ",," << format_double(v) << "\n";
    }
    for (const auto& [d, by_k] : m.p_each) {
        for (const auto& [k, v] : by_k) {
            out << "P_k," << d << "," << k << "," << format_double(v) << "\n";
        }
    }
    return out.str();
}

std::string screen_csv(const std::vector<MethodReport>& methods,
                       const std::vector<std::string>& predictor_names) {
    std::ostringstream out;
    out << "predictor";
    for (const auto& mr : methods) {
        const std::string name = method_name(mr.method);
        out << "," << name << "_utility," << name << "_rank";
    }
    out << "\n";
    if (methods.empty()) return out.str();
    for (int k : methods.front().result.ranking) {
        out << predictor_names[static_cast<std::size_t>(k) - 1];
        for (const auto& mr : methods) {
            out << "," << format_double(mr.result.utilities.omega[k - 1])
                << "," << mr.result.position[static_cast<std::size_t>(k) - 1];
        }
        out << "\n";
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file) throw Error("failed writing '" + path + "'");
}

} // namespace condscreen

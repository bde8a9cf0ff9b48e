#include "condscreen/csvio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "condscreen/errors.hpp"

namespace condscreen {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col,
                  const std::string& name) {
    const std::string s = trimmed(raw);
    double value = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty()) {
        throw ParseError("row " + std::to_string(row) + ", column '" + name +
                         "' (index " + std::to_string(col) + "): cannot parse '" +
                         s + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw NonFiniteValue("row " + std::to_string(row) + ", column '" + name +
                             "': non-finite value");
    }
    return value;
}

} // namespace

NamedDataSet load_screen_csv(const ScreenFileInput& input) {
    std::ifstream file(input.path);
    if (!file) throw ParseError("cannot open '" + input.path + "'");

    std::string line;
    if (!std::getline(file, line)) throw ParseError("'" + input.path + "': empty file");
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = trimmed(h);

    std::ptrdiff_t y_col = -1;
    std::ptrdiff_t u_col = -1;
    std::vector<std::size_t> x_cols;
    NamedDataSet out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == input.response_column) {
            y_col = static_cast<std::ptrdiff_t>(c);
        } else if (header[c] == input.exposure_column) {
            u_col = static_cast<std::ptrdiff_t>(c);
        } else {
            x_cols.push_back(c);
            out.predictor_names.push_back(header[c]);
        }
    }
    if (y_col < 0) throw MissingColumn("response column '" + input.response_column + "' not in header");
    if (u_col < 0) throw MissingColumn("exposure column '" + input.exposure_column + "' not in header");
    if (x_cols.empty()) throw InvalidDataSet("'" + input.path + "': no predictor columns");

    std::vector<std::vector<double>> rows;
    std::size_t row_no = 1; // header is row 1
    while (std::getline(file, line)) {
        ++row_no;
        if (trimmed(line).empty()) continue;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(row_no) + ": expected " +
                             std::to_string(header.size()) + " cells, found " +
                             std::to_string(cells.size()));
        }
        std::vector<double> parsed(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            parsed[c] = parse_cell(cells[c], row_no, c + 1, header[c]);
        }
        rows.push_back(std::move(parsed));
    }

    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto p = static_cast<Eigen::Index>(x_cols.size());
    out.data.x.resize(n, p);
    out.data.y.resize(n);
    out.data.u.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        out.data.y[i] = r[static_cast<std::size_t>(y_col)];
        out.data.u[i] = r[static_cast<std::size_t>(u_col)];
        for (Eigen::Index k = 0; k < p; ++k) {
            out.data.x(i, k) = r[x_cols[static_cast<std::size_t>(k)]];
        }
    }
    validate_dataset(out.data);
    return out;
}

} // namespace condscreen

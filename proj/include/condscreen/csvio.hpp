#pragma once

#include <string>
#include <vector>

#include "condscreen/dataset.hpp"

namespace condscreen {

/// A CSV screening input: one response column, one exposure column, every
/// other column a predictor. Comma-separated, header row required, UTF-8,
/// '.' decimal separator, no quoting.
struct ScreenFileInput {
    std::string path;
    std::string response_column;
    std::string exposure_column;
};

struct NamedDataSet {
    DataSet data;
    std::vector<std::string> predictor_names; // column k-1 of data.x
};

/// Throws ParseError (with 1-based row/column location), MissingColumn,
/// NonFiniteValue, or InvalidDataSet.
NamedDataSet load_screen_csv(const ScreenFileInput& input);

} // namespace condscreen

#include "condscreen/dataset.hpp"

#include <string>

namespace condscreen {

void validate_dataset(const DataSet& data, Eigen::Index min_n) {
    const Eigen::Index n = data.x.rows();
    if (n < min_n) {
        throw InvalidDataSet("dataset: n = " + std::to_string(n) + " < " + std::to_string(min_n));
    }
    if (data.x.cols() < 1) {
        throw InvalidDataSet("dataset: p must be >= 1");
    }
    if (data.y.size() != n || data.u.size() != n) {
        throw InvalidDataSet("dataset: y/u length does not match the number of rows of x");
    }
    if (!data.x.allFinite() || !data.y.allFinite() || !data.u.allFinite()) {
        throw InvalidDataSet("dataset: non-finite entry");
    }
}

} // namespace condscreen

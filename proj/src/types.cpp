#include "clusterbench/types.hpp"

#include <cmath>
#include <sstream>

namespace clusterbench {

std::string to_string(const Violation& v) {
    std::ostringstream out;
    if (v.row) {
        out << "row " << *v.row;
        if (v.col) out << ", column " << *v.col;
        out << ": ";
    }
    out << v.reason;
    return out.str();
}

std::vector<Violation> validate_data(const DataMatrix& data) {
    std::vector<Violation> out;
    if (data.rows < 1) out.push_back({std::nullopt, std::nullopt, "n >= 1 required"});
    if (data.cols < 1) out.push_back({std::nullopt, std::nullopt, "d >= 1 required"});
    if (data.values.size() != data.rows * data.cols) {
        out.push_back({std::nullopt, std::nullopt, "value count does not match rows*cols"});
        return out;
    }
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < data.cols; ++j) {
            if (!std::isfinite(data.at(i, j))) {
                out.push_back({i, j, "entry is not finite"});
            }
        }
    }
    return out;
}

}  // namespace clusterbench

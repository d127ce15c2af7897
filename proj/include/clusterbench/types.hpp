#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterbench {

// n x d observation matrix, row-major: row i is the i-th d-dimensional point.
struct DataMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    DataMatrix() = default;
    DataMatrix(std::size_t n, std::size_t d) : rows(n), cols(d), values(n * d, 0.0) {}
    DataMatrix(std::size_t n, std::size_t d, std::vector<double> v) : rows(n), cols(d), values(std::move(v)) {
        if (values.size() != rows * cols) throw std::invalid_argument("DataMatrix: value count does not match rows*cols");
    }

    std::span<const double> row(std::size_t i) const { return {values.data() + i * cols, cols}; }
    std::span<double> row(std::size_t i) { return {values.data() + i * cols, cols}; }
    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }

    bool operator==(const DataMatrix&) const = default;
};

// k cluster centers of dimension dim, row-major.
struct CentroidSet {
    std::size_t count = 0;
    std::size_t dim = 0;
    std::vector<double> values;

    CentroidSet() = default;
    CentroidSet(std::size_t k, std::size_t d) : count(k), dim(d), values(k * d, 0.0) {}
    CentroidSet(std::size_t k, std::size_t d, std::vector<double> v) : count(k), dim(d), values(std::move(v)) {
        if (values.size() != count * dim) throw std::invalid_argument("CentroidSet: value count does not match count*dim");
    }

    std::span<const double> center(std::size_t j) const { return {values.data() + j * dim, dim}; }
    std::span<double> center(std::size_t j) { return {values.data() + j * dim, dim}; }

    bool operator==(const CentroidSet&) const = default;
};

// Length-n labeling; labels[i] is the cluster index of point i, in [0, k).
struct HardAssignment {
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }

    bool operator==(const HardAssignment&) const = default;
};

// n x c row-stochastic membership matrix: at(i, j) is the degree of
// membership of point i in cluster j. Entries lie in [0, 1] and each row
// sums to 1.
struct MembershipMatrix {
    std::size_t rows = 0;
    std::size_t clusters = 0;
    std::vector<double> values;

    MembershipMatrix() = default;
    MembershipMatrix(std::size_t n, std::size_t c) : rows(n), clusters(c), values(n * c, 0.0) {}

    std::span<const double> row(std::size_t i) const { return {values.data() + i * clusters, clusters}; }
    std::span<double> row(std::size_t i) { return {values.data() + i * clusters, clusters}; }
    double at(std::size_t i, std::size_t j) const { return values[i * clusters + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * clusters + j]; }

    bool operator==(const MembershipMatrix&) const = default;
};

// One failed invariant; row/col are matrix indices when the defect is
// localized to a single entry.
struct Violation {
    std::optional<std::size_t> row;
    std::optional<std::size_t> col;
    std::string reason;
};

std::string to_string(const Violation& v);

// Checks every DataMatrix invariant. Empty result means the matrix is valid;
// otherwise one entry per defect.
std::vector<Violation> validate_data(const DataMatrix& data);

}  // namespace clusterbench

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterbench/random.hpp"
#include "clusterbench/types.hpp"

namespace clusterbench {

struct LabeledDataset {
    DataMatrix data;
    std::optional<std::vector<std::string>> labels;         // length n when present
    std::optional<std::vector<std::string>> feature_names;  // length d when present
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }      // 1-based, 0 when not applicable
    std::size_t column() const { return column_; }  // 1-based, 0 when not applicable

private:
    std::size_t line_;
    std::size_t column_;
};

struct LoadCsvOptions {
    char delimiter = ',';
    // Explicit label column index; by default the last column that fails to
    // parse as a number in every row becomes the label column.
    std::optional<std::size_t> label_column;
    bool skip_blank = true;
};

// Delimiter-separated numeric rows, one observation per line, optional class
// column. Numeric tokens are plain decimal or exponent literals; decimal
// commas are rejected.
LabeledDataset load_csv(std::istream& in, const LoadCsvOptions& options = {});
LabeledDataset load_csv_file(const std::filesystem::path& path, const LoadCsvOptions& options = {});

// Inverse of load_csv at full 64-bit precision (shortest round-trip decimal
// forms, LF line endings).
void write_csv(std::ostream& out, const LabeledDataset& ds, char delimiter = ',');
std::string to_csv(const LabeledDataset& ds, char delimiter = ',');

// Column projection in the given index order; indices must be distinct and in
// range. Labels are carried over unchanged.
LabeledDataset select_features(const LabeledDataset& ds, std::span<const std::size_t> indices);

struct BlobSpec {
    std::size_t cluster_count = 1;
    std::size_t points_per_cluster = 1;
    std::size_t dimension = 1;
    double center_min = 0.0;
    double center_max = 1.0;
    double spread = 0.1;  // nonnegative; points land within +-spread of their center
};

// k centers drawn uniformly per coordinate in [center_min, center_max], then
// points_per_cluster points per center offset by uniform perturbations in
// [-spread, spread), emitted cluster-major. Labels record the generating
// cluster ("blob-0", "blob-1", ...).
LabeledDataset generate_blobs(const BlobSpec& spec, RandomStream rng);

}  // namespace clusterbench

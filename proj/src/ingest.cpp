#include "clusterbench/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "clusterbench/util.hpp"

namespace clusterbench {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

bool parse_number(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !token.empty();
}

struct RawRow {
    std::size_t line;  // 1-based line number in the source
    std::vector<std::string> tokens;
};

}  // namespace

LabeledDataset load_csv(std::istream& in, const LoadCsvOptions& options) {
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (options.skip_blank && trim(line).empty()) continue;
        RawRow row{line_number, {}};
        std::string_view rest = line;
        for (;;) {
            const std::size_t cut = rest.find(options.delimiter);
            row.tokens.emplace_back(trim(rest.substr(0, cut)));
            if (cut == std::string_view::npos) break;
            rest.remove_prefix(cut + 1);
        }
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw ParseError("read error");
    if (rows.empty()) throw ParseError("no data rows");

    const std::size_t width = rows.front().tokens.size();
    for (const RawRow& row : rows) {
        if (row.tokens.size() != width) {
            std::ostringstream msg;
            msg << "line " << row.line << ": expected " << width << " columns, found " << row.tokens.size();
            throw ParseError(msg.str(), row.line);
        }
    }

    // A column is numeric when every entry parses; by default the last
    // non-numeric column holds the class labels.
    std::vector<bool> numeric(width, true);
    for (const RawRow& row : rows)
        for (std::size_t c = 0; c < width; ++c) {
            double ignored;
            if (numeric[c] && !parse_number(row.tokens[c], ignored)) numeric[c] = false;
        }

    std::optional<std::size_t> label_col = options.label_column;
    if (label_col) {
        if (*label_col >= width) throw ParseError("label column index out of range");
    } else {
        for (std::size_t c = 0; c < width; ++c)
            if (!numeric[c]) label_col = c;
    }

    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < width; ++c)
        if (!label_col || c != *label_col) feature_cols.push_back(c);
    if (feature_cols.empty()) throw ParseError("no numeric columns");

    LabeledDataset ds;
    ds.data = DataMatrix(rows.size(), feature_cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t f = 0; f < feature_cols.size(); ++f) {
            const std::size_t c = feature_cols[f];
            double value;
            if (!parse_number(rows[r].tokens[c], value)) {
                std::ostringstream msg;
                msg << "line " << rows[r].line << ", column " << (c + 1) << ": non-numeric token '"
                    << rows[r].tokens[c] << "'";
                throw ParseError(msg.str(), rows[r].line, c + 1);
            }
            ds.data.at(r, f) = value;
        }
    }
    if (label_col) {
        std::vector<std::string> labels;
        labels.reserve(rows.size());
        for (const RawRow& row : rows) labels.push_back(row.tokens[*label_col]);
        ds.labels = std::move(labels);
    }
    return ds;
}

LabeledDataset load_csv_file(const std::filesystem::path& path, const LoadCsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return load_csv(in, options);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    }
}

void write_csv(std::ostream& out, const LabeledDataset& ds, char delimiter) {
    for (std::size_t i = 0; i < ds.data.rows; ++i) {
        for (std::size_t j = 0; j < ds.data.cols; ++j) {
            if (j > 0) out << delimiter;
            out << format_double(ds.data.at(i, j));
        }
        if (ds.labels) out << delimiter << (*ds.labels)[i];
        out << '\n';
    }
}

std::string to_csv(const LabeledDataset& ds, char delimiter) {
    std::ostringstream out;
    write_csv(out, ds, delimiter);
    return out.str();
}

LabeledDataset select_features(const LabeledDataset& ds, std::span<const std::size_t> indices) {
    if (indices.empty()) throw std::invalid_argument("select_features: at least one column required");
    std::vector<bool> seen(ds.data.cols, false);
    for (std::size_t idx : indices) {
        if (idx >= ds.data.cols) throw std::invalid_argument("select_features: column index out of range");
        if (seen[idx]) throw std::invalid_argument("select_features: duplicate column index");
        seen[idx] = true;
    }

    LabeledDataset out;
    out.data = DataMatrix(ds.data.rows, indices.size());
    for (std::size_t i = 0; i < ds.data.rows; ++i)
        for (std::size_t f = 0; f < indices.size(); ++f) out.data.at(i, f) = ds.data.at(i, indices[f]);
    out.labels = ds.labels;
    if (ds.feature_names) {
        std::vector<std::string> names;
        names.reserve(indices.size());
        for (std::size_t idx : indices) names.push_back((*ds.feature_names)[idx]);
        out.feature_names = std::move(names);
    }
    return out;
}

LabeledDataset generate_blobs(const BlobSpec& spec, RandomStream rng) {
    if (spec.cluster_count < 1 || spec.points_per_cluster < 1 || spec.dimension < 1)
        throw std::invalid_argument("generate_blobs: counts must be at least 1");
    if (!(spec.center_min <= spec.center_max)) throw std::invalid_argument("generate_blobs: empty center box");
    if (spec.spread < 0.0) throw std::invalid_argument("generate_blobs: spread must be nonnegative");

    const std::size_t k = spec.cluster_count;
    const std::size_t d = spec.dimension;
    DataMatrix centers(k, d);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < d; ++t)
            centers.at(j, t) = spec.center_min + rng.next_double() * (spec.center_max - spec.center_min);

    LabeledDataset ds;
    ds.data = DataMatrix(k * spec.points_per_cluster, d);
    std::vector<std::string> labels;
    labels.reserve(ds.data.rows);
    std::size_t row = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const std::string label = "blob-" + std::to_string(j);
        for (std::size_t p = 0; p < spec.points_per_cluster; ++p, ++row) {
            for (std::size_t t = 0; t < d; ++t)
                ds.data.at(row, t) = centers.at(j, t) + spec.spread * (2.0 * rng.next_double() - 1.0);
            labels.push_back(label);
        }
    }
    ds.labels = std::move(labels);
    return ds;
}

}  // namespace clusterbench

#pragma once

#include <cstdlib>
#include <filesystem>

namespace clusterbench {

// Pinned checksum of the bundled 150x4 Iris file (UCI Machine Learning
// Repository layout: four decimals then a class string per line). The
// benchmark numbers published with this repo are tied to these exact bytes.
inline constexpr const char* kIrisSha256 = "6f608b71a7317216319b4d27b4d9bc84e6abd734eda7872b71a458569e2656c0";
inline constexpr const char* kIrisFilename = "iris.data";

// Dataset directory: CLUSTERBENCH_DATA_DIR when set, ./data otherwise.
inline std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("CLUSTERBENCH_DATA_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::filesystem::path("data");
}

inline std::filesystem::path default_iris_path() { return default_data_dir() / kIrisFilename; }

}  // namespace clusterbench

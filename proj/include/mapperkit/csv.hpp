#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

/// Column roles for a numeric CSV. Without a header, columns are named
/// c0, c1, ... and the role lists refer to those names.
struct CsvOptions {
  bool header = true;
  std::vector<std::string> coordinates;  // empty: every column without another role
  std::vector<std::string> coloring;
  std::optional<std::string> label;      // free-text column kept as point labels
  std::string id;                        // cloud id
};

Cloud parse_csv(const std::string& text, const CsvOptions& options);
Cloud load_csv(const std::string& path, CsvOptions options);

/// Header `label?, x0..x{D-1}, <columns...>`; reals printed round-trip exact.
std::string cloud_to_csv(const Cloud& cloud);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mapperkit

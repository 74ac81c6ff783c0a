#include "mapperkit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapperkit/cover_graph.hpp"
#include "mapperkit/error.hpp"

namespace mapperkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string_view rest(line);
  while (true) {
    const auto comma = rest.find(',');
    cells.emplace_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return cells;
}

bool parse_double(std::string_view cell, double& out) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return false;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return res.ec == std::errc() && res.ptr == cell.data() + cell.size();
}

}  // namespace

Cloud parse_csv(const std::string& text, const CsvOptions& options) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (names.empty() && options.header) {
      names = std::move(cells);
      continue;
    }
    if (names.empty()) {
      for (std::size_t c = 0; c < cells.size(); ++c) names.push_back("c" + std::to_string(c));
    }
    if (cells.size() != names.size()) {
      throw Error(ErrorCode::RaggedRows, "line " + std::to_string(line_no) + " has " +
                                             std::to_string(cells.size()) + " cells, expected " +
                                             std::to_string(names.size()));
    }
    rows.push_back(std::move(cells));
    line_numbers.push_back(line_no);
  }

  auto column_of = [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::UnknownColumn, "no CSV column '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
  };

  std::vector<std::size_t> coloring;
  for (const auto& c : options.coloring) coloring.push_back(column_of(c));
  std::optional<std::size_t> label;
  if (options.label) label = column_of(*options.label);
  std::vector<std::size_t> coords;
  if (!options.coordinates.empty()) {
    for (const auto& c : options.coordinates) coords.push_back(column_of(c));
  } else {
    for (std::size_t c = 0; c < names.size(); ++c) {
      const bool taken = std::find(coloring.begin(), coloring.end(), c) != coloring.end() ||
                         (label && *label == c);
      if (!taken) coords.push_back(c);
    }
  }
  if (coords.empty()) throw Error(ErrorCode::InvalidArgument, "CSV has no coordinate columns");

  auto cell_value = [&](std::size_t r, std::size_t c) {
    double v = 0.0;
    if (!parse_double(rows[r][c], v)) {
      throw Error(ErrorCode::NonNumericCell, "line " + std::to_string(line_numbers[r]) +
                                                 ", column '" + names[c] + "': '" + rows[r][c] +
                                                 "'");
    }
    return v;
  };

  Cloud::Matrix pts(coords.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < coords.size(); ++k) {
      pts(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = cell_value(r, coords[k]);
    }
  }
  Cloud cloud(options.id.empty() ? "cloud" : options.id, std::move(pts));
  for (std::size_t c : coloring) {
    Eigen::VectorXd col(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) col(static_cast<Eigen::Index>(r)) = cell_value(r, c);
    cloud.add_column(names[c], std::move(col));
  }
  if (label) {
    std::vector<std::string> labels;
    for (const auto& row : rows) labels.push_back(row[*label]);
    cloud.set_labels(std::move(labels));
  }
  return cloud;
}

Cloud load_csv(const std::string& path, CsvOptions options) {
  if (options.id.empty()) options.id = std::filesystem::path(path).stem().string();
  return parse_csv(read_file(path), options);
}

std::string cloud_to_csv(const Cloud& cloud) {
  std::string out;
  const bool labelled = !cloud.labels().empty();
  std::vector<std::string> header;
  if (labelled) header.push_back("label");
  for (Index k = 0; k < cloud.dim(); ++k) header.push_back("x" + std::to_string(k));
  for (const auto& [name, col] : cloud.columns()) header.push_back(name);
  for (std::size_t h = 0; h < header.size(); ++h) out += (h ? "," : "") + header[h];
  out += "\n";
  for (Index i = 0; i < cloud.size(); ++i) {
    std::string row;
    if (labelled) row = cloud.labels()[i];
    for (Index k = 0; k < cloud.dim(); ++k) {
      if (!row.empty() || k > 0 || labelled) row += ",";
      row += format_param(cloud.point(i)(static_cast<Eigen::Index>(k)));
    }
    for (const auto& [name, col] : cloud.columns()) {
      row += "," + format_param(col(static_cast<Eigen::Index>(i)));
    }
    out += row + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace mapperkit

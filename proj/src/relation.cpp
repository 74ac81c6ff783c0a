#include "mapperkit/relation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mapperkit {

double Relation::domain_coverage() const {
  if (domain_size == 0) return 0.0;
  std::vector<char> hit(domain_size, 0);
  for (const auto& [x, y] : pairs) hit[x] = 1;
  return static_cast<double>(std::count(hit.begin(), hit.end(), 1)) /
         static_cast<double>(domain_size);
}

std::vector<std::vector<Index>> Relation::forward() const {
  std::vector<std::vector<Index>> out(domain_size);
  for (const auto& [x, y] : pairs) out[x].push_back(y);
  return out;
}

std::vector<std::vector<Index>> Relation::backward() const {
  std::vector<std::vector<Index>> out(codomain_size);
  for (const auto& [x, y] : pairs) out[y].push_back(x);
  return out;
}

std::vector<Index> Relation::image() const {
  std::vector<Index> ys;
  ys.reserve(pairs.size());
  for (const auto& [x, y] : pairs) ys.push_back(y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

Relation make_relation(std::string domain_id, Index domain_size, std::string codomain_id,
                       Index codomain_size, std::vector<std::pair<Index, Index>> pairs) {
  for (const auto& [x, y] : pairs) {
    if (x >= domain_size || y >= codomain_size) {
      throw Error(ErrorCode::InvalidArgument, "relation pair (" + std::to_string(x) + ", " +
                                                  std::to_string(y) + ") out of bounds");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Relation rel;
  rel.domain_id = std::move(domain_id);
  rel.codomain_id = std::move(codomain_id);
  rel.domain_size = domain_size;
  rel.codomain_size = codomain_size;
  rel.pairs = std::move(pairs);
  return rel;
}

Relation identity_relation(const std::string& cloud_id, Index size) {
  std::vector<std::pair<Index, Index>> pairs(size);
  for (Index i = 0; i < size; ++i) pairs[i] = {i, i};
  return make_relation(cloud_id, size, cloud_id, size, std::move(pairs));
}

namespace {

bool parse_index(std::string_view cell, Index& out) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
    cell.remove_suffix(1);
  }
  if (cell.empty()) return false;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return res.ec == std::errc() && res.ptr == cell.data() + cell.size();
}

}  // namespace

Relation parse_relation_csv(const std::string& text, const std::string& domain_id,
                            Index domain_size, const std::string& codomain_id,
                            Index codomain_size) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Index, Index>> pairs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::RaggedRows,
                  "relation line " + std::to_string(line_no) + " does not have two columns");
    }
    Index x = 0, y = 0;
    const bool ok = parse_index(std::string_view(line).substr(0, comma), x) &&
                    parse_index(std::string_view(line).substr(comma + 1), y);
    if (!ok) {
      if (line_no == 1) continue;  // header
      throw Error(ErrorCode::NonNumericCell,
                  "relation line " + std::to_string(line_no) + ": '" + line + "'");
    }
    pairs.emplace_back(x, y);
  }
  return make_relation(domain_id, domain_size, codomain_id, codomain_size, std::move(pairs));
}

std::string relation_to_csv(const Relation& rel) {
  std::string out = "x,y\n";
  for (const auto& [x, y] : rel.pairs) out += std::to_string(x) + "," + std::to_string(y) + "\n";
  return out;
}

}  // namespace mapperkit

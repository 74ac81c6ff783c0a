#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapperkit/error.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

/// Index pairs (x, y) linking a domain cloud X to a codomain cloud Y.
/// Functions are the special case with exactly one pair per x.
struct Relation {
  std::string domain_id;
  std::string codomain_id;
  Index domain_size = 0;
  Index codomain_size = 0;
  std::vector<std::pair<Index, Index>> pairs;  // sorted, unique

  /// Fraction of domain indices that appear in at least one pair.
  double domain_coverage() const;
  std::vector<std::vector<Index>> forward() const;   // x -> ys
  std::vector<std::vector<Index>> backward() const;  // y -> xs
  /// Sorted distinct codomain indices hit by the relation.
  std::vector<Index> image() const;
};

/// Validates bounds, sorts and deduplicates.
Relation make_relation(std::string domain_id, Index domain_size, std::string codomain_id,
                       Index codomain_size, std::vector<std::pair<Index, Index>> pairs);

Relation identity_relation(const std::string& cloud_id, Index size);

/// Joins rows of X and Y whose key-column values are equal.
template <typename ScalarX, typename ScalarY>
Relation relation_by_key(const PointCloud<ScalarX>& x, const PointCloud<ScalarY>& y,
                         const std::string& key) {
  const auto& kx = x.column(key);
  const auto& ky = y.column(key);
  std::multimap<double, Index> by_value;
  for (Index j = 0; j < y.size(); ++j) by_value.emplace(ky(static_cast<Eigen::Index>(j)), j);
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < x.size(); ++i) {
    auto [lo, hi] = by_value.equal_range(kx(static_cast<Eigen::Index>(i)));
    for (auto it = lo; it != hi; ++it) pairs.emplace_back(i, it->second);
  }
  return make_relation(x.id(), x.size(), y.id(), y.size(), std::move(pairs));
}

/// Two-column CSV of (x-index, y-index); a header row is skipped when its
/// cells are not numeric.
Relation parse_relation_csv(const std::string& text, const std::string& domain_id,
                            Index domain_size, const std::string& codomain_id,
                            Index codomain_size);

std::string relation_to_csv(const Relation& rel);

}  // namespace mapperkit

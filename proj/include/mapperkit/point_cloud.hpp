#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapperkit/error.hpp"

namespace mapperkit {

using Index = std::size_t;

/// Indexed set of D-dimensional points stored one per column, plus named
/// scalar columns used for coloring. Immutable once handed to an algorithm.
template <typename Scalar_ = double>
class PointCloud {
 public:
  using Scalar = Scalar_;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Column = Eigen::VectorXd;

  PointCloud() = default;

  PointCloud(std::string id, Matrix points) : id_(std::move(id)), points_(std::move(points)) {
    if (points_.rows() < 1) {
      throw Error(ErrorCode::InvalidArgument, "point dimension must be at least 1");
    }
  }

  const std::string& id() const noexcept { return id_; }
  Index size() const noexcept { return static_cast<Index>(points_.cols()); }
  Index dim() const noexcept { return static_cast<Index>(points_.rows()); }
  bool empty() const noexcept { return size() == 0; }

  const Matrix& points() const noexcept { return points_; }
  auto point(Index i) const { return points_.col(static_cast<Eigen::Index>(i)); }

  void add_column(const std::string& name, Column values) {
    if (static_cast<Index>(values.size()) != size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "column '" + name + "' has " + std::to_string(values.size()) +
                      " entries for " + std::to_string(size()) + " points");
    }
    columns_.insert_or_assign(name, std::move(values));
  }

  bool has_column(const std::string& name) const { return columns_.count(name) != 0; }

  const Column& column(const std::string& name) const {
    auto it = columns_.find(name);
    if (it == columns_.end()) throw Error(ErrorCode::UnknownColumn, name);
    return it->second;
  }

  const std::map<std::string, Column>& columns() const noexcept { return columns_; }

  // Optional per-point names (knot names, board ids). Empty or size() long.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != size()) {
      throw Error(ErrorCode::DimensionMismatch, "label count does not match point count");
    }
    labels_ = std::move(labels);
  }

 private:
  std::string id_;
  Matrix points_;
  std::map<std::string, Column> columns_;
  std::vector<std::string> labels_;
};

using Cloud = PointCloud<double>;

}  // namespace mapperkit

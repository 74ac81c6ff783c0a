#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

#include "mapperkit/error.hpp"

namespace mapperkit {

enum class Metric { Euclidean, L1, Cosine };

std::string_view to_string(Metric metric) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;

/// Distance between two vectors of the same length.
///
/// Cosine is the dissimilarity 1 - <a,b>/(|a||b|). It is not a metric (no
/// triangle inequality) and is only defined for nonzero vectors. The result
/// is clamped at zero so rounding never produces a negative value.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(Metric metric, const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  switch (metric) {
    case Metric::Euclidean:
      return (a - b).norm();
    case Metric::L1:
      return (a - b).template lpNorm<1>();
    case Metric::Cosine: {
      const Scalar na = a.norm();
      const Scalar nb = b.norm();
      if (na == Scalar(0) || nb == Scalar(0)) {
        throw Error(ErrorCode::ZeroVectorCosine, "cosine dissimilarity of a zero vector");
      }
      // na * nb is commutative, a.dot(b) sums a_i*b_i in index order: both
      // are exact under argument swap.
      const Scalar d = Scalar(1) - a.dot(b) / (na * nb);
      return d > Scalar(0) ? d : Scalar(0);
    }
  }
  return Scalar(0);
}

/// True when the metric admits the coordinate-gap bound |a_k - b_k| <= d(a, b).
constexpr bool bounds_coordinate_gaps(Metric metric) noexcept {
  return metric == Metric::Euclidean || metric == Metric::L1;
}

}  // namespace mapperkit

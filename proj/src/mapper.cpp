#include "mapperkit/mapper.hpp"

namespace mapperkit {

std::size_t IntervalCover::cube_count() const noexcept {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.size();
  return n;
}

std::vector<std::size_t> IntervalCover::cube(std::size_t c) const {
  std::vector<std::size_t> idx(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    idx[a] = c % axes[a].size();
    c /= axes[a].size();
  }
  return idx;
}

bool IntervalCover::cube_contains(std::size_t c,
                                  const Eigen::Ref<const Eigen::RowVectorXd>& value) const {
  const auto idx = cube(c);
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (!axes[a][idx[a]].contains(value(static_cast<Eigen::Index>(a)))) return false;
  }
  return true;
}

IntervalCover cover_range(const Eigen::MatrixXd& lens, const std::vector<std::size_t>& resolution,
                          double gain) {
  const auto dim = static_cast<std::size_t>(lens.cols());
  if (dim == 0 || dim > IntervalCover::kMaxDimension) {
    throw Error(ErrorCode::InvalidArgument,
                "interval covers support lens dimension 1 to 3, got " + std::to_string(dim));
  }
  if (resolution.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "need one resolution per lens axis");
  }
  if (!(gain >= 0.0 && gain < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "gain must lie in [0, 1)");
  }
  if (lens.rows() == 0) throw Error(ErrorCode::EmptyCollection, "lens has no values");

  IntervalCover cover;
  cover.gain = gain;
  for (std::size_t a = 0; a < dim; ++a) {
    const std::size_t k = resolution[a];
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "resolution must be at least 1");
    const double lo = lens.col(static_cast<Eigen::Index>(a)).minCoeff();
    const double hi = lens.col(static_cast<Eigen::Index>(a)).maxCoeff();
    std::vector<Interval> axis;
    if (hi == lo) {
      axis.push_back({lo, hi});
      cover.resolution.push_back(1);
    } else {
      const double length = (hi - lo) / (static_cast<double>(k) - static_cast<double>(k - 1) * gain);
      const double step = length * (1.0 - gain);
      for (std::size_t i = 0; i < k; ++i) {
        const double start = lo + static_cast<double>(i) * step;
        axis.push_back({start, i + 1 == k ? hi : start + length});
      }
      cover.resolution.push_back(k);
    }
    cover.axes.push_back(std::move(axis));
  }
  return cover;
}

}  // namespace mapperkit

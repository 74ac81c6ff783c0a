#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mapperkit/error.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

using Permutation = std::vector<Index>;

struct Orbit {
  Index seed = 0;
  std::vector<Index> members;  // ascending
};

/// Finite group acting on the point indices of one cloud.
///
/// Elements are stored as index permutations, so the isometry property
/// d(x_i, x_j) == d(x_g(i), x_g(j)) is a statement about which stored
/// vectors are compared, not about recomputed coordinates. The full group
/// is enumerated breadth-first from the generators at construction; element
/// 0 is always the identity.
class GroupAction {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 10000;

  GroupAction() = default;
  GroupAction(Index n_points, std::vector<Permutation> generators,
              std::size_t max_order = kDefaultMaxOrder);

  static GroupAction trivial(Index n_points) { return GroupAction(n_points, {}); }

  Index n_points() const noexcept { return n_points_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  Index apply(std::size_t element, Index i) const { return elements_.at(element).at(i); }

  Orbit orbit(Index i) const;
  /// Orbits ordered by their smallest member; they partition 0..n-1.
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t orbit_id(Index i) const { return orbit_of_point_.at(i); }

 private:
  Index n_points_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> orbit_of_point_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
bool is_permutation_of_range(const Permutation& p, Index n);

template <typename Scalar>
using CoordinateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using CoordinateMap = std::function<CoordinateVector<Scalar>(const CoordinateVector<Scalar>&)>;

/// Turns coordinate-level transforms into index permutations of `cloud`.
///
/// Each image T(x_i) must match exactly one point x_j with
/// max_k |T(x_i)_k - x_jk| <= tau, and the resulting map must be a
/// bijection. A dataset that is not closed under the transforms raises
/// UnmatchedImage; it has to be augmented first.
template <typename Scalar>
GroupAction build_action_from_coordinate_maps(const PointCloud<Scalar>& cloud,
                                              const std::vector<CoordinateMap<Scalar>>& maps,
                                              Scalar tau = Scalar(0),
                                              std::size_t max_order = GroupAction::kDefaultMaxOrder) {
  if (!(tau >= Scalar(0))) throw Error(ErrorCode::InvalidArgument, "tau must be non-negative");
  const Index n = cloud.size();

  // Sorted by first coordinate; candidates for an image lie in a window.
  std::vector<Index> by_first(n);
  for (Index i = 0; i < n; ++i) by_first[i] = i;
  std::stable_sort(by_first.begin(), by_first.end(),
                   [&](Index a, Index b) { return cloud.point(a)(0) < cloud.point(b)(0); });

  std::vector<Permutation> generators;
  generators.reserve(maps.size());
  for (std::size_t m = 0; m < maps.size(); ++m) {
    Permutation perm(n);
    std::vector<char> hit(n, 0);
    for (Index i = 0; i < n; ++i) {
      const CoordinateVector<Scalar> image = maps[m](cloud.point(i));
      if (static_cast<Index>(image.size()) != cloud.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "coordinate map changed the dimension");
      }
      auto lo = std::lower_bound(by_first.begin(), by_first.end(), image(0) - tau,
                                 [&](Index a, Scalar v) { return cloud.point(a)(0) < v; });
      Index found = n;
      for (auto it = lo; it != by_first.end() && cloud.point(*it)(0) <= image(0) + tau; ++it) {
        if ((cloud.point(*it) - image).cwiseAbs().maxCoeff() <= tau) {
          if (found != n) {
            throw Error(ErrorCode::AmbiguousMatch,
                        "map " + std::to_string(m) + ": image of point " + std::to_string(i) +
                            " matches points " + std::to_string(found) + " and " +
                            std::to_string(*it));
          }
          found = *it;
        }
      }
      if (found == n) {
        throw Error(ErrorCode::UnmatchedImage,
                    "map " + std::to_string(m) + ": image of point " + std::to_string(i) +
                        " is not in the cloud");
      }
      if (hit[found]) {
        throw Error(ErrorCode::AmbiguousMatch, "map " + std::to_string(m) +
                                                   " is not injective: point " +
                                                   std::to_string(found) + " hit twice");
      }
      hit[found] = 1;
      perm[i] = found;
    }
    generators.push_back(std::move(perm));
  }
  return GroupAction(n, std::move(generators), max_order);
}

}  // namespace mapperkit

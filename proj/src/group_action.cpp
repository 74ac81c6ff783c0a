#include "mapperkit/group_action.hpp"

#include <deque>
#include <set>

namespace mapperkit {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (Index i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (Index i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

bool is_permutation_of_range(const Permutation& p, Index n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Index v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

GroupAction::GroupAction(Index n_points, std::vector<Permutation> generators,
                         std::size_t max_order)
    : n_points_(n_points), generators_(std::move(generators)) {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (!is_permutation_of_range(generators_[g], n_points_)) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + std::to_string(g) + " is not a bijection on point indices");
    }
  }

  Permutation identity(n_points_);
  for (Index i = 0; i < n_points_; ++i) identity[i] = i;

  // Breadth-first closure; in a finite group closure under composition
  // with generators also yields inverses.
  std::set<Permutation> seen{identity};
  elements_.push_back(identity);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& gen : generators_) {
      Permutation next = compose(gen, elements_[head]);
      if (seen.insert(next).second) {
        if (elements_.size() >= max_order) {
          throw Error(ErrorCode::GroupTooLarge,
                      "group order exceeds the bound " + std::to_string(max_order));
        }
        elements_.push_back(std::move(next));
      }
    }
  }

  orbit_of_point_.assign(n_points_, static_cast<std::size_t>(-1));
  for (Index i = 0; i < n_points_; ++i) {
    if (orbit_of_point_[i] != static_cast<std::size_t>(-1)) continue;
    Orbit orb;
    orb.seed = i;
    std::deque<Index> queue{i};
    orbit_of_point_[i] = orbits_.size();
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      orb.members.push_back(x);
      for (const auto& gen : generators_) {
        Index y = gen[x];
        if (orbit_of_point_[y] == static_cast<std::size_t>(-1)) {
          orbit_of_point_[y] = orbits_.size();
          queue.push_back(y);
        }
      }
    }
    std::sort(orb.members.begin(), orb.members.end());
    orbits_.push_back(std::move(orb));
  }
}

Orbit GroupAction::orbit(Index i) const {
  if (i >= n_points_) {
    throw Error(ErrorCode::InvalidArgument, "point index " + std::to_string(i) + " out of range");
  }
  Orbit out = orbits_[orbit_of_point_[i]];
  out.seed = i;
  return out;
}

}  // namespace mapperkit

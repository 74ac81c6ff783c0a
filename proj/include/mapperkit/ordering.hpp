#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

/// Order in which a net construction scans the points. `seed` is recorded
/// in graph parameters; an absent seed means the identity order.
struct ScanOrder {
  std::vector<Index> permutation;
  std::optional<std::uint64_t> seed;

  static ScanOrder identity(Index n);
  /// Fisher-Yates shuffle driven by a 64-bit Mersenne twister. The output
  /// depends only on (n, seed), on every platform.
  static ScanOrder shuffled(Index n, std::uint64_t seed);
  static ScanOrder from_seed(Index n, std::optional<std::uint64_t> seed) {
    return seed ? shuffled(n, *seed) : identity(n);
  }
};

}  // namespace mapperkit

#include "mapperkit/ordering.hpp"

#include <random>
#include <utility>

namespace mapperkit {

ScanOrder ScanOrder::identity(Index n) {
  ScanOrder out;
  out.permutation.resize(n);
  for (Index i = 0; i < n; ++i) out.permutation[i] = i;
  return out;
}

ScanOrder ScanOrder::shuffled(Index n, std::uint64_t seed) {
  ScanOrder out = identity(n);
  out.seed = seed;
  // mt19937_64 output is fully specified by the standard; the distribution
  // classes are not, so the bounded draw is done by hand.
  std::mt19937_64 rng(seed);
  for (Index i = n; i > 1; --i) {
    const auto bound = static_cast<unsigned __int128>(i);
    const Index j = static_cast<Index>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
    std::swap(out.permutation[i - 1], out.permutation[j]);
  }
  return out;
}

}  // namespace mapperkit

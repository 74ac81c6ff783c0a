#pragma once

#include <cstddef>

namespace mapperkit::parallel {

// Thread count used by the parallel loops of the library. Results never
// depend on this value; only wall time does.
void set_num_threads(int n);
int num_threads();

/// Runs body(i) for i in [0, n). Iterations must write disjoint outputs.
template <typename Body>
void for_each_index(std::size_t n, Body&& body) {
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(num_threads())
  for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace mapperkit::parallel

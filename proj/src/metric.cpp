#include "mapperkit/metric.hpp"

namespace mapperkit {

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::Euclidean: return "euclidean";
    case Metric::L1: return "l1";
    case Metric::Cosine: return "cosine";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  if (name == "euclidean" || name == "l2") return Metric::Euclidean;
  if (name == "l1" || name == "manhattan") return Metric::L1;
  if (name == "cosine" || name == "cosine-dissimilarity") return Metric::Cosine;
  return std::nullopt;
}

}  // namespace mapperkit

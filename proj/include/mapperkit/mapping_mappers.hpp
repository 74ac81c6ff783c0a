#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mapperkit/cover_graph.hpp"
#include "mapperkit/relation.hpp"

namespace mapperkit {

/// Exact count ratio |covered(w) ∩ image| / |covered(w)|.
struct Fraction {
  std::size_t reached = 0;
  std::size_t total = 0;

  double value() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(total);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct SelectionColoring {
  std::string domain_graph_id;
  std::string codomain_graph_id;
  std::vector<std::string> selection;  // sorted domain vertex ids
  std::vector<Fraction> fractions;     // by codomain vertex position
};

/// Colors the codomain graph by the share of each vertex's points reached
/// through `rel` from the points covered by the selected domain vertices.
SelectionColoring map_selection(const CoverGraph& domain, const CoverGraph& codomain,
                                const Relation& rel, const std::vector<std::string>& selection);

struct FractionMatrix {
  std::vector<std::string> row_ids;     // domain vertex ids
  std::vector<std::string> column_ids;  // codomain vertex ids
  std::vector<std::vector<Fraction>> rows;
};

/// Row v is map_selection(..., {v}).
FractionMatrix full_matrix(const CoverGraph& domain, const CoverGraph& codomain,
                           const Relation& rel);

/// Six-decimal rendering used by every export of fractions.
std::string format_fraction(double value);
double round_fraction(double value);

std::string matrix_to_csv(const FractionMatrix& matrix);

}  // namespace mapperkit

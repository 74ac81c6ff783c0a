#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapperkit/group_action.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

enum class KnotInvariant { Alexander, Jones, Homflypt };

std::string_view to_string(KnotInvariant kind) noexcept;
std::optional<KnotInvariant> parse_knot_invariant(std::string_view name) noexcept;
constexpr bool is_two_variable(KnotInvariant kind) noexcept {
  return kind == KnotInvariant::Homflypt;
}

/// Polynomial coefficients keyed by (exponent of t or a, exponent of z).
/// One-variable invariants use z exponent 0 throughout.
struct KnotRecord {
  std::string name;
  int crossings = 0;
  int signature = 0;
  KnotInvariant kind = KnotInvariant::Jones;
  std::map<std::pair<int, int>, std::int64_t> coefficients;
};

/// Exponent box of a vectorized collection. Vectors are row-major with one
/// row per z exponent and one column per t (or a) exponent.
struct ExponentSpan {
  int min_a = 0;
  int max_a = 0;
  int min_z = 0;
  int max_z = 0;

  std::size_t columns() const noexcept { return static_cast<std::size_t>(max_a - min_a + 1); }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(max_z - min_z + 1); }
  std::size_t dimension() const noexcept { return rows() * columns(); }
  std::size_t slot(int a, int z) const noexcept {
    return static_cast<std::size_t>(z - min_z) * columns() + static_cast<std::size_t>(a - min_a);
  }
};

struct KnotCloud {
  Cloud cloud;  // columns "signature" and "crossings"; labels are knot names
  KnotInvariant kind = KnotInvariant::Jones;
  ExponentSpan span;
};

struct VectorizeOptions {
  /// Widen the t/a span to [-M, M], M = max(|min|, |max|), the layout in
  /// which mirroring is a reversal.
  bool symmetric = false;
  /// Explicit t/a span; must contain the collection's own span.
  std::optional<std::pair<int, int>> span;
  std::string id;
};

/// Aligns every record on the collection's global exponent span, padding
/// with zeros on both sides.
KnotCloud vectorize(const std::vector<KnotRecord>& records, const VectorizeOptions& options = {});

/// Coefficient stored for exponent (a, z) of point `row`; 0 outside the span.
double coefficient_at(const KnotCloud& knots, Index row, int a, int z = 0);

/// Mirror of a vector in a t/a-symmetric layout: full reversal for one
/// variable, reversal within each z row for two variables.
Eigen::VectorXd mirror_vector(const Eigen::VectorXd& v, const ExponentSpan& span);

/// Appends the mirror of every row whose mirror is absent, with negated
/// signature, and returns the order-2 action pairing mirrors. The t/a span
/// is symmetrized first. Idempotent on already-augmented clouds.
std::pair<KnotCloud, GroupAction> augment_mirrors(const KnotCloud& knots);

/// One-variable rows: name,min_exp,c_0..c_k,signature,crossings
/// Two-variable rows: name,min_a,min_z,rows,cols,c..., signature,crossings
/// (coefficients row-major, one row per z exponent). A header line whose
/// second cell is not an integer is skipped.
std::vector<KnotRecord> parse_knot_csv(const std::string& text, KnotInvariant kind);
std::string knot_records_to_csv(const std::vector<KnotRecord>& records);

}  // namespace mapperkit

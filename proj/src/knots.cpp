#include "mapperkit/knots.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "mapperkit/error.hpp"

namespace mapperkit {

std::string_view to_string(KnotInvariant kind) noexcept {
  switch (kind) {
    case KnotInvariant::Alexander: return "alexander";
    case KnotInvariant::Jones: return "jones";
    case KnotInvariant::Homflypt: return "homflypt";
  }
  return "unknown";
}

std::optional<KnotInvariant> parse_knot_invariant(std::string_view name) noexcept {
  if (name == "alexander") return KnotInvariant::Alexander;
  if (name == "jones") return KnotInvariant::Jones;
  if (name == "homflypt" || name == "homfly") return KnotInvariant::Homflypt;
  return std::nullopt;
}

KnotCloud vectorize(const std::vector<KnotRecord>& records, const VectorizeOptions& options) {
  if (records.empty()) throw Error(ErrorCode::EmptyCollection, "no knot records");
  const KnotInvariant kind = records.front().kind;
  bool any = false;
  ExponentSpan span;
  for (const auto& r : records) {
    if (r.kind != kind) {
      throw Error(ErrorCode::MixedKinds, "record '" + r.name + "' is " +
                                             std::string(to_string(r.kind)) + ", expected " +
                                             std::string(to_string(kind)));
    }
    if (r.signature % 2 != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "knot '" + r.name + "' has odd signature " + std::to_string(r.signature));
    }
    for (const auto& [exp, c] : r.coefficients) {
      if (c == 0) continue;
      if (!is_two_variable(kind) && exp.second != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "one-variable knot '" + r.name + "' has a z exponent");
      }
      if (!any) {
        span = {exp.first, exp.first, exp.second, exp.second};
        any = true;
      }
      span.min_a = std::min(span.min_a, exp.first);
      span.max_a = std::max(span.max_a, exp.first);
      span.min_z = std::min(span.min_z, exp.second);
      span.max_z = std::max(span.max_z, exp.second);
    }
  }
  if (options.symmetric) {
    const int m = std::max(std::abs(span.min_a), std::abs(span.max_a));
    span.min_a = -m;
    span.max_a = m;
  }
  if (options.span) {
    const auto [lo, hi] = *options.span;
    if (lo > span.min_a || hi < span.max_a) {
      throw Error(ErrorCode::InvalidArgument,
                  "requested span [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] does not contain the collection span [" + std::to_string(span.min_a) +
                      ", " + std::to_string(span.max_a) + "]");
    }
    span.min_a = lo;
    span.max_a = hi;
  }

  Cloud::Matrix pts = Cloud::Matrix::Zero(static_cast<Eigen::Index>(span.dimension()),
                                          static_cast<Eigen::Index>(records.size()));
  Eigen::VectorXd signature(records.size()), crossings(records.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& [exp, c] : records[i].coefficients) {
      if (c == 0) continue;
      pts(static_cast<Eigen::Index>(span.slot(exp.first, exp.second)),
          static_cast<Eigen::Index>(i)) = static_cast<double>(c);
    }
    signature(static_cast<Eigen::Index>(i)) = records[i].signature;
    crossings(static_cast<Eigen::Index>(i)) = records[i].crossings;
    names.push_back(records[i].name);
  }
  KnotCloud out{Cloud(options.id.empty() ? "knots-" + std::string(to_string(kind)) : options.id,
                      std::move(pts)),
                kind, span};
  out.cloud.add_column("signature", std::move(signature));
  out.cloud.add_column("crossings", std::move(crossings));
  out.cloud.set_labels(std::move(names));
  return out;
}

double coefficient_at(const KnotCloud& knots, Index row, int a, int z) {
  const auto& s = knots.span;
  if (a < s.min_a || a > s.max_a || z < s.min_z || z > s.max_z) return 0.0;
  return knots.cloud.point(row)(static_cast<Eigen::Index>(s.slot(a, z)));
}

Eigen::VectorXd mirror_vector(const Eigen::VectorXd& v, const ExponentSpan& span) {
  Eigen::VectorXd out(v.size());
  const auto cols = static_cast<Eigen::Index>(span.columns());
  for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(span.rows()); ++r) {
    out.segment(r * cols, cols) = v.segment(r * cols, cols).reverse();
  }
  return out;
}

namespace {

std::string mirror_name(const std::string& name) {
  if (name.size() > 5 && name.rfind("mir(", 0) == 0 && name.back() == ')') {
    return name.substr(4, name.size() - 5);
  }
  return "mir(" + name + ")";
}

std::vector<double> as_key(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::pair<KnotCloud, GroupAction> augment_mirrors(const KnotCloud& knots) {
  if (knots.kind == KnotInvariant::Alexander) {
    throw Error(ErrorCode::InvalidArgument,
                "the Alexander polynomial does not distinguish a knot from its mirror");
  }
  const ExponentSpan& old = knots.span;
  ExponentSpan span = old;
  const int m = std::max(std::abs(old.min_a), std::abs(old.max_a));
  span.min_a = -m;
  span.max_a = m;

  const Cloud& src = knots.cloud;
  std::vector<Eigen::VectorXd> vectors;
  for (Index i = 0; i < src.size(); ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(span.dimension()));
    for (int z = old.min_z; z <= old.max_z; ++z) {
      for (int a = old.min_a; a <= old.max_a; ++a) {
        v(static_cast<Eigen::Index>(span.slot(a, z))) =
            src.point(i)(static_cast<Eigen::Index>(old.slot(a, z)));
      }
    }
    vectors.push_back(std::move(v));
  }

  std::map<std::vector<double>, Index> present;
  for (Index i = 0; i < vectors.size(); ++i) present.emplace(as_key(vectors[i]), i);
  std::vector<Index> mirrored_from;  // source row of each appended row
  const std::size_t original = vectors.size();
  for (Index i = 0; i < original; ++i) {
    Eigen::VectorXd mv = mirror_vector(vectors[i], span);
    if (present.emplace(as_key(mv), vectors.size()).second) {
      vectors.push_back(std::move(mv));
      mirrored_from.push_back(i);
    }
  }

  Cloud::Matrix pts(static_cast<Eigen::Index>(span.dimension()),
                    static_cast<Eigen::Index>(vectors.size()));
  for (Index i = 0; i < vectors.size(); ++i) pts.col(static_cast<Eigen::Index>(i)) = vectors[i];
  const bool already = src.id().size() > 8 && src.id().ends_with("+mirrors");
  KnotCloud out{Cloud(already ? src.id() : src.id() + "+mirrors", std::move(pts)), knots.kind,
                span};
  for (const auto& [name, col] : src.columns()) {
    Eigen::VectorXd ext(static_cast<Eigen::Index>(vectors.size()));
    ext.head(col.size()) = col;
    const double sign = name == "signature" ? -1.0 : 1.0;
    for (std::size_t k = 0; k < mirrored_from.size(); ++k) {
      ext(static_cast<Eigen::Index>(original + k)) =
          sign * col(static_cast<Eigen::Index>(mirrored_from[k]));
    }
    out.cloud.add_column(name, std::move(ext));
  }
  if (!src.labels().empty()) {
    std::vector<std::string> labels = src.labels();
    for (Index from : mirrored_from) labels.push_back(mirror_name(src.labels()[from]));
    out.cloud.set_labels(std::move(labels));
  }

  const ExponentSpan layout = span;
  std::vector<CoordinateMap<double>> maps{
      [layout](const Eigen::VectorXd& v) { return mirror_vector(v, layout); }};
  GroupAction action = build_action_from_coordinate_maps(out.cloud, maps, 0.0);
  return {std::move(out), std::move(action)};
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  return cells;
}

bool to_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* b = s.data() + (s.front() == '+' ? 1 : 0);
  auto res = std::from_chars(b, s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::vector<KnotRecord> parse_knot_csv(const std::string& text, KnotInvariant kind) {
  std::istringstream in(text);
  std::string line;
  std::vector<KnotRecord> out;
  std::size_t line_no = 0;
  const std::size_t fixed = is_two_variable(kind) ? 7 : 4;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line);
    std::int64_t probe = 0;
    if (out.empty() && cells.size() > 1 && !to_int(cells[1], probe)) continue;  // header
    if (cells.size() < fixed + 1) {
      throw Error(ErrorCode::RaggedRows, "knot line " + std::to_string(line_no) + " is too short");
    }
    std::vector<std::int64_t> ints(cells.size() - 1);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (!to_int(cells[c], ints[c - 1])) {
        throw Error(ErrorCode::NonNumericCell, "knot line " + std::to_string(line_no) +
                                                   ", cell " + std::to_string(c + 1) + ": '" +
                                                   cells[c] + "'");
      }
    }
    KnotRecord r;
    r.name = cells[0];
    r.kind = kind;
    r.signature = static_cast<int>(ints[ints.size() - 2]);
    r.crossings = static_cast<int>(ints.back());
    if (is_two_variable(kind)) {
      const auto min_a = ints[0], min_z = ints[1], rows = ints[2], cols = ints[3];
      if (rows < 1 || cols < 1 || static_cast<std::size_t>(rows * cols) + 6 != ints.size()) {
        throw Error(ErrorCode::RaggedRows, "knot line " + std::to_string(line_no) + " declares " +
                                               std::to_string(rows) + "x" + std::to_string(cols) +
                                               " coefficients but has " +
                                               std::to_string(ints.size() - 6));
      }
      for (std::int64_t rr = 0; rr < rows; ++rr) {
        for (std::int64_t cc = 0; cc < cols; ++cc) {
          const auto c = ints[static_cast<std::size_t>(4 + rr * cols + cc)];
          if (c != 0) r.coefficients[{static_cast<int>(min_a + cc), static_cast<int>(min_z + rr)}] = c;
        }
      }
    } else {
      const auto min_exp = ints[0];
      for (std::size_t k = 1; k + 2 < ints.size(); ++k) {
        if (ints[k] != 0) r.coefficients[{static_cast<int>(min_exp + static_cast<std::int64_t>(k) - 1), 0}] = ints[k];
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string knot_records_to_csv(const std::vector<KnotRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    int min_a = 0, max_a = 0, min_z = 0, max_z = 0;
    bool any = false;
    for (const auto& [exp, c] : r.coefficients) {
      if (c == 0) continue;
      if (!any) {
        min_a = max_a = exp.first;
        min_z = max_z = exp.second;
        any = true;
      }
      min_a = std::min(min_a, exp.first);
      max_a = std::max(max_a, exp.first);
      min_z = std::min(min_z, exp.second);
      max_z = std::max(max_z, exp.second);
    }
    auto coef = [&](int a, int z) {
      auto it = r.coefficients.find({a, z});
      return it == r.coefficients.end() ? std::int64_t{0} : it->second;
    };
    out += r.name + "," + std::to_string(min_a);
    if (is_two_variable(r.kind)) {
      out += "," + std::to_string(min_z) + "," + std::to_string(max_z - min_z + 1) + "," +
             std::to_string(max_a - min_a + 1);
    }
    for (int z = min_z; z <= max_z; ++z) {
      for (int a = min_a; a <= max_a; ++a) out += "," + std::to_string(coef(a, z));
    }
    out += "," + std::to_string(r.signature) + "," + std::to_string(r.crossings) + "\n";
  }
  return out;
}

}  // namespace mapperkit

#include "mapperkit/mapping_mappers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mapperkit/error.hpp"
#include "mapperkit/parallel.hpp"

namespace mapperkit {

namespace {

void check_links(const CoverGraph& domain, const CoverGraph& codomain, const Relation& rel) {
  if (domain.source_cloud_id != rel.domain_id || domain.cloud_size != rel.domain_size) {
    throw Error(ErrorCode::GraphCloudMismatch, "domain graph " + domain.id + " covers " +
                                                   domain.source_cloud_id + ", relation starts at " +
                                                   rel.domain_id);
  }
  if (codomain.source_cloud_id != rel.codomain_id || codomain.cloud_size != rel.codomain_size) {
    throw Error(ErrorCode::GraphCloudMismatch, "codomain graph " + codomain.id + " covers " +
                                                   codomain.source_cloud_id +
                                                   ", relation ends at " + rel.codomain_id);
  }
}

std::vector<Fraction> fractions_for(const CoverGraph& domain, const CoverGraph& codomain,
                                    const std::vector<std::vector<Index>>& forward,
                                    const std::vector<std::size_t>& selected) {
  std::vector<char> in_domain(domain.cloud_size, 0);
  for (std::size_t v : selected) {
    for (Index p : domain.vertices[v].members) in_domain[p] = 1;
  }
  std::vector<char> in_image(codomain.cloud_size, 0);
  for (Index x = 0; x < domain.cloud_size; ++x) {
    if (!in_domain[x]) continue;
    for (Index y : forward[x]) in_image[y] = 1;
  }
  std::vector<Fraction> out(codomain.vertices.size());
  for (std::size_t w = 0; w < codomain.vertices.size(); ++w) {
    const auto& members = codomain.vertices[w].members;
    out[w].total = members.size();
    out[w].reached = static_cast<std::size_t>(
        std::count_if(members.begin(), members.end(), [&](Index y) { return in_image[y] != 0; }));
  }
  return out;
}

}  // namespace

SelectionColoring map_selection(const CoverGraph& domain, const CoverGraph& codomain,
                                const Relation& rel, const std::vector<std::string>& selection) {
  check_links(domain, codomain, rel);
  std::vector<std::string> ids(selection);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::size_t> selected;
  selected.reserve(ids.size());
  for (const auto& id : ids) selected.push_back(domain.vertex_position(id));

  SelectionColoring out;
  out.domain_graph_id = domain.id;
  out.codomain_graph_id = codomain.id;
  out.selection = std::move(ids);
  out.fractions = fractions_for(domain, codomain, rel.forward(), selected);
  return out;
}

FractionMatrix full_matrix(const CoverGraph& domain, const CoverGraph& codomain,
                           const Relation& rel) {
  check_links(domain, codomain, rel);
  const auto forward = rel.forward();
  FractionMatrix m;
  for (const auto& v : domain.vertices) m.row_ids.push_back(v.id);
  for (const auto& w : codomain.vertices) m.column_ids.push_back(w.id);
  m.rows.resize(domain.vertices.size());
  parallel::for_each_index(domain.vertices.size(), [&](std::size_t v) {
    m.rows[v] = fractions_for(domain, codomain, forward, {v});
  });
  return m;
}

double round_fraction(double value) { return std::round(value * 1e6) / 1e6; }

std::string format_fraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string matrix_to_csv(const FractionMatrix& matrix) {
  std::string out = "vertex";
  for (const auto& c : matrix.column_ids) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out += matrix.row_ids[r];
    for (const auto& f : matrix.rows[r]) out += "," + format_fraction(f.value());
    out += "\n";
  }
  return out;
}

}  // namespace mapperkit

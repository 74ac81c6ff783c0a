// mapperkit command-line front end.
//
// Exit codes: 0 success, 2 validation error, 1 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "mapperkit/ball_mapper.hpp"
#include "mapperkit/csv.hpp"
#include "mapperkit/datasets.hpp"
#include "mapperkit/error.hpp"
#include "mapperkit/graph_io.hpp"
#include "mapperkit/knots.hpp"
#include "mapperkit/mapper.hpp"
#include "mapperkit/mapping_mappers.hpp"
#include "mapperkit/mobm.hpp"
#include "mapperkit/parallel.hpp"
#include "mapperkit/service.hpp"
#include "mapperkit/sweep.hpp"

namespace mk = mapperkit;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 1;

// --- shared option blocks -------------------------------------------------

struct CloudOpts {
  std::string path;
  std::vector<std::string> coords;
  std::vector<std::string> colors;
  std::string label;
  bool no_header = false;
};

void add_cloud_opts(CLI::App* cmd, CloudOpts& o, const std::string& flag = "-i,--input",
                    const std::string& prefix = "") {
  cmd->add_option(flag, o.path, "point cloud CSV")->required();
  cmd->add_option("--" + prefix + "coords", o.coords, "coordinate columns (default: all others)")
      ->delimiter(',');
  cmd->add_option("--" + prefix + "color", o.colors, "numeric columns kept for coloring")
      ->delimiter(',');
  cmd->add_option("--" + prefix + "label", o.label,
                  "free-text label column (default: 'label' if present)");
  cmd->add_flag("--" + prefix + "no-header", o.no_header, "CSV has no header row");
}

mk::Cloud load_cloud(const CloudOpts& o) {
  const std::string text = mk::read_file(o.path);
  mk::CsvOptions csv;
  csv.header = !o.no_header;
  csv.coordinates = o.coords;
  csv.coloring = o.colors;
  csv.id = std::filesystem::path(o.path).stem().string();
  if (!o.label.empty()) {
    csv.label = o.label;
  } else if (csv.header) {
    std::istringstream first(text.substr(0, text.find('\n')));
    for (std::string cell; std::getline(first, cell, ',');) {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      if (cell == "label") csv.label = "label";
    }
  }
  return mk::parse_csv(text, csv);
}

struct OutputOpts {
  std::string out = "-";
  std::string format = "json";
  bool full = false;
  bool slim = false;
  bool name_by_label = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o, bool graph = true) {
  cmd->add_option("-o,--out", o.out, "output path ('-' for stdout)");
  if (!graph) return;
  cmd->add_option("--format", o.format, "json | dot | csv-matrix")
      ->check(CLI::IsMember({"json", "dot", "csv-matrix", "csv"}));
  auto* full = cmd->add_flag("--full", o.full, "always include covered indices");
  cmd->add_flag("--slim", o.slim, "never include covered indices")->excludes(full);
  cmd->add_flag("--name-by-label", o.name_by_label, "vertex id = label of its landmark point");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    mk::write_file(path, text);
  }
}

mk::MemberPolicy policy(const OutputOpts& o) {
  if (o.full) return mk::MemberPolicy::Full;
  if (o.slim) return mk::MemberPolicy::Slim;
  return mk::MemberPolicy::Auto;
}

/// Ball Mapper vertices renamed after their landmark's label.
void name_by_label(mk::CoverGraph& g, const mk::Cloud& landmarks_from) {
  if (landmarks_from.labels().empty()) {
    throw mk::Error(mk::ErrorCode::InvalidArgument, "--name-by-label needs a label column");
  }
  std::vector<std::string> ids;
  for (const auto& v : g.vertices) {
    if (!v.landmark) throw mk::Error(mk::ErrorCode::InvalidArgument, "vertex " + v.id + " has no landmark");
    ids.push_back(landmarks_from.labels()[*v.landmark]);
  }
  mk::rename_vertices(g, ids);
}

void emit_graph(const OutputOpts& o, mk::CoverGraph g, const mk::Cloud* colors_from) {
  if (o.name_by_label && colors_from) name_by_label(g, *colors_from);
  mk::GraphDocument doc{g, {}};
  if (colors_from) {
    for (const auto& [name, col] : colors_from->columns()) {
      doc.colorings.push_back(mk::color(g, *colors_from, name));
    }
  }
  emit(o.out, mk::export_document(doc, o.format, policy(o)));
}

mk::Metric metric_of(const std::string& name) {
  auto m = mk::parse_metric(name);
  if (!m) throw mk::Error(mk::ErrorCode::InvalidArgument, "unknown metric '" + name + "'");
  return *m;
}

struct NetOpts {
  std::string metric = "euclidean";
  double epsilon = 0.0;
  std::optional<std::uint64_t> seed;
  std::size_t min_shared = 1;
};

void add_net_opts(CLI::App* cmd, NetOpts& o, bool need_epsilon = true) {
  cmd->add_option("--metric", o.metric, "euclidean | l1 | cosine");
  if (need_epsilon) cmd->add_option("--epsilon", o.epsilon, "ball radius")->required();
  cmd->add_option("--order-seed", o.seed, "shuffle the scan order with this seed");
  cmd->add_option("--min-shared", o.min_shared, "points two balls must share to form an edge");
}

struct ClusterOpts {
  std::string kind = "radius";
  double eps_db = 1.0;
  std::size_t min_pts = 1;
};

void add_cluster_opts(CLI::App* cmd, ClusterOpts& o) {
  cmd->add_option("--cluster", o.kind, "dbscan | radius");
  cmd->add_option("--eps-db", o.eps_db, "clustering radius");
  cmd->add_option("--min-pts", o.min_pts, "DBSCAN core threshold");
}

mk::ClusteringSpec cluster_spec(const ClusterOpts& o) {
  auto kind = mk::parse_clustering_kind(o.kind);
  if (!kind) throw mk::Error(mk::ErrorCode::InvalidArgument, "unknown clustering '" + o.kind + "'");
  mk::ClusteringSpec spec{*kind, o.eps_db, o.min_pts};
  spec.validate();
  return spec;
}

mk::ScanOrder order_of(const mk::Cloud& cloud, const std::optional<std::uint64_t>& seed) {
  return mk::ScanOrder::from_seed(cloud.size(), seed);
}

// --- symmetries -------------------------------------------------------------

/// Coordinate maps for the named symmetry. "row-reverse:W" reverses every
/// consecutive block of W coordinates (the per-row knot mirror).
std::vector<mk::CoordinateMap<double>> symmetry_maps(const std::string& name, mk::Index dim) {
  using V = Eigen::VectorXd;
  if (name == "reverse") return {[](const V& v) { return V(v.reverse()); }};
  if (name == "negate") return {[](const V& v) { return V(-v); }};
  if (name == "dihedral3x3") {
    if (dim != 9) throw mk::Error(mk::ErrorCode::DimensionMismatch, "dihedral3x3 needs 9 coordinates");
    const auto sym = mk::board_symmetries();
    std::vector<mk::CoordinateMap<double>> maps;
    for (const auto& perm : sym) {
      maps.push_back([perm](const V& v) {
        V w(9);
        for (int k = 0; k < 9; ++k) w(k) = v(perm[static_cast<std::size_t>(k)]);
        return w;
      });
    }
    return maps;
  }
  if (name.rfind("row-reverse:", 0) == 0) {
    const long width = std::stol(name.substr(12));
    if (width < 1 || dim % static_cast<mk::Index>(width) != 0) {
      throw mk::Error(mk::ErrorCode::InvalidArgument, "row width must divide the dimension");
    }
    return {[width](const V& v) {
      V w(v.size());
      for (Eigen::Index r = 0; r < v.size(); r += width) w.segment(r, width) = v.segment(r, width).reverse();
      return w;
    }};
  }
  throw mk::Error(mk::ErrorCode::InvalidArgument, "unknown symmetry '" + name + "'");
}

mk::GroupAction action_of(const mk::Cloud& cloud, const std::string& symmetry, double tau) {
  return mk::build_action_from_coordinate_maps(cloud, symmetry_maps(symmetry, cloud.dim()), tau);
}

// --- relations ----------------------------------------------------------------

/// "identity", "by-key:<column>" or a two-column CSV path.
mk::Relation relation_of(const std::string& spec, const mk::Cloud& x, const mk::Cloud& y) {
  if (spec == "identity") {
    if (x.size() != y.size()) {
      throw mk::Error(mk::ErrorCode::DimensionMismatch, "identity relation needs equal sizes");
    }
    auto rel = mk::identity_relation(x.id(), x.size());
    rel.codomain_id = y.id();
    return rel;
  }
  if (spec.rfind("by-key:", 0) == 0) return mk::relation_by_key(x, y, spec.substr(7));
  return mk::parse_relation_csv(mk::read_file(spec), x.id(), x.size(), y.id(), y.size());
}

// --- numeric list parsing --------------------------------------------------------

std::vector<double> geometric_grid(double lo, double hi, std::size_t steps) {
  if (!(lo > 0) || !(hi >= lo) || steps == 0) {
    throw mk::Error(mk::ErrorCode::InvalidArgument, "geometric grid needs 0 < lo <= hi and steps >= 1");
  }
  std::vector<double> out;
  for (std::size_t s = 0; s < steps; ++s) {
    out.push_back(steps == 1 ? lo : lo * std::pow(hi / lo, double(s) / double(steps - 1)));
  }
  return out;
}

/// Lens entries are "x<k>" for a coordinate or a coloring column name.
Eigen::MatrixXd build_lens(const mk::Cloud& cloud, const std::vector<std::string>& lens,
                           std::string& description) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(cloud.size()), static_cast<Eigen::Index>(lens.size()));
  for (std::size_t j = 0; j < lens.size(); ++j) {
    const auto& name = lens[j];
    description += (j ? "," : "") + name;
    const auto col = static_cast<Eigen::Index>(j);
    if (cloud.has_column(name)) {
      m.col(col) = cloud.column(name);
      continue;
    }
    if (name.size() > 1 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const auto k = static_cast<Eigen::Index>(std::stoul(name.substr(1)));
      if (k >= static_cast<Eigen::Index>(cloud.dim())) {
        throw mk::Error(mk::ErrorCode::DimensionMismatch, "lens coordinate " + name + " out of range");
      }
      m.col(col) = cloud.points().row(k).transpose();
      continue;
    }
    throw mk::Error(mk::ErrorCode::UnknownColumn, "lens column '" + name + "'");
  }
  return m;
}

mk::CoverGraph read_graph(const std::string& path) { return mk::import_json(mk::read_file(path)).graph; }

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Ball Mapper, Equivariant Ball Mapper, Mapper and Mapper-on-Ball-Mapper graphs"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0: OpenMP default)");

  // bm / eqbm
  CloudOpts bm_in;
  NetOpts bm_net;
  OutputOpts bm_out;
  auto* bm = app.add_subcommand("bm", "Ball Mapper graph");
  add_cloud_opts(bm, bm_in);
  add_net_opts(bm, bm_net);
  add_output_opts(bm, bm_out);

  CloudOpts eq_in;
  NetOpts eq_net;
  OutputOpts eq_out;
  std::string eq_symmetry;
  double eq_tau = 0.0;
  auto* eqbm = app.add_subcommand("eqbm", "Equivariant Ball Mapper graph");
  add_cloud_opts(eqbm, eq_in);
  add_net_opts(eqbm, eq_net);
  add_output_opts(eqbm, eq_out);
  eqbm->add_option("--symmetry", eq_symmetry, "reverse | negate | dihedral3x3 | row-reverse:W")
      ->required();
  eqbm->add_option("--tau", eq_tau, "matching tolerance (sup norm) when building the action");

  // mapper
  CloudOpts mp_in;
  OutputOpts mp_out;
  ClusterOpts mp_cl;
  std::string mp_metric = "euclidean";
  std::vector<std::string> mp_lens;
  std::vector<std::size_t> mp_res;
  double mp_gain = 0.3;
  auto* mapper = app.add_subcommand("mapper", "classical Mapper graph");
  add_cloud_opts(mapper, mp_in);
  add_output_opts(mapper, mp_out);
  add_cluster_opts(mapper, mp_cl);
  mapper->add_option("--metric", mp_metric, "euclidean | l1 | cosine");
  mapper->add_option("--lens", mp_lens, "lens columns: x<k> or a --color column")
      ->delimiter(',')
      ->required();
  mapper->add_option("--resolution", mp_res, "intervals per lens axis")->delimiter(',')->required();
  mapper->add_option("--gain", mp_gain, "interval overlap in [0, 1)");

  // mobm
  CloudOpts mo_x, mo_y;
  NetOpts mo_net;
  ClusterOpts mo_cl;
  OutputOpts mo_out;
  std::string mo_rel, mo_metric_x = "euclidean", mo_base_out;
  auto* mobm = app.add_subcommand("mobm", "Mapper on Ball Mapper of a related cloud");
  add_cloud_opts(mobm, mo_x, "-x,--x-input", "x-");
  add_cloud_opts(mobm, mo_y, "-y,--y-input", "y-");
  add_net_opts(mobm, mo_net);
  add_cluster_opts(mobm, mo_cl);
  add_output_opts(mobm, mo_out);
  mobm->add_option("--relation", mo_rel, "identity | by-key:<column> | pairs CSV")->required();
  mobm->add_option("--metric-x", mo_metric_x, "metric used to cluster in X");
  mobm->add_option("--base-out", mo_base_out, "also write the image Ball Mapper graph (JSON)");

  // map-relation
  std::string mr_domain, mr_codomain, mr_rel, mr_out = "-";
  std::vector<std::string> mr_select;
  bool mr_select_given = false;
  auto* maprel = app.add_subcommand("map-relation", "MappingMappers fractions between two graphs");
  maprel->add_option("--domain", mr_domain, "domain graph JSON (with covered indices)")->required();
  maprel->add_option("--codomain", mr_codomain, "codomain graph JSON")->required();
  maprel->add_option("--relation", mr_rel, "pairs CSV (x-index,y-index) or 'identity'")->required();
  auto* sel = maprel->add_option("--select", mr_select, "domain vertex ids; omit for the full matrix")
                  ->delimiter(',');
  maprel->add_option("-o,--out", mr_out, "output path ('-' for stdout)");

  // sweep
  CloudOpts sw_in;
  NetOpts sw_net;
  std::vector<double> sw_eps;
  std::vector<double> sw_grid;
  std::vector<std::uint64_t> sw_seeds;
  std::string sw_symmetry, sw_out = "-";
  double sw_tau = 0.0;
  auto* sweep = app.add_subcommand("sweep", "stability table over radii and scan orders");
  add_cloud_opts(sweep, sw_in);
  add_net_opts(sweep, sw_net, false);
  sweep->add_option("--epsilon", sw_eps, "radii")->delimiter(',');
  sweep->add_option("--geometric", sw_grid, "LO,HI,STEPS geometric radius grid")
      ->delimiter(',')
      ->expected(3);
  sweep->add_option("--seeds", sw_seeds, "scan-order seeds (default: identity order)")->delimiter(',');
  sweep->add_option("--symmetry", sw_symmetry, "sweep the equivariant construction instead");
  sweep->add_option("--tau", sw_tau, "matching tolerance for --symmetry");
  sweep->add_option("-o,--out", sw_out, "output CSV ('-' for stdout)");

  // serve
  std::vector<std::string> sv_graphs, sv_relations;
  std::string sv_host = "127.0.0.1";
  int sv_port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP service for the explorer");
  serve->add_option("--graph", sv_graphs, "NAME=graph.json (repeatable)")->required();
  serve->add_option("--relation", sv_relations,
                    "NAME:DOMAIN:CODOMAIN=pairs.csv or NAME:DOMAIN:CODOMAIN=identity (repeatable)");
  serve->add_option("--host", sv_host);
  serve->add_option("--port", sv_port);

  // gen
  auto* gen = app.add_subcommand("gen", "generate the bundled datasets");
  gen->require_subcommand(1);
  std::string ttt_out = "-";
  auto* ttt = gen->add_subcommand("tictactoe", "the 958 Tic-Tac-Toe endgame boards");
  ttt->add_option("-o,--out", ttt_out);
  std::size_t cy_circle = 500, cy_interval = 100;
  std::uint64_t cy_seed = 1;
  double cy_length = 10.0;
  std::string cy_dir = ".";
  auto* cyl = gen->add_subcommand("cylinder", "circle in R^7 and its product with an interval");
  cyl->add_option("--n-circle", cy_circle);
  cyl->add_option("--n-interval", cy_interval);
  cyl->add_option("--seed", cy_seed);
  cyl->add_option("--length", cy_length, "interval length");
  cyl->add_option("--out-dir", cy_dir, "writes circle7d.csv, cylinder8d.csv, projection.csv");

  // knots
  auto* knots = app.add_subcommand("knots", "knot polynomial vectors");
  knots->require_subcommand(1);
  std::string kv_in, kv_inv = "jones", kv_out = "-";
  bool kv_sym = false;
  std::vector<int> kv_span;
  auto* kvec = knots->add_subcommand("vectorize", "coefficient vectors over a common span");
  kvec->add_option("-i,--input", kv_in, "knot CSV")->required();
  kvec->add_option("--invariant", kv_inv, "alexander | jones | homflypt");
  kvec->add_flag("--symmetric", kv_sym, "symmetrize the exponent span around 0");
  kvec->add_option("--span", kv_span, "MIN,MAX exponent span override")->delimiter(',')->expected(2);
  kvec->add_option("-o,--out", kv_out);
  std::string km_in, km_inv = "jones", km_out = "-";
  auto* kmir = knots->add_subcommand("mirror", "append absent mirror images");
  kmir->add_option("-i,--input", km_in, "knot CSV")->required();
  kmir->add_option("--invariant", km_inv, "jones | homflypt");
  kmir->add_option("-o,--out", km_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }
  mr_select_given = sel->count() > 0;
  mk::parallel::set_num_threads(threads);

  if (bm->parsed()) {
    const auto cloud = load_cloud(bm_in);
    const auto net = mk::greedy_net(cloud, metric_of(bm_net.metric), bm_net.epsilon,
                                    order_of(cloud, bm_net.seed));
    emit_graph(bm_out, mk::build_ball_mapper(cloud, net.metric, net, bm_net.min_shared), &cloud);
  } else if (eqbm->parsed()) {
    const auto cloud = load_cloud(eq_in);
    const auto action = action_of(cloud, eq_symmetry, eq_tau);
    const auto net = mk::equivariant_net(cloud, metric_of(eq_net.metric), eq_net.epsilon, action,
                                         order_of(cloud, eq_net.seed));
    auto g = mk::build_ball_mapper(cloud, net.metric, net, eq_net.min_shared);
    g.params["symmetry"] = eq_symmetry;
    g.params["group_order"] = std::to_string(action.order());
    emit_graph(eq_out, g, &cloud);
  } else if (mapper->parsed()) {
    const auto cloud = load_cloud(mp_in);
    std::string desc;
    const auto lens = build_lens(cloud, mp_lens, desc);
    const auto cover = mk::cover_range(lens, mp_res, mp_gain);
    emit_graph(mp_out,
               mk::build_mapper(cloud, lens, cover, metric_of(mp_metric), cluster_spec(mp_cl), desc),
               &cloud);
  } else if (mobm->parsed()) {
    const auto x = load_cloud(mo_x);
    const auto y = load_cloud(mo_y);
    const auto rel = relation_of(mo_rel, x, y);
    const auto base = mk::build_image_ball_mapper(y, rel, metric_of(mo_net.metric), mo_net.epsilon,
                                                  order_of(y, mo_net.seed), mo_net.min_shared);
    if (!mo_base_out.empty()) {
      mk::GraphDocument doc{base, {}};
      if (mo_out.name_by_label) name_by_label(doc.graph, y);
      for (const auto& [name, col] : y.columns()) doc.colorings.push_back(mk::color(base, y, name));
      emit(mo_base_out, mk::export_json(doc, policy(mo_out)));
    }
    OutputOpts mobm_out = mo_out;
    mobm_out.name_by_label = false;  // only the base graph has landmarks
    emit_graph(mobm_out,
               mk::build_mobm(x, y, rel, base, metric_of(mo_metric_x), cluster_spec(mo_cl),
                              mo_net.min_shared),
               &x);
  } else if (maprel->parsed()) {
    const auto domain = read_graph(mr_domain);
    const auto codomain = read_graph(mr_codomain);
    mk::Relation rel;
    if (mr_rel == "identity") {
      rel = mk::identity_relation(domain.source_cloud_id, domain.cloud_size);
      rel.codomain_id = codomain.source_cloud_id;
      rel.codomain_size = codomain.cloud_size;
      if (rel.codomain_size != rel.domain_size) {
        throw mk::Error(mk::ErrorCode::DimensionMismatch, "identity relation needs equal sizes");
      }
    } else {
      rel = mk::parse_relation_csv(mk::read_file(mr_rel), domain.source_cloud_id, domain.cloud_size,
                                   codomain.source_cloud_id, codomain.cloud_size);
    }
    if (mr_select_given) {
      const auto sc = mk::map_selection(domain, codomain, rel, mr_select);
      std::string out = "vertex,reached,total,fraction\n";
      for (std::size_t w = 0; w < sc.fractions.size(); ++w) {
        out += codomain.vertices[w].id + "," + std::to_string(sc.fractions[w].reached) + "," +
               std::to_string(sc.fractions[w].total) + "," +
               mk::format_fraction(sc.fractions[w].value()) + "\n";
      }
      emit(mr_out, out);
    } else {
      emit(mr_out, mk::matrix_to_csv(mk::full_matrix(domain, codomain, rel)));
    }
  } else if (sweep->parsed()) {
    const auto cloud = load_cloud(sw_in);
    std::vector<double> eps = sw_eps;
    if (!sw_grid.empty()) {
      const auto grid = geometric_grid(sw_grid[0], sw_grid[1], static_cast<std::size_t>(sw_grid[2]));
      eps.insert(eps.end(), grid.begin(), grid.end());
    }
    std::vector<std::optional<std::uint64_t>> seeds(sw_seeds.begin(), sw_seeds.end());
    std::optional<mk::GroupAction> action;
    if (!sw_symmetry.empty()) action = action_of(cloud, sw_symmetry, sw_tau);
    emit(sw_out, mk::sweep_to_csv(mk::sweep(cloud, metric_of(sw_net.metric), eps, seeds,
                                            action ? &*action : nullptr, sw_net.min_shared)));
  } else if (serve->parsed()) {
    mk::GraphStore store;
    for (const auto& spec : sv_graphs) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw mk::Error(mk::ErrorCode::InvalidArgument, "--graph expects NAME=path, got '" + spec + "'");
      }
      store.add_graph(spec.substr(0, eq), mk::import_json(mk::read_file(spec.substr(eq + 1))));
    }
    for (const auto& spec : sv_relations) {
      const auto eq = spec.find('=');
      const auto c1 = spec.find(':');
      const auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
      if (eq == std::string::npos || c2 == std::string::npos || c2 > eq) {
        throw mk::Error(mk::ErrorCode::InvalidArgument,
                        "--relation expects NAME:DOMAIN:CODOMAIN=path, got '" + spec + "'");
      }
      const auto* d = store.graph(spec.substr(c1 + 1, c2 - c1 - 1));
      const auto* c = store.graph(spec.substr(c2 + 1, eq - c2 - 1));
      if (!d || !c) throw mk::Error(mk::ErrorCode::InvalidArgument, "relation names an unloaded graph");
      const std::string path = spec.substr(eq + 1);
      mk::Relation rel;
      if (path == "identity") {
        rel = mk::identity_relation(d->graph.source_cloud_id, d->graph.cloud_size);
        rel.codomain_id = c->graph.source_cloud_id;
      } else {
        rel = mk::parse_relation_csv(mk::read_file(path), d->graph.source_cloud_id, d->graph.cloud_size,
                                     c->graph.source_cloud_id, c->graph.cloud_size);
      }
      store.add_relation(spec.substr(0, c1), std::move(rel));
    }
    const mk::Service service(std::move(store));
    mk::HttpServer server(service);
    const int port = server.bind(sv_host, sv_port);
    if (port < 0) {
      throw mk::Error(mk::ErrorCode::Io, "cannot bind " + sv_host + ":" + std::to_string(sv_port));
    }
    std::cerr << "listening on http://" << sv_host << ":" << port << "\n";
    server.listen();
  } else if (ttt->parsed()) {
    emit(ttt_out, mk::cloud_to_csv(mk::generate_tictactoe().first));
  } else if (cyl->parsed()) {
    const auto data = mk::generate_cylinder(cy_circle, cy_interval, cy_seed, cy_length);
    const std::filesystem::path dir(cy_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw mk::Error(mk::ErrorCode::Io, "cannot create '" + cy_dir + "': " + ec.message());
    mk::write_file((dir / "circle7d.csv").string(), mk::cloud_to_csv(data.circle));
    mk::write_file((dir / "cylinder8d.csv").string(), mk::cloud_to_csv(data.cylinder));
    mk::write_file((dir / "projection.csv").string(), mk::relation_to_csv(data.projection));
  } else if (kvec->parsed() || kmir->parsed()) {
    const bool vec = kvec->parsed();
    const std::string& inv_name = vec ? kv_inv : km_inv;
    const auto inv = mk::parse_knot_invariant(inv_name);
    if (!inv) throw mk::Error(mk::ErrorCode::InvalidArgument, "unknown invariant '" + inv_name + "'");
    const auto records = mk::parse_knot_csv(mk::read_file(vec ? kv_in : km_in), *inv);
    mk::VectorizeOptions opts;
    opts.symmetric = kv_sym;
    if (kv_span.size() == 2) opts.span = std::make_pair(kv_span[0], kv_span[1]);
    opts.id = std::filesystem::path(vec ? kv_in : km_in).stem().string();
    const auto knots_cloud = mk::vectorize(records, opts);
    if (vec) {
      emit(kv_out, mk::cloud_to_csv(knots_cloud.cloud));
    } else {
      emit(km_out, mk::cloud_to_csv(mk::augment_mirrors(knots_cloud).first.cloud));
    }
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_io() ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

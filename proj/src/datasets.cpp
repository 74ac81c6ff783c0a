#include "mapperkit/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "mapperkit/error.hpp"

namespace mapperkit {

namespace {

using Board = std::array<int, 9>;

constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};

int winner(const Board& b) {
  for (const auto& line : kLines) {
    const int s = b[line[0]];
    if (s != 0 && s == b[line[1]] && s == b[line[2]]) return s;
  }
  return 0;
}

void play(Board& board, int to_move, std::set<Board>& endgames) {
  bool full = true;
  for (int cell = 0; cell < 9; ++cell) {
    if (board[cell] != 0) continue;
    full = false;
    board[cell] = to_move;
    if (winner(board) != 0) {
      endgames.insert(board);
    } else {
      play(board, -to_move, endgames);
    }
    board[cell] = 0;
  }
  if (full) endgames.insert(board);
}

// w[k] = v[perm[k]]
Eigen::VectorXd permute_cells(const Eigen::VectorXd& v, const std::array<int, 9>& perm) {
  Eigen::VectorXd w(9);
  for (int k = 0; k < 9; ++k) w(k) = v(perm[k]);
  return w;
}

constexpr std::array<int, 9> kRotate = {6, 3, 0, 7, 4, 1, 8, 5, 2};  // quarter turn
constexpr std::array<int, 9> kFlip = {2, 1, 0, 5, 4, 3, 8, 7, 6};    // mirror left-right

Board apply_cells(const Board& b, const std::array<int, 9>& perm) {
  Board out{};
  for (int k = 0; k < 9; ++k) out[k] = b[perm[k]];
  return out;
}

}  // namespace

std::array<std::array<int, 9>, 8> board_symmetries() {
  std::array<std::array<int, 9>, 8> out{};
  std::array<int, 9> rot = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  for (int r = 0; r < 4; ++r) {
    out[r] = rot;
    for (int k = 0; k < 9; ++k) out[4 + r][k] = rot[kFlip[k]];
    std::array<int, 9> next{};
    for (int k = 0; k < 9; ++k) next[k] = rot[kRotate[k]];
    rot = next;
  }
  return out;
}

namespace {

Cloud board_cloud(const std::vector<Board>& boards, const std::string& id) {
  Cloud::Matrix pts(9, static_cast<Eigen::Index>(boards.size()));
  Eigen::VectorXd outcome(static_cast<Eigen::Index>(boards.size()));
  std::vector<std::string> labels;
  Eigen::Index col = 0;
  for (const Board& b : boards) {
    std::string label;
    for (int k = 0; k < 9; ++k) {
      pts(k, col) = b[k];
      label += b[k] > 0 ? 'x' : (b[k] < 0 ? 'o' : '-');
    }
    outcome(col) = winner(b);
    labels.push_back(std::move(label));
    ++col;
  }
  Cloud cloud(id, std::move(pts));
  cloud.add_column("outcome", std::move(outcome));
  cloud.set_labels(std::move(labels));
  return cloud;
}

GroupAction board_action(const Cloud& cloud) {
  std::vector<CoordinateMap<double>> maps{
      [](const Eigen::VectorXd& v) { return permute_cells(v, kRotate); },
      [](const Eigen::VectorXd& v) { return permute_cells(v, kFlip); }};
  return build_action_from_coordinate_maps(cloud, maps, 0.0);
}

}  // namespace

std::pair<Cloud, GroupAction> generate_tictactoe() {
  std::set<Board> endgames;
  Board empty{};
  play(empty, +1, endgames);
  Cloud cloud = board_cloud(std::vector<Board>(endgames.begin(), endgames.end()), "tictactoe");
  GroupAction action = board_action(cloud);
  return {std::move(cloud), std::move(action)};
}

std::pair<Cloud, std::optional<GroupAction>> parse_uci_tictactoe(const std::string& text) {
  std::vector<Board> boards;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string::npos) stop = text.size();
    std::string line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Board b{};
    std::size_t cell = 0, pos = 0;
    for (; cell < 9; ++cell) {
      const std::size_t comma = line.find(',', pos);
      const std::string tok = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok == "x") {
        b[cell] = 1;
      } else if (tok == "o") {
        b[cell] = -1;
      } else if (tok == "b") {
        b[cell] = 0;
      } else {
        throw Error(ErrorCode::NonNumericCell, "board line " + std::to_string(line_no) + ", cell " +
                                                   std::to_string(cell + 1) + ": '" + tok + "'");
      }
      if (comma == std::string::npos) {
        if (cell != 8) break;
        pos = line.size();
      } else {
        pos = comma + 1;
      }
    }
    if (cell < 8) {
      throw Error(ErrorCode::RaggedRows, "board line " + std::to_string(line_no) + " has fewer than 9 cells");
    }
    boards.push_back(b);  // the class column is ignored; outcome is recomputed
  }
  std::sort(boards.begin(), boards.end());
  if (std::adjacent_find(boards.begin(), boards.end()) != boards.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate board");
  }
  Cloud cloud = board_cloud(boards, "tictactoe-uci");
  std::set<Board> present(boards.begin(), boards.end());
  for (const Board& b : boards) {
    if (!present.count(apply_cells(b, kRotate)) || !present.count(apply_cells(b, kFlip))) {
      return {std::move(cloud), std::nullopt};
    }
  }
  GroupAction action = board_action(cloud);
  return {std::move(cloud), std::move(action)};
}

CylinderData generate_cylinder(std::size_t n_circle, std::size_t n_interval, std::uint64_t seed,
                               double interval_length) {
  UnitRandom uniform(seed);
  Cloud::Matrix circle(7, static_cast<Eigen::Index>(n_circle));
  Eigen::VectorXd alpha(static_cast<Eigen::Index>(n_circle));
  for (std::size_t i = 0; i < n_circle; ++i) {
    const double theta = 2.0 * std::numbers::pi * uniform();
    const double x = std::cos(theta), y = std::sin(theta);
    circle.col(static_cast<Eigen::Index>(i)) << x * y, x * x, y * y, x * x * y, y * y * x,
        x * x * x, y * y * y;
    alpha(static_cast<Eigen::Index>(i)) = std::acos(x);
  }
  std::vector<double> line(n_interval);
  for (double& t : line) t = interval_length * uniform();

  const std::size_t n = n_circle * n_interval;
  Cloud::Matrix cyl(8, static_cast<Eigen::Index>(n));
  Eigen::VectorXd cyl_alpha(static_cast<Eigen::Index>(n));
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n_circle; ++i) {
    for (std::size_t j = 0; j < n_interval; ++j) {
      const auto k = static_cast<Eigen::Index>(i * n_interval + j);
      cyl.col(k).head(7) = circle.col(static_cast<Eigen::Index>(i));
      cyl(7, k) = line[j];
      cyl_alpha(k) = alpha(static_cast<Eigen::Index>(i));
      pairs.emplace_back(static_cast<Index>(k), i);
    }
  }

  CylinderData out{Cloud("circle7d", std::move(circle)), Cloud("cylinder8d", std::move(cyl)), {}};
  out.circle.add_column("alpha", alpha);
  out.cylinder.add_column("alpha", std::move(cyl_alpha));
  out.projection = make_relation(out.cylinder.id(), n, out.circle.id(), n_circle, std::move(pairs));
  return out;
}

}  // namespace mapperkit

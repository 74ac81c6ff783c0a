#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "mapperkit/group_action.hpp"
#include "mapperkit/point_cloud.hpp"
#include "mapperkit/relation.hpp"

namespace mapperkit {

/// All legal Tic-Tac-Toe endgames: crosses (+1) move first, noughts are
/// -1, empty cells 0; a game ends at the first three-in-a-row or on a full
/// board. Boards are sorted lexicographically by cell values, row-major.
///
/// Column "outcome" is +1 when crosses (the first player) win, -1 when
/// noughts win, 0 for a tie. Labels spell the board, e.g. "xo-x-o--x".
/// The returned action is the dihedral group of the square (4 rotations,
/// 4 reflections) acting on board indices.
std::pair<Cloud, GroupAction> generate_tictactoe();

/// Boards in the public UCI layout ("x,o,b,...,class" per line). The class
/// column is ignored and the outcome recomputed from the board. The action
/// is present only when the board set is closed under the symmetries.
std::pair<Cloud, std::optional<GroupAction>> parse_uci_tictactoe(const std::string& text);

/// Cell permutations of the 8 board symmetries; element 0 is the identity.
std::array<std::array<int, 9>, 8> board_symmetries();

struct CylinderData {
  Cloud circle;         // C in R^7
  Cloud cylinder;       // C x L in R^8, row i * n_interval + j
  Relation projection;  // cylinder -> circle
};

/// Samples `n_circle` uniform angles on the unit circle and embeds them by
/// F(x, y) = (xy, x^2, y^2, x^2 y, y^2 x, x^3, y^3); L is `n_interval`
/// uniform samples of [0, interval_length]. Both clouds carry the column
/// "alpha" = acos(x).
CylinderData generate_cylinder(std::size_t n_circle, std::size_t n_interval, std::uint64_t seed,
                               double interval_length = 10.0);

/// Uniform double in [0, 1) from the top 53 bits of a mt19937_64 draw.
class UnitRandom {
 public:
  explicit UnitRandom(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mapperkit

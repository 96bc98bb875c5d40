#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

namespace hypdom::reference_cube {

// Vertex ids of the bundled cube document encode a corner of the unit cube:
// L/R for x = 0/1, D/U for y = 0/1, B/F for z = 0/1. The x axis points right,
// y up and z towards the front face.
inline std::optional<std::array<int, 3>> corner(std::string_view id) {
  if (id.size() != 3) return std::nullopt;
  std::array<int, 3> c{};
  constexpr std::array<std::string_view, 3> letters{"LR", "DU", "BF"};
  for (std::size_t k = 0; k < 3; ++k) {
    auto pos = letters[k].find(id[k]);
    if (pos == std::string_view::npos) return std::nullopt;
    c[k] = static_cast<int>(pos);
  }
  return c;
}

// Placement of a corner on the unit sphere centred at (0, 0, 1). Front maps
// to +X, right to +Y and top to +Z; with this labeling the straight-through
// gluings with a quarter twist give the classical generators
//   front->back  z -> ((i - sqrt3) z + 4) / (z + i - sqrt3)
//   left->right  z -> ((1 - sqrt3 i) z + 4) / (-z + 1 - sqrt3 i)
//   top->bottom  z -> (1 - sqrt3)(1 - i) z / (-(1 + sqrt3)(1 + i))
inline std::array<double, 3> ball_point(const std::array<int, 3>& c) {
  const double s = 1.0 / std::sqrt(3.0);
  return {(2 * c[2] - 1) * s, (2 * c[0] - 1) * s, 1.0 + (2 * c[1] - 1) * s};
}

}  // namespace hypdom::reference_cube

#pragma once

#include <vector>

#include "tangles/tangle.hpp"

namespace fixtures {

using namespace tangles;

inline VertexId V(std::int64_t xa, std::int64_t ya, std::int64_t yb = 0) { return {xa, 0, ya, yb}; }

inline DualPolyform square_circle() { return DualPolyform::circle(Tiling::Square, V(0, 0)); }
inline DualPolyform hex_circle() { return DualPolyform::circle(Tiling::Hexagonal, V(2, 0)); }
inline DualPolyform tri_circle() { return DualPolyform::circle(Tiling::Triangular, V(0, 0)); }

// black on the diagonal (0,0),(2,2)
inline DualPolyform single_square() {
  return DualPolyform::make(Tiling::Square, {{0, 0}},
                            {{V(0, 0), Color::Black}, {V(2, 0), Color::White}, {V(2, 2), Color::Black}, {V(0, 2), Color::White}});
}

// 2x2 block, corners black, center interior
inline DualPolyform block2x2() {
  Coloring c;
  for (int x = 0; x <= 4; x += 2) {
    for (int y = 0; y <= 4; y += 2) {
      if (x == 2 && y == 2) continue;
      c.push_back({V(x, y), (x / 2 + y / 2) % 2 == 0 ? Color::Black : Color::White});
    }
  }
  return DualPolyform::make(Tiling::Square, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, c);
}

// two squares meeting at (2,2), colored `shared`
inline DualPolyform two_squares_at_vertex(Color shared) {
  const Color o = shared == Color::Black ? Color::White : Color::Black;
  return DualPolyform::make(Tiling::Square, {{0, 0}, {1, 1}},
                            {{V(0, 0), shared}, {V(2, 0), o}, {V(2, 2), shared}, {V(0, 2), o},
                             {V(4, 2), o}, {V(4, 4), shared}, {V(2, 4), o}});
}

// white cut vertex between two squares
inline DualPolyform white_cut_pair() { return two_squares_at_vertex(Color::White); }

inline DualPolyform square_annulus() {
  std::vector<CellId> cells;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 1 || j != 1) cells.push_back({i, j});
  Coloring c;
  for (int x = 0; x <= 6; x += 2)
    for (int y = 0; y <= 6; y += 2) c.push_back({V(x, y), (x / 2 + y / 2) % 2 == 0 ? Color::Black : Color::White});
  return DualPolyform::make(Tiling::Square, cells, c);
}

inline DualPolyform single_hexagon() {
  Coloring c;
  const auto corners = cell_vertices(Tiling::Hexagonal, {0, 0});
  for (std::size_t k = 0; k < corners.size(); ++k) c.push_back({corners[k], k % 2 ? Color::White : Color::Black});
  return DualPolyform::make(Tiling::Hexagonal, {{0, 0}}, c);
}

inline DualPolyform single_triangle(Color a, Color b, Color c) {
  return DualPolyform::make(Tiling::Triangular, {{0, 0, Orient::Up}}, {{V(0, 0), a}, {V(2, 0), b}, {V(1, 0, 1), c}});
}

// rhombus whose short diagonal (2,0)-(1,√3) joins two whites
inline DualPolyform diamond_pinch() {
  return DualPolyform::make(Tiling::Triangular, {{0, 0, Orient::Up}, {0, 0, Orient::Down}},
                            {{V(0, 0), Color::Black}, {V(2, 0), Color::White}, {V(3, 0, 1), Color::Black}, {V(1, 0, 1), Color::White}});
}

inline DualPolyform diamond() {
  return DualPolyform::make(Tiling::Triangular, {{0, 0, Orient::Up}, {0, 0, Orient::Down}},
                            {{V(0, 0), Color::White}, {V(2, 0), Color::Black}, {V(3, 0, 1), Color::White}, {V(1, 0, 1), Color::Black}});
}

// four triangles around a black apex at the origin (wedges 60..300 degrees)
inline DualPolyform fan() {
  std::vector<CellId> cells;
  const auto around = cells_around(Tiling::Triangular, V(0, 0));
  for (int w = 1; w <= 4; ++w) cells.push_back(around[w]);
  Coloring c{{V(0, 0), Color::Black}};
  for (int k = 1; k <= 5; ++k) c.push_back({edge_vector(Direction(2 * k)), k % 2 ? Color::White : Color::Black});
  return DualPolyform::make(Tiling::Triangular, cells, c);
}

inline std::vector<Curvature> curvatures(const Tangle& t) {
  std::vector<Curvature> out;
  for (const auto& l : t.links) out.push_back(l.curvature);
  return out;
}

}  // namespace fixtures

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"

using namespace tangles;
using fixtures::V;

namespace {

bool near_point(const VertexId& v, double x, double y) {
  const ExactPoint p = v.position();
  return std::abs(p.x.to_double() - x) < 1e-9 && std::abs(p.y.to_double() - y) < 1e-9;
}

}  // namespace

TEST_CASE("tiling constants") {
  CHECK(links_per_circle(Tiling::Square) == 4);
  CHECK(links_per_circle(Tiling::Hexagonal) == 3);
  CHECK(links_per_circle(Tiling::Triangular) == 6);
  for (auto t : {Tiling::Square, Tiling::Hexagonal, Tiling::Triangular}) {
    CHECK(links_per_circle(t) * unit_steps(t) == Direction::kCount);
    CHECK(parse_tiling(name(t)) == t);
  }
  CHECK_THROWS_AS(parse_tiling("pentagonal"), std::invalid_argument);
}

TEST_CASE("cell vertices") {
  CHECK(cell_vertices(Tiling::Square, {0, 0}) == std::vector<VertexId>{V(0, 0), V(2, 0), V(2, 2), V(0, 2)});
  CHECK(cell_vertices(Tiling::Triangular, {0, 0, Orient::Up}) == std::vector<VertexId>{V(0, 0), V(2, 0), V(1, 0, 1)});
  const auto hex = cell_vertices(Tiling::Hexagonal, {0, 0});
  REQUIRE(hex.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(near_point(hex[k], 2 * std::cos(k * M_PI / 3), 2 * std::sin(k * M_PI / 3)));
  CHECK(std::find(hex.begin(), hex.end(), V(2, 0)) != hex.end());
  CHECK(std::find(hex.begin(), hex.end(), V(1, 0, 1)) != hex.end());
}

TEST_CASE("every cell edge has length 2 and corners are counterclockwise") {
  for (auto t : {Tiling::Square, Tiling::Hexagonal, Tiling::Triangular}) {
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        for (auto o : {Orient::Up, Orient::Down}) {
          if (o == Orient::Down && t != Tiling::Triangular) continue;
          const auto cs = cell_vertices(t, {i, j, o});
          CHECK(cs.size() == static_cast<std::size_t>(cell_sides(t)));
          for (std::size_t k = 0; k < cs.size(); ++k) {
            const auto& a = cs[k];
            const auto& b = cs[(k + 1) % cs.size()];
            const auto& c = cs[(k + 2) % cs.size()];
            CHECK(dist_squared(a.position(), b.position()) == QSqrt3(4));
            CHECK(cross(b.position() - a.position(), c.position() - b.position()).sign() > 0);
            CHECK(is_vertex(t, a));
          }
          CHECK(cell_from_vertices(t, cs) == CellId{i, j, t == Tiling::Triangular ? o : Orient::Up});
        }
      }
    }
  }
}

TEST_CASE("neighbors") {
  CHECK(vertex_neighbors(Tiling::Square, V(0, 0)) == std::vector<VertexId>{V(2, 0), V(0, 2), V(-2, 0), V(0, -2)});
  std::vector<int> dirs;
  for (auto d : edge_directions(Tiling::Triangular, V(0, 0))) dirs.push_back(d.index());
  CHECK(dirs == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(vertex_neighbors(Tiling::Hexagonal, V(2, 0)).size() == 3);
  for (const auto& v : cell_vertices(Tiling::Hexagonal, {1, -2})) {
    CHECK(vertex_neighbors(Tiling::Hexagonal, v).size() == 3);
    CHECK(cells_around(Tiling::Hexagonal, v).size() == 3);
  }
}

TEST_CASE("direction between neighbors") {
  CHECK(direction(V(0, 0), V(2, 0)).index() == 0);
  CHECK(direction(V(0, 0), V(1, 0, 1)).index() == 2);
  CHECK(direction(V(0, 0), V(0, -2)).index() == 9);
  CHECK_THROWS_AS(direction(V(0, 0), V(4, 0)), std::invalid_argument);
}

TEST_CASE("cells around a vertex fill their wedges") {
  for (auto t : {Tiling::Square, Tiling::Hexagonal, Tiling::Triangular}) {
    const VertexId v = t == Tiling::Hexagonal ? V(2, 0) : V(0, 0);
    const auto dirs = edge_directions(t, v);
    const auto cells = cells_around(t, v);
    REQUIRE(cells.size() == dirs.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto cs = cell_vertices(t, cells[i]);
      CHECK(std::find(cs.begin(), cs.end(), v) != cs.end());
      CHECK(std::find(cs.begin(), cs.end(), v + edge_vector(dirs[i])) != cs.end());
      CHECK(std::find(cs.begin(), cs.end(), v + edge_vector(dirs[(i + 1) % dirs.size()])) != cs.end());
      CHECK(wedge_index(t, v, dirs[i]) == static_cast<int>(i));
    }
  }
}

TEST_CASE("adjacency counts") {
  CHECK(edge_adjacent_cells(Tiling::Square, {0, 0}).size() == 4);
  CHECK(vertex_adjacent_cells(Tiling::Square, {0, 0}).size() == 8);
  CHECK(edge_adjacent_cells(Tiling::Hexagonal, {0, 0}).size() == 6);
  CHECK(vertex_adjacent_cells(Tiling::Hexagonal, {0, 0}).size() == 6);
  CHECK(edge_adjacent_cells(Tiling::Triangular, {0, 0, Orient::Up}).size() == 3);
  CHECK(vertex_adjacent_cells(Tiling::Triangular, {0, 0, Orient::Up}).size() == 12);
}

TEST_CASE("symmetry images") {
  const auto sq = fixtures::single_square();
  const auto images = symmetry_images(Tiling::Square, sq.cells, sq.coloring);
  CHECK(images.size() == 8);
  std::set<std::pair<std::vector<CellId>, Coloring>> distinct;
  for (const auto& im : images) distinct.insert({im.cells, im.coloring});
  CHECK(distinct.size() == 2);

  const auto circle = fixtures::square_circle();
  std::set<Coloring> one;
  for (const auto& im : symmetry_images(Tiling::Square, circle.cells, circle.coloring)) one.insert(im.coloring);
  CHECK(one.size() == 1);

  const std::vector<CellId> up{{0, 0, Orient::Up}};
  bool saw_down = false;
  for (const auto& im : symmetry_images(Tiling::Triangular, up, {}))
    saw_down = saw_down || im.cells.front().orient == Orient::Down;
  CHECK(saw_down);
}

TEST_CASE("point group preserves the lattice and distances") {
  for (auto t : {Tiling::Square, Tiling::Hexagonal, Tiling::Triangular}) {
    const VertexId a = t == Tiling::Hexagonal ? V(2, 0) : V(0, 0);
    for (const auto& b : vertex_neighbors(t, a)) {
      for (int g = 0; g < point_group_order(t); ++g) {
        const VertexId ga = apply_symmetry(t, g, a);
        const VertexId gb = apply_symmetry(t, g, b);
        CHECK(dist_squared(ga.position(), gb.position()) == QSqrt3(4));
      }
    }
  }
}

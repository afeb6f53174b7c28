#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tangles/geometry.hpp"

namespace tangles {

/// The three regular tilings. All lattices use edge length 2 so that the
/// packing circles have radius 1.
enum class Tiling : std::uint8_t { Square, Hexagonal, Triangular };

/// Links per full circle: 4, 3 or 6.
int links_per_circle(Tiling t);
/// Unit link angle in Direction steps: 3, 4 or 2 (90, 120, 60 degrees).
int unit_steps(Tiling t);
int vertex_degree(Tiling t);
int cell_sides(Tiling t);
std::string_view name(Tiling t);
/// Throws std::invalid_argument on an unknown name.
Tiling parse_tiling(std::string_view text);

/// A lattice vertex keyed by its exact position (xa + xb√3, ya + yb√3).
/// Every vertex of the three tilings has integer coefficients.
struct VertexId {
  std::int64_t xa = 0;
  std::int64_t xb = 0;
  std::int64_t ya = 0;
  std::int64_t yb = 0;

  ExactPoint position() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend VertexId operator+(const VertexId& p, const VertexId& q) {
    return {p.xa + q.xa, p.xb + q.xb, p.ya + q.ya, p.yb + q.yb};
  }
  friend VertexId operator-(const VertexId& p, const VertexId& q) {
    return {p.xa - q.xa, p.xb - q.xb, p.ya - q.ya, p.yb - q.yb};
  }
};

/// Converts an exact point back to a vertex key; throws if the coordinates are
/// not integral.
VertexId vertex_at(const ExactPoint& p);

/// The lattice edge vector 2(cos 30k, sin 30k).
VertexId edge_vector(Direction d);

/// Direction from v to its lattice neighbor u. Throws std::invalid_argument
/// when u - v is not a length-2 edge vector.
Direction direction(const VertexId& v, const VertexId& u);

enum class Orient : std::uint8_t { Up, Down };

/// Square (i, j); triangular (i, j, Up|Down); hexagonal axial (p, q) stored
/// in (i, j).
struct CellId {
  std::int32_t i = 0;
  std::int32_t j = 0;
  Orient orient = Orient::Up;

  friend auto operator<=>(const CellId&, const CellId&) = default;
};

bool is_vertex(Tiling t, const VertexId& v);

/// Corners in counterclockwise order.
std::vector<VertexId> cell_vertices(Tiling t, const CellId& c);

/// Edge directions at v in increasing order. Wedge i of v lies between
/// directions i and i + 1 (cyclically).
std::span<const Direction> edge_directions(Tiling t, const VertexId& v);

/// Neighbors of v, ordered like edge_directions. Throws if v is not a vertex.
std::vector<VertexId> vertex_neighbors(Tiling t, const VertexId& v);

/// Cells around v; entry i fills wedge i.
std::vector<CellId> cells_around(Tiling t, const VertexId& v);

/// Index of the wedge whose clockwise edge points in direction d.
int wedge_index(Tiling t, const VertexId& v, Direction d);

/// Identifies a cell from a subset of its corners: three corners suffice for
/// squares and triangles, hexagons need all six.
CellId cell_from_vertices(Tiling t, std::span<const VertexId> corners);

/// Cells sharing an edge with c.
std::vector<CellId> edge_adjacent_cells(Tiling t, const CellId& c);

/// Cells sharing at least one vertex with c, excluding c.
std::vector<CellId> vertex_adjacent_cells(Tiling t, const CellId& c);

enum class Color : std::uint8_t { Black, White };

using Coloring = std::vector<std::pair<VertexId, Color>>;

/// A cell set with a colored vertex set, both sorted.
struct ColoredCells {
  std::vector<CellId> cells;
  Coloring coloring;

  friend bool operator==(const ColoredCells&, const ColoredCells&) = default;
};

/// Order of the point group: 8 for the square tiling, 12 otherwise.
int point_group_order(Tiling t);

/// Element g of the point group (rotation g mod N after an optional
/// reflection in the x axis for g >= N).
VertexId apply_symmetry(Tiling t, int g, const VertexId& v);

/// Lattice translation that moves `least` to the canonical origin for its
/// vertex class.
VertexId normalizing_translation(Tiling t, const VertexId& least);

/// Images under every point-group element, each translated so that its
/// lexicographically least vertex sits at the canonical origin. Colors move
/// with their vertices.
std::vector<ColoredCells> symmetry_images(Tiling t, std::span<const CellId> cells, const Coloring& coloring);

struct VertexHash {
  std::size_t operator()(const VertexId& v) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(v.xa);
    for (std::int64_t x : {v.xb, v.ya, v.yb}) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
    return h;
  }
};

}  // namespace tangles

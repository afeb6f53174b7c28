#include "tangles/lattice.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace tangles {

int links_per_circle(Tiling t) {
  switch (t) {
    case Tiling::Square: return 4;
    case Tiling::Hexagonal: return 3;
    case Tiling::Triangular: return 6;
  }
  return 0;
}

int unit_steps(Tiling t) { return Direction::kCount / links_per_circle(t); }

int vertex_degree(Tiling t) { return links_per_circle(t); }

int cell_sides(Tiling t) {
  switch (t) {
    case Tiling::Square: return 4;
    case Tiling::Hexagonal: return 6;
    case Tiling::Triangular: return 3;
  }
  return 0;
}

std::string_view name(Tiling t) {
  switch (t) {
    case Tiling::Square: return "square";
    case Tiling::Hexagonal: return "hexagonal";
    case Tiling::Triangular: return "triangular";
  }
  return "?";
}

Tiling parse_tiling(std::string_view text) {
  if (text == "square") return Tiling::Square;
  if (text == "hexagonal" || text == "hex") return Tiling::Hexagonal;
  if (text == "triangular" || text == "tri") return Tiling::Triangular;
  throw std::invalid_argument("unknown tiling '" + std::string(text) + "'");
}

ExactPoint VertexId::position() const {
  return {QSqrt3(Rational(xa), Rational(xb)), QSqrt3(Rational(ya), Rational(yb))};
}

VertexId vertex_at(const ExactPoint& p) {
  const auto integral = [](const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1) throw std::invalid_argument("non-lattice coordinate " + to_string(q));
    return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
  };
  return {integral(p.x.a()), integral(p.x.b()), integral(p.y.a()), integral(p.y.b())};
}

namespace {

constexpr std::array<VertexId, 12> kEdgeVectors = {{
    {2, 0, 0, 0},
    {0, 1, 1, 0},
    {1, 0, 0, 1},
    {0, 0, 2, 0},
    {-1, 0, 0, 1},
    {0, -1, 1, 0},
    {-2, 0, 0, 0},
    {0, -1, -1, 0},
    {-1, 0, 0, -1},
    {0, 0, -2, 0},
    {1, 0, 0, -1},
    {0, 1, -1, 0},
}};

constexpr std::array<Direction, 4> kSquareDirs = {Direction(0), Direction(3), Direction(6), Direction(9)};
constexpr std::array<Direction, 6> kTriangularDirs = {Direction(0), Direction(2), Direction(4),
                                                      Direction(6), Direction(8), Direction(10)};
constexpr std::array<Direction, 3> kHexEvenDirs = {Direction(0), Direction(4), Direction(8)};
constexpr std::array<Direction, 3> kHexOddDirs = {Direction(2), Direction(6), Direction(10)};

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t exact_half(std::int64_t v) {
  if (v % 2 != 0) throw std::logic_error("symmetry left the lattice");
  return v / 2;
}

VertexId hex_center(const CellId& c) {
  return {3 * static_cast<std::int64_t>(c.i), 0, 0, static_cast<std::int64_t>(c.i) + 2 * static_cast<std::int64_t>(c.j)};
}

CellId hex_from_center(const VertexId& center) {
  if (center.xb != 0 || center.ya != 0 || mod(center.xa, 3) != 0) throw std::invalid_argument("not a hexagon center");
  const std::int64_t p = center.xa / 3;
  const std::int64_t twice_q = center.yb - p;
  if (twice_q % 2 != 0) throw std::invalid_argument("not a hexagon center");
  return {static_cast<std::int32_t>(p), static_cast<std::int32_t>(twice_q / 2), Orient::Up};
}

void require_vertex(Tiling t, const VertexId& v) {
  if (!is_vertex(t, v)) {
    throw std::invalid_argument("(" + std::to_string(v.xa) + "+" + std::to_string(v.xb) + "√3, " +
                                std::to_string(v.ya) + "+" + std::to_string(v.yb) + "√3) is not a " +
                                std::string(name(t)) + " vertex");
  }
}

}  // namespace

VertexId edge_vector(Direction d) { return kEdgeVectors[static_cast<std::size_t>(d.index())]; }

Direction direction(const VertexId& v, const VertexId& u) {
  const VertexId diff = u - v;
  for (int k = 0; k < Direction::kCount; ++k) {
    if (kEdgeVectors[static_cast<std::size_t>(k)] == diff) return Direction(k);
  }
  throw std::invalid_argument("vertices are not lattice neighbors");
}

bool is_vertex(Tiling t, const VertexId& v) {
  switch (t) {
    case Tiling::Square:
      return v.xb == 0 && v.yb == 0 && mod(v.xa, 2) == 0 && mod(v.ya, 2) == 0;
    case Tiling::Triangular:
      return v.xb == 0 && v.ya == 0 && mod(v.xa - v.yb, 2) == 0;
    case Tiling::Hexagonal:
      return v.xb == 0 && v.ya == 0 && mod(v.xa - v.yb, 2) == 0 && mod(v.xa, 3) != 0;
  }
  return false;
}

std::vector<VertexId> cell_vertices(Tiling t, const CellId& c) {
  const std::int64_t i = c.i;
  const std::int64_t j = c.j;
  switch (t) {
    case Tiling::Square:
      return {{2 * i, 0, 2 * j, 0}, {2 * i + 2, 0, 2 * j, 0}, {2 * i + 2, 0, 2 * j + 2, 0}, {2 * i, 0, 2 * j + 2, 0}};
    case Tiling::Triangular: {
      const std::int64_t x = 2 * i + j;
      if (c.orient == Orient::Up) return {{x, 0, 0, j}, {x + 2, 0, 0, j}, {x + 1, 0, 0, j + 1}};
      return {{x + 2, 0, 0, j}, {x + 3, 0, 0, j + 1}, {x + 1, 0, 0, j + 1}};
    }
    case Tiling::Hexagonal: {
      const VertexId center = hex_center(c);
      std::vector<VertexId> out;
      out.reserve(6);
      for (int k = 0; k < 12; k += 2) out.push_back(center + kEdgeVectors[static_cast<std::size_t>(k)]);
      return out;
    }
  }
  return {};
}

std::span<const Direction> edge_directions(Tiling t, const VertexId& v) {
  switch (t) {
    case Tiling::Square: return kSquareDirs;
    case Tiling::Triangular: return kTriangularDirs;
    case Tiling::Hexagonal: return mod(v.xa, 3) == 2 ? std::span<const Direction>(kHexEvenDirs) : kHexOddDirs;
  }
  return {};
}

std::vector<VertexId> vertex_neighbors(Tiling t, const VertexId& v) {
  require_vertex(t, v);
  std::vector<VertexId> out;
  for (Direction d : edge_directions(t, v)) out.push_back(v + edge_vector(d));
  return out;
}

int wedge_index(Tiling t, const VertexId& v, Direction d) {
  const auto dirs = edge_directions(t, v);
  const auto it = std::find(dirs.begin(), dirs.end(), d);
  if (it == dirs.end()) throw std::invalid_argument("direction is not an edge direction at this vertex");
  return static_cast<int>(it - dirs.begin());
}

CellId cell_from_vertices(Tiling t, std::span<const VertexId> corners) {
  switch (t) {
    case Tiling::Square: {
      if (corners.size() < 3) throw std::invalid_argument("square needs three corners");
      std::int64_t x = corners[0].xa;
      std::int64_t y = corners[0].ya;
      for (const auto& v : corners) {
        x = std::min(x, v.xa);
        y = std::min(y, v.ya);
      }
      return {static_cast<std::int32_t>(x / 2), static_cast<std::int32_t>(y / 2), Orient::Up};
    }
    case Tiling::Triangular: {
      if (corners.size() != 3) throw std::invalid_argument("triangle needs three corners");
      std::int64_t low = std::min({corners[0].yb, corners[1].yb, corners[2].yb});
      int at_low = 0;
      std::int64_t x = 0;
      for (const auto& v : corners) {
        if (v.yb != low) continue;
        x = at_low == 0 ? v.xa : std::min(x, v.xa);
        ++at_low;
      }
      if (at_low == 2) return {static_cast<std::int32_t>((x - low) / 2), static_cast<std::int32_t>(low), Orient::Up};
      return {static_cast<std::int32_t>((x - low - 2) / 2), static_cast<std::int32_t>(low), Orient::Down};
    }
    case Tiling::Hexagonal: {
      if (corners.size() != 6) throw std::invalid_argument("hexagon needs six corners");
      VertexId sum;
      for (const auto& v : corners) sum = sum + v;
      if (sum.xa % 6 != 0 || sum.yb % 6 != 0) throw std::invalid_argument("not a hexagon");
      return hex_from_center({sum.xa / 6, 0, 0, sum.yb / 6});
    }
  }
  return {};
}

std::vector<CellId> cells_around(Tiling t, const VertexId& v) {
  require_vertex(t, v);
  const auto dirs = edge_directions(t, v);
  const std::size_t n = dirs.size();
  std::vector<CellId> out;
  out.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    const Direction lo = dirs[w];
    const Direction hi = dirs[(w + 1) % n];
    if (t == Tiling::Hexagonal) {
      out.push_back(hex_from_center(v + edge_vector(lo.rotated(2))));
    } else {
      const std::array<VertexId, 3> corners = {v, v + edge_vector(lo), v + edge_vector(hi)};
      out.push_back(cell_from_vertices(t, corners));
    }
  }
  return out;
}

std::vector<CellId> edge_adjacent_cells(Tiling t, const CellId& c) {
  const auto i = c.i;
  const auto j = c.j;
  switch (t) {
    case Tiling::Square:
      return {{i + 1, j, Orient::Up}, {i, j + 1, Orient::Up}, {i - 1, j, Orient::Up}, {i, j - 1, Orient::Up}};
    case Tiling::Hexagonal:
      return {{i + 1, j, Orient::Up}, {i, j + 1, Orient::Up}, {i - 1, j + 1, Orient::Up},
              {i - 1, j, Orient::Up}, {i, j - 1, Orient::Up}, {i + 1, j - 1, Orient::Up}};
    case Tiling::Triangular:
      if (c.orient == Orient::Up) return {{i, j, Orient::Down}, {i - 1, j, Orient::Down}, {i, j - 1, Orient::Down}};
      return {{i, j, Orient::Up}, {i + 1, j, Orient::Up}, {i, j + 1, Orient::Up}};
  }
  return {};
}

std::vector<CellId> vertex_adjacent_cells(Tiling t, const CellId& c) {
  std::vector<CellId> out;
  for (const auto& v : cell_vertices(t, c)) {
    for (const auto& other : cells_around(t, v)) {
      if (other != c) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int point_group_order(Tiling t) { return t == Tiling::Square ? 8 : 12; }

VertexId apply_symmetry(Tiling t, int g, const VertexId& v) {
  const int rotations = t == Tiling::Square ? 4 : 6;
  VertexId p = v;
  if (g >= rotations) {
    p.ya = -p.ya;
    p.yb = -p.yb;
  }
  for (int r = 0; r < g % rotations; ++r) {
    if (t == Tiling::Square) {
      p = {-p.ya, -p.yb, p.xa, p.xb};
    } else {
      // (x, y) -> (x/2 - y√3/2, x√3/2 + y/2)
      p = {exact_half(p.xa - 3 * p.yb), exact_half(p.xb - p.ya), exact_half(p.ya + 3 * p.xb),
           exact_half(p.xa + p.yb)};
    }
  }
  return p;
}

VertexId normalizing_translation(Tiling t, const VertexId& least) {
  if (t != Tiling::Hexagonal) return least;
  // Honeycomb vertices come in two translation classes.
  const VertexId origin = mod(least.xa, 3) == 2 ? VertexId{2, 0, 0, 0} : VertexId{1, 0, 0, 1};
  return least - origin;
}

std::vector<ColoredCells> symmetry_images(Tiling t, std::span<const CellId> cells, const Coloring& coloring) {
  std::vector<std::vector<VertexId>> corners;
  corners.reserve(cells.size());
  for (const auto& c : cells) corners.push_back(cell_vertices(t, c));

  std::vector<ColoredCells> images;
  const int order = point_group_order(t);
  images.reserve(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    std::vector<std::vector<VertexId>> moved = corners;
    Coloring colors = coloring;
    bool have_least = false;
    VertexId least;
    const auto consider = [&](const VertexId& v) {
      if (!have_least || v < least) {
        least = v;
        have_least = true;
      }
    };
    for (auto& cell : moved) {
      for (auto& v : cell) {
        v = apply_symmetry(t, g, v);
        consider(v);
      }
    }
    for (auto& [v, color] : colors) {
      v = apply_symmetry(t, g, v);
      consider(v);
    }
    const VertexId shift = have_least ? normalizing_translation(t, least) : VertexId{};

    ColoredCells image;
    image.cells.reserve(moved.size());
    for (auto& cell : moved) {
      for (auto& v : cell) v = v - shift;
      image.cells.push_back(cell_from_vertices(t, cell));
    }
    for (auto& [v, color] : colors) v = v - shift;
    std::sort(image.cells.begin(), image.cells.end());
    std::sort(colors.begin(), colors.end());
    image.coloring = std::move(colors);
    images.push_back(std::move(image));
  }
  return images;
}

}  // namespace tangles

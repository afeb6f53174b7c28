#include "tangles/polyform.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tangles {

namespace {

std::string describe(const VertexId& v) {
  std::string out = "(" + std::to_string(v.xa);
  if (v.xb != 0) out += (v.xb < 0 ? "-" : "+") + std::to_string(std::abs(v.xb)) + "√3";
  out += ", ";
  if (v.yb == 0 || v.ya != 0) out += std::to_string(v.ya);
  if (v.yb != 0) out += (v.ya != 0 && v.yb > 0 ? "+" : "") + std::to_string(v.yb) + "√3";
  return out + ")";
}

std::string describe(const CellId& c) {
  std::string out = "[" + std::to_string(c.i) + "," + std::to_string(c.j);
  return out + "]" + (c.orient == Orient::Down ? "D" : "");
}

// Position of cell c in the wedge order at its corner v.
int wedge_of(Tiling t, const CellId& c, const std::vector<VertexId>& corners, std::size_t k) {
  const VertexId& v = corners[k];
  const VertexId& next = corners[(k + 1) % corners.size()];
  (void)c;
  return wedge_index(t, v, direction(v, next));
}

bool bit(std::uint32_t mask, int i, int n) { return (mask >> (((i % n) + n) % n)) & 1u; }

bool contains_sorted(const std::vector<CellId>& cells, const CellId& c) {
  return std::binary_search(cells.begin(), cells.end(), c);
}

bool cells_connected(Tiling t, const std::vector<CellId>& cells, const VertexId* removed) {
  if (cells.empty()) return true;
  std::vector<bool> seen(cells.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& v : cell_vertices(t, cells[at])) {
      if (removed != nullptr && v == *removed) continue;
      for (const auto& other : cells_around(t, v)) {
        const auto it = std::lower_bound(cells.begin(), cells.end(), other);
        if (it == cells.end() || *it != other) continue;
        const auto idx = static_cast<std::size_t>(it - cells.begin());
        if (seen[idx]) continue;
        seen[idx] = true;
        ++reached;
        queue.push_back(idx);
      }
    }
  }
  return reached == cells.size();
}

// First uncovered cell inside a padded bounding box that cannot reach the
// box border through uncovered cells.
std::optional<CellId> find_hole(Tiling t, const std::vector<CellId>& cells) {
  std::int32_t i0 = cells.front().i, i1 = i0, j0 = cells.front().j, j1 = j0;
  for (const auto& c : cells) {
    i0 = std::min(i0, c.i);
    i1 = std::max(i1, c.i);
    j0 = std::min(j0, c.j);
    j1 = std::max(j1, c.j);
  }
  i0 -= 2;
  j0 -= 2;
  i1 += 2;
  j1 += 2;
  const auto inside = [&](const CellId& c) { return c.i >= i0 && c.i <= i1 && c.j >= j0 && c.j <= j1; };
  std::set<CellId> reached;
  std::deque<CellId> queue;
  const CellId start{i0, j0, Orient::Up};
  reached.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const CellId c = queue.front();
    queue.pop_front();
    for (const auto& n : edge_adjacent_cells(t, c)) {
      if (!inside(n) || contains_sorted(cells, n) || reached.count(n) != 0) continue;
      reached.insert(n);
      queue.push_back(n);
    }
  }
  // Any uncovered neighbor of the set must have been reached.
  for (const auto& c : cells) {
    for (const auto& n : edge_adjacent_cells(t, c)) {
      if (!contains_sorted(cells, n) && reached.count(n) == 0) return n;
    }
  }
  return std::nullopt;
}

}  // namespace

DualPolyform DualPolyform::make(Tiling t, std::vector<CellId> cells, Coloring coloring) {
  if (t != Tiling::Triangular) {
    for (auto& c : cells) c.orient = Orient::Up;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::sort(coloring.begin(), coloring.end());
  coloring.erase(std::unique(coloring.begin(), coloring.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 coloring.end());
  return DualPolyform{t, std::move(cells), std::move(coloring)};
}

DualPolyform DualPolyform::circle(Tiling t, const VertexId& v) {
  return DualPolyform{t, {}, {{v, Color::Black}}};
}

std::optional<Color> DualPolyform::color_of(const VertexId& v) const {
  const auto it = std::lower_bound(coloring.begin(), coloring.end(), v,
                                   [](const auto& entry, const VertexId& key) { return entry.first < key; });
  if (it == coloring.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::optional<VertexId> DualPolyform::circle_vertex() const {
  if (!cells.empty() || coloring.size() != 1) return std::nullopt;
  return coloring.front().first;
}

Coverage::Coverage(Tiling t, std::span<const CellId> cells) : tiling_(t) {
  masks_.reserve(cells.size() * static_cast<std::size_t>(cell_sides(t)));
  for (const auto& c : cells) {
    const auto corners = cell_vertices(t, c);
    for (std::size_t k = 0; k < corners.size(); ++k) {
      masks_.emplace_back(corners[k], 1u << wedge_of(t, c, corners, k));
    }
  }
  std::sort(masks_.begin(), masks_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (out > 0 && masks_[out - 1].first == masks_[i].first) {
      masks_[out - 1].second |= masks_[i].second;
    } else {
      masks_[out++] = masks_[i];
    }
  }
  masks_.resize(out);
}

std::uint32_t Coverage::mask(const VertexId& v) const {
  const auto it = std::lower_bound(masks_.begin(), masks_.end(), v,
                                   [](const auto& entry, const VertexId& key) { return entry.first < key; });
  if (it == masks_.end() || it->first != v) return 0;
  return it->second;
}

std::uint32_t Coverage::full_mask(const VertexId& v) const {
  (void)v;
  return (1u << vertex_degree(tiling_)) - 1u;
}

bool Coverage::on_boundary(const VertexId& v) const {
  const std::uint32_t m = mask(v);
  return m != 0 && m != full_mask(v);
}

bool Coverage::is_boundary_edge(const VertexId& v, const VertexId& u) const {
  const int e = wedge_index(tiling_, v, direction(v, u));
  const int n = vertex_degree(tiling_);
  const std::uint32_t m = mask(v);
  return bit(m, e - 1, n) != bit(m, e, n);
}

int Coverage::covered_runs(const VertexId& v) const {
  const std::uint32_t m = mask(v);
  const int n = vertex_degree(tiling_);
  if (m == 0) return 0;
  if (m == full_mask(v)) return 1;
  int runs = 0;
  for (int i = 0; i < n; ++i) {
    if (bit(m, i, n) && !bit(m, i - 1, n)) ++runs;
  }
  return runs;
}

std::vector<VertexId> Coverage::boundary_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, m] : masks_) {
    if (m != full_mask(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Coverage::boundary_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  const int n = vertex_degree(tiling_);
  for (const auto& [v, m] : masks_) {
    if (m == full_mask(v)) continue;
    const auto dirs = edge_directions(tiling_, v);
    for (int e = 0; e < n; ++e) {
      if (bit(m, e - 1, n) == bit(m, e, n)) continue;
      const VertexId u = v + edge_vector(dirs[static_cast<std::size_t>(e)]);
      if (v < u) out.emplace_back(v, u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> boundary_vertices(const DualPolyform& p) {
  if (p.is_circle()) {
    if (auto v = p.circle_vertex()) return {*v};
    return {};
  }
  return Coverage(p.tiling, p.cells).boundary_vertices();
}

BoundaryWalk boundary_walk(const DualPolyform& p) {
  BoundaryWalk walk;
  if (p.is_circle()) return walk;
  const Tiling t = p.tiling;
  const Coverage cov(t, p.cells);
  const int n = vertex_degree(t);

  std::vector<Visit> visits;
  for (const auto& [v, m] : cov.entries()) {
    if (m == cov.full_mask(v)) continue;
    const auto dirs = edge_directions(t, v);
    const auto around = cells_around(t, v);
    for (int a = 0; a < n; ++a) {
      // Start of an uncovered run.
      if (bit(m, a, n) || !bit(m, a - 1, n)) continue;
      int b = a;
      while (!bit(m, b + 1, n)) ++b;
      Visit visit;
      visit.vertex = v;
      visit.from = v + edge_vector(dirs[static_cast<std::size_t>(a)]);
      visit.to = v + edge_vector(dirs[static_cast<std::size_t>((b + 1) % n)]);
      int c = a - 1;
      while (bit(m, c - 1, n)) --c;
      for (int w = c; w <= a - 1; ++w) visit.cells.push_back(around[static_cast<std::size_t>(((w % n) + n) % n)]);
      visits.push_back(std::move(visit));
    }
  }
  if (visits.empty()) throw std::invalid_argument("cell set has no boundary");

  const auto key_less = [](const Visit& x, const Visit& y) {
    return std::tie(x.vertex, x.from) < std::tie(y.vertex, y.from);
  };
  std::sort(visits.begin(), visits.end(), key_less);
  std::vector<bool> used(visits.size(), false);
  std::size_t at = 0;
  while (!used[at]) {
    used[at] = true;
    walk.visits.push_back(visits[at]);
    Visit probe;
    probe.vertex = visits[at].to;
    probe.from = visits[at].vertex;
    const auto it = std::lower_bound(visits.begin(), visits.end(), probe, key_less);
    if (it == visits.end() || it->vertex != probe.vertex || it->from != probe.from) {
      throw std::invalid_argument("boundary walk broke at " + describe(probe.vertex));
    }
    at = static_cast<std::size_t>(it - visits.begin());
  }
  if (at != 0 || walk.visits.size() != visits.size()) {
    throw std::invalid_argument("disconnected or holed cell set: boundary has several cycles");
  }
  return walk;
}

bool ValidityReport::combinatorially_valid() const {
  return nonempty.passed && connected.passed && simply_connected.passed && no_white_cut.passed &&
         alternating.passed && no_white_pair.passed && domain.passed;
}

std::vector<VertexId> cut_vertices(const DualPolyform& p) {
  std::vector<VertexId> out;
  if (p.cells.size() < 2) return out;
  const Coverage cov(p.tiling, p.cells);
  for (const auto& [v, m] : cov.entries()) {
    if (cov.covered_runs(v) < 2) continue;
    if (!cells_connected(p.tiling, p.cells, &v)) out.push_back(v);
  }
  return out;
}

ValidityReport validate(const DualPolyform& p) {
  ValidityReport r;
  const Tiling t = p.tiling;
  const auto fail = [](CheckResult& check, std::string detail) {
    if (!check.passed) return;
    check.passed = false;
    check.detail = std::move(detail);
  };

  for (const auto& [v, color] : p.coloring) {
    if (!is_vertex(t, v)) fail(r.domain, describe(v) + " is not a lattice vertex");
  }

  if (p.cells.empty()) {
    if (p.coloring.size() != 1) {
      fail(r.nonempty, "no cells and " + std::to_string(p.coloring.size()) + " colored vertices");
    } else if (p.coloring.front().second != Color::Black) {
      fail(r.nonempty, "circle vertex " + describe(p.coloring.front().first) + " is white");
    }
    return r;
  }

  if (!cells_connected(t, p.cells, nullptr)) fail(r.connected, "cells are not vertex-connected");
  if (auto hole = find_hole(t, p.cells)) fail(r.simply_connected, "hole at cell " + describe(*hole));

  const Coverage cov(t, p.cells);
  const auto boundary = cov.boundary_vertices();
  {
    std::size_t i = 0;
    std::size_t k = 0;
    while (i < boundary.size() || k < p.coloring.size()) {
      if (k == p.coloring.size() || (i < boundary.size() && boundary[i] < p.coloring[k].first)) {
        fail(r.domain, "boundary vertex " + describe(boundary[i]) + " is uncolored");
        ++i;
      } else if (i == boundary.size() || p.coloring[k].first < boundary[i]) {
        fail(r.domain, describe(p.coloring[k].first) + " is colored but not on the boundary");
        ++k;
      } else {
        ++i;
        ++k;
      }
    }
  }

  if (r.connected.passed) {
    for (const auto& v : cut_vertices(p)) {
      if (p.color_of(v) == Color::White) fail(r.no_white_cut, "white cut vertex " + describe(v));
    }
  }

  for (const auto& [v, u] : cov.boundary_edges()) {
    const auto cv = p.color_of(v);
    const auto cu = p.color_of(u);
    if (cv && cu && *cv == *cu) {
      fail(r.alternating, "boundary edge " + describe(v) + "-" + describe(u) + " joins equal colors");
    }
  }

  // Only edges with a covered cell on at least one side: two white disks
  // kissing out in the exterior do not touch the curve.
  for (const auto& [v, color] : p.coloring) {
    if (color != Color::White || !is_vertex(t, v)) continue;
    const std::uint32_t m = cov.mask(v);
    const auto dirs = edge_directions(t, v);
    const int deg = vertex_degree(t);
    for (int e = 0; e < deg; ++e) {
      const VertexId u = v + edge_vector(dirs[static_cast<std::size_t>(e)]);
      if (!bit(m, e - 1, deg) && !bit(m, e, deg)) continue;
      if (v < u && p.color_of(u) == Color::White) {
        fail(r.no_white_pair, "edge " + describe(v) + "-" + describe(u) + " joins two white vertices");
      }
    }
  }
  return r;
}

namespace {

void put_int(std::string& out, std::int64_t value) {
  if (value < INT32_MIN || value > INT32_MAX) throw std::overflow_error("coordinate out of range");
  // Offset so that byte order matches numeric order.
  const auto u = static_cast<std::uint32_t>(static_cast<std::int64_t>(value) + 0x80000000LL);
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((u >> shift) & 0xffu));
}

std::string encode(Tiling t, const ColoredCells& image) {
  std::string out;
  out.reserve(2 + image.cells.size() * 9 + image.coloring.size() * 17);
  out.push_back(static_cast<char>(t));
  put_int(out, static_cast<std::int64_t>(image.cells.size()));
  for (const auto& c : image.cells) {
    put_int(out, c.i);
    put_int(out, c.j);
    out.push_back(static_cast<char>(c.orient));
  }
  put_int(out, static_cast<std::int64_t>(image.coloring.size()));
  for (const auto& [v, color] : image.coloring) {
    put_int(out, v.xa);
    put_int(out, v.xb);
    put_int(out, v.ya);
    put_int(out, v.yb);
    out.push_back(static_cast<char>(color));
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const DualPolyform& p) {
  CanonicalForm best;
  bool have = false;
  for (auto& image : symmetry_images(p.tiling, p.cells, p.coloring)) {
    std::string key = encode(p.tiling, image);
    if (!have || key < best.key) {
      best.key = std::move(key);
      best.polyform = DualPolyform{p.tiling, std::move(image.cells), std::move(image.coloring)};
      have = true;
    }
  }
  return best;
}

CanonicalForm canonicalize(const DualPolyform& p) {
  const ValidityReport r = validate(p);
  if (!r.combinatorially_valid()) throw std::invalid_argument("cannot canonicalize an invalid polyform");
  return canonical_form(p);
}

Color forced_color(Tiling t, const VertexId& black, const VertexId& v) {
  switch (t) {
    case Tiling::Square: {
      const auto cls = [](const VertexId& x) { return ((x.xa / 2 + x.ya / 2) % 2 + 2) % 2; };
      return cls(black) == cls(v) ? Color::Black : Color::White;
    }
    case Tiling::Hexagonal: {
      const auto cls = [](const VertexId& x) { return ((x.xa % 3) + 3) % 3; };
      return cls(black) == cls(v) ? Color::Black : Color::White;
    }
    case Tiling::Triangular:
      break;
  }
  throw std::invalid_argument("the triangular lattice has no forced two-coloring");
}

DualGraph to_dual_graph(const DualPolyform& p) {
  if (p.tiling != Tiling::Square) throw std::invalid_argument("dual graphs are defined for square polyforms only");
  DualGraph g;
  if (p.is_circle()) {
    if (auto v = p.circle_vertex()) g.vertices.push_back(*v);
    return g;
  }
  std::optional<VertexId> black;
  for (const auto& [v, color] : p.coloring) {
    if (color == Color::Black) {
      black = v;
      break;
    }
  }
  if (!black) throw std::invalid_argument("polyform has no black vertex");
  std::set<VertexId> vertices;
  for (const auto& c : p.cells) {
    std::vector<VertexId> ends;
    for (const auto& v : cell_vertices(p.tiling, c)) {
      if (forced_color(p.tiling, *black, v) == Color::Black) ends.push_back(v);
    }
    vertices.insert(ends.begin(), ends.end());
    g.edges.emplace_back(ends[0], ends[1]);
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace tangles

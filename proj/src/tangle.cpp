#include "tangles/tangle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tangles {

namespace {

// a + b√3 with integer coefficients.
struct Z3 {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

Z3 mul(Z3 p, Z3 q) { return {p.a * q.a + 3 * p.b * q.b, p.a * q.b + p.b * q.a}; }

Z3 cross(const VertexId& p, const VertexId& q) {
  const Z3 l = mul({p.xa, p.xb}, {q.ya, q.yb});
  const Z3 r = mul({p.ya, p.yb}, {q.xa, q.xb});
  return {l.a - r.a, l.b - r.b};
}

VertexId twice(const VertexId& v) { return v + v; }

ExactPoint half(const VertexId& v) {
  const Rational h(1, 2);
  return {QSqrt3(Rational(v.xa) * h, Rational(v.xb) * h), QSqrt3(Rational(v.ya) * h, Rational(v.yb) * h)};
}

// Directions covered by a link, as [lo, lo + len] counterclockwise.
struct Interval {
  Direction lo;
  int len = 0;
  bool contains(Direction d) const { return ccw_steps(lo, d) <= len; }
};

Interval interval(Tiling t, const Link& link) {
  const int u = unit_steps(t);
  if (link.curvature == Curvature::Convex) return {link.start, u};
  return {link.start.rotated(-u), u};
}

std::string describe(const VertexId& v) {
  return "(" + std::to_string(v.xa) + (v.xb ? "+" + std::to_string(v.xb) + "√3" : "") + ", " +
         std::to_string(v.ya) + (v.yb ? "+" + std::to_string(v.yb) + "√3" : "") + ")";
}

}  // namespace

Direction end_direction(Tiling t, const Link& link) {
  const int u = unit_steps(t);
  return link.start.rotated(link.curvature == Curvature::Convex ? u : -u);
}

VertexId doubled_start(const Link& link) { return twice(link.center) + edge_vector(link.start); }

VertexId doubled_end(Tiling t, const Link& link) { return twice(link.center) + edge_vector(end_direction(t, link)); }

ExactPoint start_point(const Link& link) { return half(doubled_start(link)); }

ExactPoint end_point(Tiling t, const Link& link) { return half(doubled_end(t, link)); }

Tangle trace_tangle(const DualPolyform& p) {
  Tangle out{p.tiling, {}};
  const int u = unit_steps(p.tiling);
  if (p.is_circle()) {
    const auto v = p.circle_vertex();
    if (!v) throw std::invalid_argument("degenerate polyform needs exactly one vertex");
    for (int k = 0; k < links_per_circle(p.tiling); ++k) {
      out.links.push_back({*v, Curvature::Convex, Direction(k * u)});
    }
    return out;
  }
  for (const auto& visit : boundary_walk(p).visits) {
    const auto color = p.color_of(visit.vertex);
    if (!color) throw std::invalid_argument("boundary vertex " + describe(visit.vertex) + " is uncolored");
    const Direction du = direction(visit.vertex, visit.from);
    const Direction dw = direction(visit.vertex, visit.to);
    const bool black = *color == Color::Black;
    const int extent = black ? ccw_steps(du, dw) : ccw_steps(dw, du);
    if (extent == 0 || extent % u != 0) {
      throw std::invalid_argument("arc extent at " + describe(visit.vertex) + " is not a positive multiple of the unit angle");
    }
    for (int k = 0; k < extent / u; ++k) {
      out.links.push_back({visit.vertex, black ? Curvature::Convex : Curvature::Concave,
                           du.rotated(black ? k * u : -k * u)});
    }
  }
  return out;
}

Tangle build_tangle(const DualPolyform& p) {
  const ValidityReport r = validate(p);
  if (!r.combinatorially_valid()) throw std::invalid_argument("polyform fails the validity checks");
  return trace_tangle(p);
}

TangleMetrics metrics(const Tangle& t, const DualPolyform& p) {
  TangleMetrics m;
  m.length = t.links.size();
  for (const auto& link : t.links) (link.curvature == Curvature::Convex ? m.convex : m.concave)++;
  m.size = p.size();
  if (t.tiling == Tiling::Square && m.length % 4 == 0) m.tangle_class = m.length / 4;
  return m;
}

bool check_gauss_bonnet(const Tangle& t) {
  long long j = 0;
  long long k = 0;
  for (const auto& link : t.links) (link.curvature == Curvature::Convex ? j : k)++;
  return j - k == links_per_circle(t.tiling);
}

AreaValue enclosed_area(const Tangle& t) {
  const std::size_t n = t.links.size();
  if (n == 0) throw std::invalid_argument("empty tangle");
  Z3 sum;
  long long signed_links = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Link& link = t.links[i];
    if (doubled_end(t.tiling, link) != doubled_start(t.links[(i + 1) % n])) {
      throw std::invalid_argument("tangle is not closed at link " + std::to_string(i));
    }
    // 1/2 c x (P2 - P1) with P = c + e/2, accumulated as c x (e2 - e1) / 4.
    const Z3 c = cross(link.center, edge_vector(end_direction(t.tiling, link)) - edge_vector(link.start));
    sum.a += c.a;
    sum.b += c.b;
    signed_links += link.curvature == Curvature::Convex ? 1 : -1;
  }
  AreaValue area;
  area.alg = QSqrt3(Rational(sum.a, 4), Rational(sum.b, 4));
  area.pi = QSqrt3(Rational(signed_links, links_per_circle(t.tiling)));
  return area;
}

AreaValue area_formula(Tiling t, std::size_t m) {
  const auto mm = static_cast<long long>(m);
  switch (t) {
    case Tiling::Square: return {QSqrt3(4 * mm), QSqrt3(1)};
    case Tiling::Hexagonal: return {QSqrt3(0, 6 * mm), QSqrt3(1)};
    case Tiling::Triangular: return {QSqrt3(0, mm), QSqrt3(1)};
  }
  return {};
}

bool length_congruence_holds(Tiling t, std::size_t length) {
  switch (t) {
    case Tiling::Square: return length % 4 == 0;
    case Tiling::Hexagonal: return length % 6 == 3;
    case Tiling::Triangular: return length % 2 == 0;
  }
  return false;
}

std::vector<std::size_t> bulb_sizes(const Tangle& t) {
  std::vector<std::size_t> out;
  const std::size_t n = t.links.size();
  std::size_t first_concave = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.links[i].curvature == Curvature::Concave) {
      first_concave = i;
      break;
    }
  }
  if (first_concave == n) return out;
  std::size_t run = 0;
  for (std::size_t s = 1; s <= n; ++s) {
    const Link& link = t.links[(first_concave + s) % n];
    if (link.curvature == Curvature::Convex) {
      ++run;
    } else {
      if (run > 0) out.push_back(run);
      run = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view name(SimplicityViolation::Kind kind) {
  switch (kind) {
    case SimplicityViolation::Kind::Gap: return "gap";
    case SimplicityViolation::Kind::Cusp: return "cusp";
    case SimplicityViolation::Kind::Overlap: return "overlap";
    case SimplicityViolation::Kind::Touch: return "touch";
  }
  return "?";
}

SimplicityReport check_simple(const Tangle& t) {
  constexpr std::size_t kMaxViolations = 64;
  SimplicityReport report;
  const std::size_t n = t.links.size();
  const auto add = [&](SimplicityViolation::Kind kind, std::size_t a, std::size_t b, ExactPoint where) {
    if (report.violations.size() < kMaxViolations) report.violations.push_back({kind, a, b, std::move(where)});
  };
  if (n == 0) {
    add(SimplicityViolation::Kind::Gap, 0, 0, {});
    return report;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    const Link& a = t.links[i];
    const Link& b = t.links[next];
    const VertexId joint = doubled_end(t.tiling, a);
    if (joint != doubled_start(b)) {
      add(SimplicityViolation::Kind::Gap, i, next, half(joint));
      continue;
    }
    if (a.center == b.center) {
      if (a.curvature != b.curvature) add(SimplicityViolation::Kind::Cusp, i, next, half(joint));
    } else if (a.curvature == b.curvature) {
      add(SimplicityViolation::Kind::Cusp, i, next, half(joint));
    }
  }

  const auto consecutive = [n](std::size_t i, std::size_t j) { return j == (i + 1) % n || i == (j + 1) % n; };

  std::vector<std::pair<VertexId, std::size_t>> by_center;
  by_center.reserve(n);
  for (std::size_t i = 0; i < n; ++i) by_center.emplace_back(t.links[i].center, i);
  std::sort(by_center.begin(), by_center.end());
  const auto links_at = [&](const VertexId& c) {
    const auto lo = std::lower_bound(by_center.begin(), by_center.end(), std::make_pair(c, std::size_t{0}));
    auto hi = lo;
    while (hi != by_center.end() && hi->first == c) ++hi;
    return std::make_pair(lo, hi);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Link& a = t.links[i];
    const Interval ia = interval(t.tiling, a);
    auto [lo, hi] = links_at(a.center);
    for (auto it = lo; it != hi; ++it) {
      const std::size_t j = it->second;
      if (j <= i || consecutive(i, j)) continue;
      const Interval ib = interval(t.tiling, t.links[j]);
      if (ia.contains(ib.lo) || ib.contains(ia.lo)) {
        const Direction at = ia.contains(ib.lo) ? ib.lo : ia.lo;
        add(SimplicityViolation::Kind::Overlap, i, j, half(twice(a.center) + edge_vector(at)));
      }
    }
    for (int k = 0; k < Direction::kCount; ++k) {
      const Direction d(k);
      const VertexId other = a.center + edge_vector(d);
      if (!(a.center < other)) continue;  // each kissing pair of circles once
      if (!ia.contains(d)) continue;
      auto [olo, ohi] = links_at(other);
      for (auto it = olo; it != ohi; ++it) {
        const std::size_t j = it->second;
        if (consecutive(i, j)) continue;
        if (interval(t.tiling, t.links[j]).contains(d.opposite())) {
          add(SimplicityViolation::Kind::Touch, std::min(i, j), std::max(i, j), half(a.center + other));
        }
      }
    }
  }
  return report;
}

DualPolyform dual_polyform(const Tangle& t) {
  const std::size_t n = t.links.size();
  if (n == 0) throw std::invalid_argument("empty tangle");
  const Tiling tiling = t.tiling;

  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.links[i].center != t.links[(i + n - 1) % n].center) {
      first = i;
      break;
    }
  }
  if (first == n) {
    const bool circle = static_cast<int>(n) == links_per_circle(tiling) &&
                        std::all_of(t.links.begin(), t.links.end(),
                                    [](const Link& l) { return l.curvature == Curvature::Convex; });
    if (!circle) throw std::invalid_argument("single-center tangle is not a circle");
    return DualPolyform::circle(tiling, t.links.front().center);
  }

  Coloring colors;
  std::set<std::pair<VertexId, VertexId>> boundary;
  std::vector<CellId> seeds;
  VertexId lo_corner = t.links.front().center;
  VertexId hi_corner = lo_corner;
  for (std::size_t s = 0; s < n; ++s) {
    const Link& link = t.links[(first + s) % n];
    const Link& next = t.links[(first + s + 1) % n];
    colors.emplace_back(link.center, link.curvature == Curvature::Convex ? Color::Black : Color::White);
    lo_corner = {std::min(lo_corner.xa, link.center.xa), std::min(lo_corner.xb, link.center.xb),
                 std::min(lo_corner.ya, link.center.ya), std::min(lo_corner.yb, link.center.yb)};
    hi_corner = {std::max(hi_corner.xa, link.center.xa), std::max(hi_corner.xb, link.center.xb),
                 std::max(hi_corner.ya, link.center.ya), std::max(hi_corner.yb, link.center.yb)};
    if (next.center == link.center) continue;
    if (!is_vertex(tiling, link.center) || !is_vertex(tiling, next.center)) {
      throw std::invalid_argument("link center is not a lattice vertex");
    }
    try {
      const Direction d = direction(link.center, next.center);
      seeds.push_back(cells_around(tiling, link.center)[static_cast<std::size_t>(wedge_index(tiling, link.center, d))]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("consecutive centers " + describe(link.center) + " and " + describe(next.center) +
                                  " are not joined by a tiling edge");
    }
    boundary.insert(std::minmax(link.center, next.center));
  }

  std::sort(colors.begin(), colors.end());
  for (std::size_t i = 1; i < colors.size(); ++i) {
    if (colors[i].first == colors[i - 1].first && colors[i].second != colors[i - 1].second) {
      throw std::invalid_argument("vertex " + describe(colors[i].first) + " carries both curvatures");
    }
  }
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

  const auto in_box = [&](const VertexId& v) {
    return v.xa >= lo_corner.xa && v.xa <= hi_corner.xa && v.xb >= lo_corner.xb && v.xb <= hi_corner.xb &&
           v.ya >= lo_corner.ya && v.ya <= hi_corner.ya && v.yb >= lo_corner.yb && v.yb <= hi_corner.yb;
  };

  std::set<CellId> cells;
  std::deque<CellId> queue;
  for (const auto& c : seeds) {
    if (cells.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    const CellId c = queue.front();
    queue.pop_front();
    const auto corners = cell_vertices(tiling, c);
    for (const auto& v : corners) {
      if (!in_box(v)) throw std::invalid_argument("flood fill escaped the curve: inconsistent arc data");
    }
    for (const auto& other : edge_adjacent_cells(tiling, c)) {
      if (cells.count(other) != 0) continue;
      const auto other_corners = cell_vertices(tiling, other);
      std::vector<VertexId> shared;
      for (const auto& v : corners) {
        if (std::find(other_corners.begin(), other_corners.end(), v) != other_corners.end()) shared.push_back(v);
      }
      if (shared.size() != 2) throw std::logic_error("edge-adjacent cells must share two corners");
      if (boundary.count(std::minmax(shared[0], shared[1])) != 0) continue;
      cells.insert(other);
      queue.push_back(other);
    }
  }

  DualPolyform p = DualPolyform::make(tiling, {cells.begin(), cells.end()}, std::move(colors));
  const auto expected = boundary_vertices(p);
  if (expected.size() != p.coloring.size() ||
      !std::equal(expected.begin(), expected.end(), p.coloring.begin(),
                  [](const VertexId& v, const auto& entry) { return v == entry.first; })) {
    throw std::invalid_argument("link centers do not match the boundary of the recovered cells");
  }
  return p;
}

}  // namespace tangles

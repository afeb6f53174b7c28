#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "tangles/enumerate.hpp"

using namespace tangles;
using namespace fixtures;

namespace {

struct P {
  double x, y;
};

// Samples each link as a polyline in doubles; independent of the exact code.
std::vector<std::vector<P>> sample(const Tangle& t, int per_link = 24) {
  std::vector<std::vector<P>> out;
  const double unit = 2 * M_PI / links_per_circle(t.tiling);
  for (const auto& l : t.links) {
    const ExactPoint c = l.center.position();
    const double cx = c.x.to_double(), cy = c.y.to_double();
    const double a0 = l.start.index() * M_PI / 6;
    const double sweep = l.curvature == Curvature::Convex ? unit : -unit;
    std::vector<P> pts;
    for (int s = 0; s <= per_link; ++s) {
      const double a = a0 + sweep * s / per_link;
      pts.push_back({cx + std::cos(a), cy + std::sin(a)});
    }
    out.push_back(std::move(pts));
  }
  return out;
}

double shoelace(const Tangle& t) {
  double a = 0;
  std::vector<P> all;
  for (const auto& pts : sample(t, 400)) all.insert(all.end(), pts.begin(), pts.end() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const P& p = all[i];
    const P& q = all[(i + 1) % all.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

double value(const AreaValue& v) { return v.alg.to_double() + v.pi.to_double() * M_PI; }

// Smallest distance between sample points of links that are not cyclic neighbors.
double min_separation(const Tangle& t) {
  const auto s = sample(t, 48);
  const std::size_t n = s.size();
  double best = 1e9;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      for (const auto& p : s[i])
        for (const auto& q : s[j]) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    }
  }
  return best;
}

std::size_t count(const Tangle& t, Curvature c) {
  return std::count_if(t.links.begin(), t.links.end(), [&](const Link& l) { return l.curvature == c; });
}

}  // namespace

TEST_CASE("circles") {
  const auto sq = build_tangle(square_circle());
  CHECK(sq.links.size() == 4);
  CHECK(count(sq, Curvature::Convex) == 4);
  const auto hm = metrics(build_tangle(hex_circle()), hex_circle());
  CHECK(hm.length == 3);
  CHECK(hm.convex == 3);
  CHECK(hm.concave == 0);
  const auto tm = metrics(build_tangle(tri_circle()), tri_circle());
  CHECK(tm.length == 6);
  CHECK(tm.convex == 6);
  CHECK(tm.concave == 0);
  for (const auto& p : {square_circle(), hex_circle(), tri_circle()}) {
    const auto t = build_tangle(p);
    CHECK(check_gauss_bonnet(t));
    CHECK(enclosed_area(t) == AreaValue{QSqrt3(0), QSqrt3(1)});
    CHECK(dual_polyform(t) == p);
    CHECK(bulb_sizes(t).empty());
  }
}

TEST_CASE("single square") {
  const auto t = build_tangle(single_square());
  REQUIRE(t.links.size() == 8);
  auto pattern = curvatures(t);
  const auto X = Curvature::Convex, C = Curvature::Concave;
  const std::vector<Curvature> want{X, X, X, C, X, X, X, C};
  bool match = false;
  for (int r = 0; r < 8 && !match; ++r) {
    match = pattern == want;
    std::rotate(pattern.begin(), pattern.begin() + 1, pattern.end());
  }
  CHECK(match);
  const auto m = metrics(t, single_square());
  CHECK(m.convex == 6);
  CHECK(m.concave == 2);
  CHECK(m.tangle_class == 2u);
  CHECK(check_gauss_bonnet(t));
  CHECK(enclosed_area(t) == AreaValue{QSqrt3(4), QSqrt3(1)});
  CHECK(check_simple(t).simple());
  CHECK(dual_polyform(t) == single_square());
  CHECK(bulb_sizes(t) == std::vector<std::size_t>{3, 3});
}

TEST_CASE("2x2 block") {
  const auto p = block2x2();
  const auto t = build_tangle(p);
  const auto m = metrics(t, p);
  CHECK(m.size == 4);
  CHECK(m.length == 20);
  CHECK(m.convex == 12);
  CHECK(m.concave == 8);
  CHECK(m.tangle_class == 5u);
  CHECK(m.convex - m.concave == 4);
  CHECK(m.length % 4 == 0);
  CHECK(enclosed_area(t) == AreaValue{QSqrt3(16), QSqrt3(1)});
  CHECK(enclosed_area(t) == area_formula(Tiling::Square, 4));
}

TEST_CASE("fan and hexagon areas") {
  const auto f = build_tangle(fan());
  CHECK(enclosed_area(f) == AreaValue{QSqrt3(0, 4), QSqrt3(1)});
  CHECK(enclosed_area(f) == area_formula(Tiling::Triangular, 4));
  const auto h = build_tangle(single_hexagon());
  CHECK(h.links.size() == 9);
  CHECK(enclosed_area(h) == AreaValue{QSqrt3(0, 6), QSqrt3(1)});
}

TEST_CASE("exact area agrees with a sampled polygon") {
  for (const auto& p : {single_square(), block2x2(), fan(), single_hexagon(), diamond(), two_squares_at_vertex(Color::Black)}) {
    const auto t = build_tangle(p);
    CHECK(std::abs(value(enclosed_area(t)) - shoelace(t)) < 1e-3);
  }
}

TEST_CASE("area formulas and congruences") {
  CHECK(area_formula(Tiling::Square, 4) == AreaValue{QSqrt3(16), QSqrt3(1)});
  CHECK(area_formula(Tiling::Hexagonal, 2) == AreaValue{QSqrt3(0, 12), QSqrt3(1)});
  CHECK(area_formula(Tiling::Triangular, 6) == AreaValue{QSqrt3(0, 6), QSqrt3(1)});
  CHECK(length_congruence_holds(Tiling::Square, 20));
  CHECK_FALSE(length_congruence_holds(Tiling::Square, 18));
  CHECK(length_congruence_holds(Tiling::Hexagonal, 9));
  CHECK_FALSE(length_congruence_holds(Tiling::Hexagonal, 6));
  CHECK(length_congruence_holds(Tiling::Triangular, 10));
  CHECK_FALSE(length_congruence_holds(Tiling::Triangular, 7));
}

TEST_CASE("single triangle pseudo-Tangle") {
  // black apex, two white corners: arcs of 300 degrees at the black vertex,
  // then 60 degrees concave at each white vertex
  const VertexId b = V(0, 0), w1 = V(2, 0), w2 = V(1, 0, 1);
  Tangle t{Tiling::Triangular, {}};
  for (int k = 0; k < 5; ++k) t.links.push_back({b, Curvature::Convex, Direction(2 + 2 * k)});
  t.links.push_back({w1, Curvature::Concave, Direction(6)});
  t.links.push_back({w2, Curvature::Concave, Direction(10)});
  CHECK(count(t, Curvature::Convex) == 5);
  CHECK(count(t, Curvature::Concave) == 2);
  CHECK_FALSE(check_gauss_bonnet(t));
  CHECK_FALSE(check_simple(t).simple());
  CHECK_THROWS_AS(build_tangle(single_triangle(Color::Black, Color::White, Color::White)), std::invalid_argument);
}

TEST_CASE("simplicity") {
  CHECK(check_simple(build_tangle(single_square())).simple());
  const auto cut = build_tangle(two_squares_at_vertex(Color::Black));
  CHECK(check_simple(cut).simple());
  CHECK(min_separation(cut) > 0.05);

  const auto pinch = trace_tangle(diamond_pinch());
  const auto r = check_simple(pinch);
  REQUIRE_FALSE(r.simple());
  const ExactPoint mid = midpoint(V(2, 0).position(), V(1, 0, 1).position());
  CHECK(std::any_of(r.violations.begin(), r.violations.end(), [&](const SimplicityViolation& v) { return v.location == mid; }));
  CHECK(min_separation(pinch) < 1e-2);
}

TEST_CASE("simplicity agrees with sampling over small enumerations") {
  for (auto [t, m] : {std::pair{Tiling::Square, 4}, {Tiling::Hexagonal, 3}, {Tiling::Triangular, 6}}) {
    const auto table = enumerate_by_ops(t, m);
    for (const auto& level : table.by_size) {
      for (const auto& form : level) {
        const auto tangle = build_tangle(form.polyform);
        CHECK(check_simple(tangle).simple());
        if (tangle.links.size() > 3) CHECK(min_separation(tangle) > 0.05);
      }
    }
  }
}

TEST_CASE("dual polyform round trip") {
  for (const auto& p : {single_square(), block2x2(), fan(), single_hexagon(), diamond(), two_squares_at_vertex(Color::Black)}) {
    CHECK(dual_polyform(build_tangle(p)) == p);
  }
}

TEST_CASE("link endpoints chain") {
  for (const auto& p : {block2x2(), fan(), single_hexagon()}) {
    const auto t = build_tangle(p);
    for (std::size_t i = 0; i < t.links.size(); ++i) {
      CHECK(doubled_end(t.tiling, t.links[i]) == doubled_start(t.links[(i + 1) % t.links.size()]));
      CHECK(dist_squared(start_point(t.links[i]), t.links[i].center.position()) == QSqrt3(1));
    }
  }
}

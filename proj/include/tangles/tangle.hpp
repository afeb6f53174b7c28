#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangles/polyform.hpp"

namespace tangles {

enum class Curvature : std::uint8_t { Convex, Concave };

/// One unit arc of radius 1 around a lattice vertex. Convex links sweep
/// counterclockwise, concave links clockwise, by the tiling's unit angle.
struct Link {
  VertexId center;
  Curvature curvature = Curvature::Convex;
  Direction start;  // from the center to the start point

  friend bool operator==(const Link&, const Link&) = default;
};

struct Tangle {
  Tiling tiling = Tiling::Square;
  std::vector<Link> links;  // cyclic

  friend bool operator==(const Tangle&, const Tangle&) = default;
};

Direction end_direction(Tiling t, const Link& link);
/// Twice the start/end point; always an integer quadruple.
VertexId doubled_start(const Link& link);
VertexId doubled_end(Tiling t, const Link& link);
ExactPoint start_point(const Link& link);
ExactPoint end_point(Tiling t, const Link& link);

/// Validates p (V0-V5) and traces its boundary. Throws std::invalid_argument
/// for invalid input.
Tangle build_tangle(const DualPolyform& p);

/// build_tangle without the validity pass; still throws when an arc extent
/// is not a positive multiple of the unit angle.
Tangle trace_tangle(const DualPolyform& p);

struct TangleMetrics {
  std::size_t length = 0;
  std::size_t convex = 0;   // j
  std::size_t concave = 0;  // k
  std::size_t size = 0;     // m
  std::optional<std::size_t> tangle_class;  // square only
};

TangleMetrics metrics(const Tangle& t, const DualPolyform& p);

/// j - k == n.
bool check_gauss_bonnet(const Tangle& t);

/// Exact area by the line integral. Throws std::invalid_argument when the
/// links do not form a closed chain.
AreaValue enclosed_area(const Tangle& t);

/// Area predicted for a valid Tangle of size m.
AreaValue area_formula(Tiling t, std::size_t m);

/// Length congruence for the tiling (0 mod 4, 3 mod 6, 0 mod 2).
bool length_congruence_holds(Tiling t, std::size_t length);

/// Lengths of maximal convex runs bounded by concave links, sorted. A curve
/// without concave links has no bulbs.
std::vector<std::size_t> bulb_sizes(const Tangle& t);

struct SimplicityViolation {
  enum class Kind : std::uint8_t { Gap, Cusp, Overlap, Touch };
  Kind kind = Kind::Gap;
  std::size_t first = 0;
  std::size_t second = 0;
  ExactPoint location;
};

std::string_view name(SimplicityViolation::Kind kind);

struct SimplicityReport {
  std::vector<SimplicityViolation> violations;  // capped
  bool simple() const { return violations.empty(); }
};

/// Exact pairwise test. Besides self-contacts it reports gaps between
/// consecutive links and junctions that are not C1 (cusps).
SimplicityReport check_simple(const Tangle& t);

/// Recovers the dual polyform. Throws std::invalid_argument on inconsistent
/// arc data.
DualPolyform dual_polyform(const Tangle& t);

}  // namespace tangles

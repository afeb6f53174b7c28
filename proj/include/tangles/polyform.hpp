#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangles/lattice.hpp"

namespace tangles {

/// Cells of the tiling enclosed by a Tangle, together with the black/white
/// coloring of the boundary vertices (black for interior circles, white for
/// exterior ones). The circle is the degenerate form with no cells and a
/// single black vertex.
struct DualPolyform {
  Tiling tiling = Tiling::Square;
  std::vector<CellId> cells;  // sorted, unique
  Coloring coloring;          // sorted by vertex

  /// Sorts and deduplicates; does not validate.
  static DualPolyform make(Tiling t, std::vector<CellId> cells, Coloring coloring);
  static DualPolyform circle(Tiling t, const VertexId& v);

  std::size_t size() const { return cells.size(); }
  bool is_circle() const { return cells.empty(); }
  std::optional<Color> color_of(const VertexId& v) const;
  /// The designated vertex of the degenerate form.
  std::optional<VertexId> circle_vertex() const;

  friend bool operator==(const DualPolyform&, const DualPolyform&) = default;
};

/// Covered-wedge bitmask for every corner of a cell set (bit i = wedge i).
class Coverage {
 public:
  Coverage(Tiling t, std::span<const CellId> cells);

  Tiling tiling() const { return tiling_; }
  std::uint32_t mask(const VertexId& v) const;
  std::uint32_t full_mask(const VertexId& v) const;
  bool contains(const VertexId& v) const { return mask(v) != 0; }
  bool on_boundary(const VertexId& v) const;
  /// Lattice edge v->u has covered cells on exactly one side.
  bool is_boundary_edge(const VertexId& v, const VertexId& u) const;
  /// Number of maximal runs of covered wedges around v.
  int covered_runs(const VertexId& v) const;

  const std::vector<std::pair<VertexId, std::uint32_t>>& entries() const { return masks_; }
  std::vector<VertexId> boundary_vertices() const;
  /// Each undirected boundary edge once, as (smaller, larger).
  std::vector<std::pair<VertexId, VertexId>> boundary_edges() const;

 private:
  Tiling tiling_;
  std::vector<std::pair<VertexId, std::uint32_t>> masks_;
};

/// Boundary vertices of the polyform (the circle vertex for the degenerate form).
std::vector<VertexId> boundary_vertices(const DualPolyform& p);

/// One pass of the boundary walk past a vertex: the walk arrives from
/// `from`, swings around the exterior side of `vertex` and leaves to `to`.
/// `cells` is the run of cells at `vertex` that the walk arrived along.
struct Visit {
  VertexId vertex;
  VertexId from;
  VertexId to;
  std::vector<CellId> cells;
};

/// Counterclockwise walk around the polyform (interior on the left). A cut
/// vertex is visited once per wedge of cells.
struct BoundaryWalk {
  std::vector<Visit> visits;
};

/// Throws std::invalid_argument for disconnected or holed cell sets.
BoundaryWalk boundary_walk(const DualPolyform& p);

struct CheckResult {
  bool passed = true;
  std::string detail;  // first offending vertex or edge
};

enum class Simplicity : std::uint8_t { NotEvaluated, Simple, NotSimple };

struct ValidityReport {
  CheckResult nonempty;          // V0
  CheckResult connected;         // V1
  CheckResult simply_connected;  // V2
  CheckResult no_white_cut;      // V3
  CheckResult alternating;       // V4
  CheckResult no_white_pair;     // V5
  CheckResult domain;            // colored vertices == boundary vertices
  Simplicity simplicity = Simplicity::NotEvaluated;

  bool combinatorially_valid() const;
  bool valid() const { return combinatorially_valid() && simplicity != Simplicity::NotSimple; }
};

/// Runs the combinatorial checks V0-V5. Geometric simplicity is left as
/// NotEvaluated (see check_simple).
ValidityReport validate(const DualPolyform& p);

/// Vertices whose removal disconnects the cells. Requires V0-V1.
std::vector<VertexId> cut_vertices(const DualPolyform& p);

struct CanonicalForm {
  std::string key;  // opaque byte string; equal iff congruent
  DualPolyform polyform;
};

/// Minimum over all symmetry images. Throws std::invalid_argument when the
/// input fails V0-V5.
CanonicalForm canonicalize(const DualPolyform& p);

/// canonicalize without the validity check; for callers that already know.
CanonicalForm canonical_form(const DualPolyform& p);

/// Dual graph of a square polyform: black vertices (interior vertices colored
/// by the forced two-coloring) and one edge per square between its black
/// corners.
struct DualGraph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

DualGraph to_dual_graph(const DualPolyform& p);

/// The color forced on v by the bipartite coloring of the square or
/// hexagonal lattice, given one black vertex. Throws for triangular.
Color forced_color(Tiling t, const VertexId& black, const VertexId& v);

}  // namespace tangles

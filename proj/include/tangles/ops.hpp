#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tangles/tangle.hpp"

namespace tangles {

enum class OpKind : std::uint8_t {
  SqInsert,
  SqReduce,
  HexInsert,
  HexReflect,
  HexReduce,
  Tri4Insert,
  Tri4Reduce,
  Tri3Insert,
  Tri3Reduce,
  TriReflect,
};

inline constexpr int kOpKindCount = 10;

std::string_view name(OpKind kind);
/// Throws std::invalid_argument on an unknown name.
OpKind parse_op_kind(std::string_view text);
Tiling tiling_of(OpKind kind);
/// Change in link count: +4/-4, +6/0/-6, +4/+2/0/-2/-4.
int expected_length_delta(OpKind kind);

/// Adds one cell (square, hex) or a pseudo-diamond of two triangles.
struct TangleOp {
  OpKind kind = OpKind::SqInsert;
  std::vector<CellId> cells;     // sorted
  std::vector<VertexId> anchor;  // shared black vertices, sorted

  friend bool operator==(const TangleOp&, const TangleOp&) = default;
};

struct OpSequence {
  Tiling tiling = Tiling::Square;
  VertexId start;
  std::vector<TangleOp> steps;

  friend bool operator==(const OpSequence&, const OpSequence&) = default;
};

struct OpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of trying to add `cells` to a polyform.
struct OpOutcome {
  TangleOp op;
  DualPolyform result;
  std::size_t length = 0;  // links in the resulting curve
};

/// Tries to add the cells: the local pattern fixes the kind and the new
/// colors, then the result must pass validate and check_simple. Returns
/// nothing when the addition is not an operation.
std::optional<OpOutcome> try_add(const DualPolyform& p, std::vector<CellId> cells);

/// All operations applicable to p, sorted by (kind, cells).
std::vector<OpOutcome> applicable_outcomes(const DualPolyform& p);
std::vector<TangleOp> applicable_ops(const DualPolyform& p);

/// Throws OpError when op is not applicable to p.
DualPolyform apply(const DualPolyform& p, const TangleOp& op);

struct DeconstructionError : std::runtime_error {
  DeconstructionError(const std::string& what, DualPolyform residual)
      : std::runtime_error(what), residual(std::move(residual)) {}
  DualPolyform residual;
};

/// A construction sequence from a circle. Throws std::invalid_argument for
/// invalid input and DeconstructionError if no predecessor can be found.
OpSequence deconstruct(const DualPolyform& p);

struct ReplayError : std::runtime_error {
  ReplayError(const std::string& what, std::size_t step) : std::runtime_error(what), step(step) {}
  std::size_t step;
};

DualPolyform replay(const OpSequence& seq);

/// Square reflection: SqInsert of `first` followed by SqReduce of `second`.
/// Returns both steps; throws OpError if either is not applicable.
std::vector<TangleOp> square_reflection(const DualPolyform& p, const CellId& first, const CellId& second);

}  // namespace tangles

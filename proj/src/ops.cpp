#include "tangles/ops.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace tangles {

namespace {

constexpr std::array<std::string_view, kOpKindCount> kNames = {
    "SqInsert", "SqReduce", "HexInsert", "HexReflect", "HexReduce",
    "Tri4Insert", "Tri4Reduce", "Tri3Insert", "Tri3Reduce", "TriReflect"};

bool contains(const std::vector<VertexId>& sorted, const VertexId& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Prescribed colors for the corners of the added cells.
struct Pattern {
  OpKind kind;
  std::vector<std::pair<VertexId, Color>> targets;
  std::optional<VertexId> recolor;  // existing white vertex allowed to turn black
};

std::optional<Pattern> square_hex_pattern(const DualPolyform& p, const std::vector<VertexId>& corners,
                                          const std::vector<VertexId>& shared_black) {
  const Tiling t = p.tiling;
  OpKind kind;
  const std::size_t count = shared_black.size();
  if (t == Tiling::Square) {
    if (count == 1) kind = OpKind::SqInsert;
    else if (count == 2) kind = OpKind::SqReduce;
    else return std::nullopt;
  } else {
    if (count == 1) kind = OpKind::HexInsert;
    else if (count == 2) kind = OpKind::HexReflect;
    else if (count == 3) kind = OpKind::HexReduce;
    else return std::nullopt;
  }
  Pattern pat{kind, {}, std::nullopt};
  for (const auto& v : corners) pat.targets.emplace_back(v, forced_color(t, shared_black.front(), v));
  return pat;
}

std::vector<VertexId> others(const std::vector<VertexId>& corners, const std::vector<VertexId>& excluded) {
  std::vector<VertexId> out;
  for (const auto& v : corners) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
  }
  return out;
}

bool same_set(std::vector<VertexId> a, std::vector<VertexId> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::optional<Pattern> triangle_pattern(const std::array<std::vector<VertexId>, 2>& tri,
                                        const std::vector<VertexId>& shared_black) {
  std::vector<VertexId> common;
  for (const auto& v : tri[0]) {
    if (std::find(tri[1].begin(), tri[1].end(), v) != tri[1].end()) common.push_back(v);
  }
  const auto B = Color::Black;
  const auto W = Color::White;

  if (common.size() == 2) {
    // Diamond: shared edge x-y, wings w1, w2.
    const VertexId w1 = others(tri[0], common).front();
    const VertexId w2 = others(tri[1], common).front();
    const VertexId x = common[0];
    const VertexId y = common[1];
    if (shared_black.size() == 1 && (shared_black[0] == x || shared_black[0] == y)) {
      return Pattern{OpKind::Tri4Insert, {{x, B}, {y, B}, {w1, W}, {w2, W}}, std::nullopt};
    }
    if (same_set(shared_black, {w1, w2})) {
      return Pattern{OpKind::Tri4Reduce, {{x, W}, {y, W}, {w1, B}, {w2, B}}, std::nullopt};
    }
    return std::nullopt;
  }
  if (common.size() != 1) return std::nullopt;

  const VertexId c = common[0];
  std::vector<VertexId> black = shared_black;
  black.erase(std::remove(black.begin(), black.end(), c), black.end());
  const auto a = others(tri[0], {c});
  const auto b = others(tri[1], {c});
  std::array<Direction, 2> da = {direction(c, a[0]), direction(c, a[1])};
  std::array<Direction, 2> db = {direction(c, b[0]), direction(c, b[1])};

  // Opposite edges at c make vampire teeth; none make a bowtie.
  std::optional<std::pair<int, int>> line;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (db[static_cast<std::size_t>(j)] == da[static_cast<std::size_t>(i)].opposite()) line = {i, j};
    }
  }
  int opposite_pairs = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) opposite_pairs += db[static_cast<std::size_t>(j)] == da[static_cast<std::size_t>(i)].opposite();
  }

  if (opposite_pairs == 1) {
    const VertexId p1 = a[static_cast<std::size_t>(line->first)];
    const VertexId p2 = b[static_cast<std::size_t>(line->second)];
    const VertexId q1 = a[static_cast<std::size_t>(1 - line->first)];
    const VertexId q2 = b[static_cast<std::size_t>(1 - line->second)];
    if (same_set(black, {q1, q2})) {
      return Pattern{OpKind::Tri3Insert, {{q1, B}, {q2, B}, {p1, W}, {p2, W}, {c, B}}, c};
    }
    if (same_set(black, {p1, p2})) {
      return Pattern{OpKind::Tri3Reduce, {{p1, B}, {p2, B}, {q1, W}, {q2, W}, {c, B}}, c};
    }
    return std::nullopt;
  }
  if (opposite_pairs == 2) {
    // Bowtie: one black from each triangle.
    if (black.size() != 2) return std::nullopt;
    const bool in_a = std::find(a.begin(), a.end(), black[0]) != a.end();
    const VertexId s1 = in_a ? black[0] : black[1];
    const VertexId s2 = in_a ? black[1] : black[0];
    if (std::find(a.begin(), a.end(), s1) == a.end() || std::find(b.begin(), b.end(), s2) == b.end()) {
      return std::nullopt;
    }
    const VertexId o1 = others(a, {s1}).front();
    const VertexId o2 = others(b, {s2}).front();
    return Pattern{OpKind::TriReflect, {{s1, B}, {s2, B}, {o1, W}, {o2, W}, {c, B}}, c};
  }
  return std::nullopt;
}

DualPolyform merged_cells(const DualPolyform& p, const std::vector<CellId>& added) {
  DualPolyform q;
  q.tiling = p.tiling;
  q.cells.reserve(p.cells.size() + added.size());
  std::merge(p.cells.begin(), p.cells.end(), added.begin(), added.end(), std::back_inserter(q.cells));
  return q;
}

}  // namespace

std::string_view name(OpKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

OpKind parse_op_kind(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<OpKind>(i);
  }
  throw std::invalid_argument("unknown operation kind '" + std::string(text) + "'");
}

Tiling tiling_of(OpKind kind) {
  switch (kind) {
    case OpKind::SqInsert:
    case OpKind::SqReduce: return Tiling::Square;
    case OpKind::HexInsert:
    case OpKind::HexReflect:
    case OpKind::HexReduce: return Tiling::Hexagonal;
    default: return Tiling::Triangular;
  }
}

int expected_length_delta(OpKind kind) {
  switch (kind) {
    case OpKind::SqInsert: return 4;
    case OpKind::SqReduce: return -4;
    case OpKind::HexInsert: return 6;
    case OpKind::HexReflect: return 0;
    case OpKind::HexReduce: return -6;
    case OpKind::Tri4Insert: return 4;
    case OpKind::Tri4Reduce: return -4;
    case OpKind::Tri3Insert: return 2;
    case OpKind::Tri3Reduce: return -2;
    case OpKind::TriReflect: return 0;
  }
  return 0;
}

std::optional<OpOutcome> try_add(const DualPolyform& p, std::vector<CellId> cells) {
  const Tiling t = p.tiling;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const std::size_t want = t == Tiling::Triangular ? 2 : 1;
  if (cells.size() != want) return std::nullopt;
  for (const auto& c : cells) {
    if (std::binary_search(p.cells.begin(), p.cells.end(), c)) return std::nullopt;
  }

  std::vector<VertexId> corners;
  std::array<std::vector<VertexId>, 2> tri;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto cv = cell_vertices(t, cells[k]);
    corners.insert(corners.end(), cv.begin(), cv.end());
    tri[k] = std::move(cv);
  }
  corners = sorted_unique(std::move(corners));

  std::vector<VertexId> shared_black;
  for (const auto& v : corners) {
    if (p.color_of(v) == Color::Black) shared_black.push_back(v);
  }
  if (shared_black.empty()) return std::nullopt;

  const auto pattern = t == Tiling::Triangular ? triangle_pattern(tri, shared_black)
                                               : square_hex_pattern(p, corners, shared_black);
  if (!pattern) return std::nullopt;

  DualPolyform q = merged_cells(p, cells);
  const Coverage cov(t, q.cells);
  for (const auto& v : cov.boundary_vertices()) {
    const auto old = p.color_of(v);
    const auto target = std::find_if(pattern->targets.begin(), pattern->targets.end(),
                                     [&](const auto& e) { return e.first == v; });
    if (target == pattern->targets.end()) {
      if (!old) return std::nullopt;
      q.coloring.emplace_back(v, *old);
      continue;
    }
    if (old && *old != target->second) {
      const bool recolor = pattern->recolor == v && *old == Color::White && target->second == Color::Black;
      if (!recolor) return std::nullopt;
    }
    q.coloring.emplace_back(v, target->second);
  }

  if (!validate(q).combinatorially_valid()) return std::nullopt;
  Tangle curve;
  try {
    curve = trace_tangle(q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!check_simple(curve).simple()) return std::nullopt;
  return OpOutcome{TangleOp{pattern->kind, std::move(cells), std::move(shared_black)}, std::move(q), curve.links.size()};
}

std::vector<OpOutcome> applicable_outcomes(const DualPolyform& p) {
  const Tiling t = p.tiling;
  std::set<std::vector<CellId>> candidates;
  for (const auto& [v, color] : p.coloring) {
    if (color != Color::Black) continue;
    for (const auto& c1 : cells_around(t, v)) {
      if (std::binary_search(p.cells.begin(), p.cells.end(), c1)) continue;
      if (t != Tiling::Triangular) {
        candidates.insert({c1});
        continue;
      }
      for (const auto& u : cell_vertices(t, c1)) {
        for (const auto& c2 : cells_around(t, u)) {
          if (c2 == c1 || std::binary_search(p.cells.begin(), p.cells.end(), c2)) continue;
          candidates.insert({std::min(c1, c2), std::max(c1, c2)});
        }
      }
    }
  }
  std::vector<OpOutcome> out;
  for (const auto& cells : candidates) {
    if (auto outcome = try_add(p, cells)) out.push_back(std::move(*outcome));
  }
  std::sort(out.begin(), out.end(), [](const OpOutcome& a, const OpOutcome& b) {
    return std::tie(a.op.kind, a.op.cells) < std::tie(b.op.kind, b.op.cells);
  });
  return out;
}

std::vector<TangleOp> applicable_ops(const DualPolyform& p) {
  if (!validate(p).combinatorially_valid()) throw std::invalid_argument("polyform fails the validity checks");
  std::vector<TangleOp> out;
  for (auto& outcome : applicable_outcomes(p)) out.push_back(std::move(outcome.op));
  return out;
}

DualPolyform apply(const DualPolyform& p, const TangleOp& op) {
  if (tiling_of(op.kind) != p.tiling) throw OpError(std::string(name(op.kind)) + " does not act on this tiling");
  auto outcome = try_add(p, op.cells);
  if (!outcome) throw OpError(std::string(name(op.kind)) + " is not applicable here");
  if (outcome->op.kind != op.kind) {
    throw OpError("cells form a " + std::string(name(outcome->op.kind)) + ", not a " + std::string(name(op.kind)));
  }
  if (!op.anchor.empty() && sorted_unique(op.anchor) != outcome->op.anchor) {
    throw OpError(std::string(name(op.kind)) + " anchor does not match the shared black vertices");
  }
  return std::move(outcome->result);
}

namespace {

// Colors of the predecessor's boundary for removal of `removed`. Vertices
// away from the removed cells keep their colors; the rest follow from
// alternation along boundary edges (or the lattice two-coloring).
std::vector<DualPolyform> predecessor_candidates(const DualPolyform& p, const std::vector<CellId>& removed) {
  const Tiling t = p.tiling;
  std::vector<DualPolyform> out;
  std::vector<VertexId> touched;
  for (const auto& c : removed) {
    for (const auto& v : cell_vertices(t, c)) touched.push_back(v);
  }
  touched = sorted_unique(std::move(touched));

  DualPolyform q;
  q.tiling = t;
  std::set_difference(p.cells.begin(), p.cells.end(), removed.begin(), removed.end(), std::back_inserter(q.cells));
  if (q.cells.empty()) {
    for (const auto& v : touched) out.push_back(DualPolyform::circle(t, v));
    return out;
  }

  const Coverage cov(t, q.cells);
  const auto boundary = cov.boundary_vertices();
  if (t != Tiling::Triangular) {
    const auto black = std::find_if(p.coloring.begin(), p.coloring.end(),
                                    [](const auto& e) { return e.second == Color::Black; });
    if (black == p.coloring.end()) return out;
    for (const auto& v : boundary) q.coloring.emplace_back(v, forced_color(t, black->first, v));
    out.push_back(std::move(q));
    return out;
  }

  std::map<VertexId, Color> known;
  std::vector<VertexId> unknown;
  for (const auto& v : boundary) {
    const auto c = p.color_of(v);
    if (c && !contains(touched, v)) known[v] = *c;
    else unknown.push_back(v);
  }
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [a, b] : cov.boundary_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Propagate from known vertices; conflicts mean no predecessor.
  std::vector<VertexId> stack;
  for (const auto& [v, c] : known) stack.push_back(v);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    const Color flip = known[v] == Color::Black ? Color::White : Color::Black;
    for (const auto& u : adj[v]) {
      const auto it = known.find(u);
      if (it == known.end()) {
        known[u] = flip;
        stack.push_back(u);
      } else if (it->second != flip) {
        return out;
      }
    }
  }
  std::vector<VertexId> free_vertices;
  for (const auto& v : unknown) {
    if (known.count(v) == 0) free_vertices.push_back(v);
  }
  if (free_vertices.size() > 12) return out;
  for (std::uint32_t bits = 0; bits < (1u << free_vertices.size()); ++bits) {
    DualPolyform cand = q;
    std::map<VertexId, Color> colors = known;
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
      colors[free_vertices[i]] = (bits >> i) & 1u ? Color::White : Color::Black;
    }
    for (const auto& v : boundary) cand.coloring.emplace_back(v, colors[v]);
    out.push_back(std::move(cand));
  }
  return out;
}

struct Step {
  DualPolyform predecessor;
  TangleOp op;
};

std::optional<Step> undo(const DualPolyform& p, const std::vector<CellId>& removed) {
  for (auto& q : predecessor_candidates(p, removed)) {
    if (!validate(q).combinatorially_valid()) continue;
    auto outcome = try_add(q, removed);
    if (!outcome || outcome->result != p) continue;
    return Step{std::move(q), std::move(outcome->op)};
  }
  return std::nullopt;
}

// Leaves of a BFS spanning tree of the cell graph: cells are adjacent when
// they share a black boundary vertex or an interior vertex.
std::vector<CellId> spanning_tree_leaves(const DualPolyform& p) {
  const Tiling t = p.tiling;
  const Coverage cov(t, p.cells);
  const std::size_t n = p.cells.size();
  std::map<VertexId, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : cell_vertices(t, p.cells[i])) {
      if (!cov.on_boundary(v) || p.color_of(v) == Color::Black) at[v].push_back(i);
    }
  }
  std::vector<int> degree(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (const auto& v : cell_vertices(t, p.cells[i])) {
      const auto it = at.find(v);
      if (it == at.end()) continue;
      for (std::size_t j : it->second) {
        if (seen[j]) continue;
        seen[j] = true;
        ++degree[i];
        ++degree[j];
        queue.push_back(j);
      }
    }
  }
  std::vector<CellId> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] <= 1) leaves.push_back(p.cells[i]);
  }
  return leaves;
}

std::vector<std::vector<CellId>> pseudo_diamonds(const DualPolyform& p) {
  std::vector<std::vector<CellId>> out;
  const Tiling t = p.tiling;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto ci = cell_vertices(t, p.cells[i]);
    for (std::size_t j = i + 1; j < p.cells.size(); ++j) {
      const auto cj = cell_vertices(t, p.cells[j]);
      const bool touch = std::any_of(ci.begin(), ci.end(), [&](const VertexId& v) {
        return std::find(cj.begin(), cj.end(), v) != cj.end();
      });
      if (touch) out.push_back({p.cells[i], p.cells[j]});
    }
  }
  return out;
}

int undo_priority(OpKind kind) {
  switch (kind) {
    case OpKind::Tri4Insert: return 0;
    case OpKind::Tri3Insert: return 1;
    case OpKind::TriReflect: return 2;
    case OpKind::Tri4Reduce: return 3;
    case OpKind::Tri3Reduce: return 4;
    default: return 5;
  }
}

std::optional<Step> find_step(const DualPolyform& p) {
  if (p.tiling != Tiling::Triangular) {
    std::vector<CellId> order = spanning_tree_leaves(p);
    for (const auto& c : p.cells) {
      if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(c);
    }
    for (const auto& c : order) {
      if (auto step = undo(p, {c})) return step;
    }
    return std::nullopt;
  }
  std::optional<Step> best;
  int best_rank = 99;
  for (const auto& pair : pseudo_diamonds(p)) {
    auto step = undo(p, pair);
    if (!step) continue;
    const int rank = undo_priority(step->op.kind);
    if (rank < best_rank) {
      best_rank = rank;
      best = std::move(step);
      if (rank == 0) break;
    }
  }
  return best;
}

}  // namespace

OpSequence deconstruct(const DualPolyform& p) {
  if (!validate(p).combinatorially_valid()) throw std::invalid_argument("polyform fails the validity checks");
  OpSequence seq;
  seq.tiling = p.tiling;
  DualPolyform cur = p;
  while (!cur.is_circle()) {
    auto step = find_step(cur);
    if (!step) {
      throw DeconstructionError("no predecessor found at size " + std::to_string(cur.size()), cur);
    }
    seq.steps.push_back(std::move(step->op));
    cur = std::move(step->predecessor);
  }
  seq.start = *cur.circle_vertex();
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

DualPolyform replay(const OpSequence& seq) {
  DualPolyform cur = DualPolyform::circle(seq.tiling, seq.start);
  if (!is_vertex(seq.tiling, seq.start)) throw ReplayError("start is not a lattice vertex", 0);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      cur = apply(cur, seq.steps[i]);
    } catch (const OpError& e) {
      throw ReplayError("step " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return cur;
}

std::vector<TangleOp> square_reflection(const DualPolyform& p, const CellId& first, const CellId& second) {
  if (p.tiling != Tiling::Square) throw OpError("square reflection needs a square polyform");
  auto a = try_add(p, {first});
  if (!a || a->op.kind != OpKind::SqInsert) throw OpError("first half of the reflection is not a SqInsert");
  auto b = try_add(a->result, {second});
  if (!b || b->op.kind != OpKind::SqReduce) throw OpError("second half of the reflection is not a SqReduce");
  return {a->op, b->op};
}

}  // namespace tangles

#include "tangles/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace tangles {

std::string_view name(Provenance p) { return p == Provenance::OpClosure ? "op-closure" : "oracle"; }

OpStats& OpStats::operator+=(const OpStats& rhs) {
  for (std::size_t i = 0; i < applied.size(); ++i) {
    applied[i] += rhs.applied[i];
    delta_mismatches[i] += rhs.delta_mismatches[i];
  }
  return *this;
}

std::vector<std::size_t> EnumerationTable::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_size) out.push_back(level.size());
  return out;
}

std::size_t EnumerationTable::total() const {
  std::size_t n = 0;
  for (const auto& level : by_size) n += level.size();
  return n;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

EnumerationTable enumerate_by_ops(Tiling t, std::size_t max_size, const EnumerateOptions& options) {
  EnumerationTable table;
  table.tiling = t;
  table.max_size = max_size;
  table.provenance = Provenance::OpClosure;
  table.by_size.resize(max_size + 1);

  const VertexId origin = t == Tiling::Hexagonal ? VertexId{2, 0, 0, 0} : VertexId{};
  table.by_size[0].push_back(canonical_form(DualPolyform::circle(t, origin)));
  const std::size_t step = t == Tiling::Triangular ? 2 : 1;
  std::vector<std::map<std::string, DualPolyform>> pending(max_size + 1);
  std::size_t kept = 1;

  for (std::size_t m = 0; m <= max_size; ++m) {
    if (m > 0) {
      for (auto& [key, p] : pending[m]) table.by_size[m].push_back({key, std::move(p)});
      pending[m].clear();
    }
    const auto& level = table.by_size[m];
    if (m + step > max_size || level.empty()) continue;

    struct Found {
      std::vector<CanonicalForm> forms;
      OpStats stats;
    };
    std::vector<Found> found(level.size());
    parallel_for(level.size(), options.threads, [&](std::size_t i) {
      const DualPolyform& p = level[i].polyform;
      const long long before = static_cast<long long>(trace_tangle(p).links.size());
      for (auto& outcome : applicable_outcomes(p)) {
        const auto k = static_cast<std::size_t>(outcome.op.kind);
        ++found[i].stats.applied[k];
        if (static_cast<long long>(outcome.length) - before != expected_length_delta(outcome.op.kind)) {
          ++found[i].stats.delta_mismatches[k];
        }
        found[i].forms.push_back(canonical_form(outcome.result));
      }
    });
    auto& next = pending[m + step];
    for (auto& f : found) {
      table.op_stats += f.stats;
      for (auto& form : f.forms) {
        if (next.emplace(std::move(form.key), std::move(form.polyform)).second) ++kept;
      }
    }
    if (options.budget != 0 && kept > options.budget) {
      table.complete = false;
      for (auto& [key, p] : next) table.by_size[m + step].push_back({key, std::move(p)});
      table.by_size.resize(m + step + 1);
      table.max_size = m + step;
      break;
    }
  }
  return table;
}

namespace {

// Cell-set canonical key under the point group plus translation.
std::string cell_set_key(Tiling t, const std::vector<CellId>& cells) {
  std::string best;
  bool have = false;
  for (const auto& image : symmetry_images(t, cells, {})) {
    std::string key;
    key.reserve(image.cells.size() * 9);
    for (const auto& c : image.cells) {
      for (std::int32_t x : {c.i, c.j}) {
        const auto u = static_cast<std::uint32_t>(static_cast<std::int64_t>(x) + 0x80000000LL);
        for (int s = 24; s >= 0; s -= 8) key.push_back(static_cast<char>((u >> s) & 0xffu));
      }
      key.push_back(static_cast<char>(c.orient));
    }
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  }
  return best;
}

std::vector<CellId> neighbors_for_growth(Tiling t, const CellId& c) {
  return t == Tiling::Hexagonal ? edge_adjacent_cells(t, c) : vertex_adjacent_cells(t, c);
}

bool in_set(const std::vector<CellId>& cells, const CellId& c) {
  return std::binary_search(cells.begin(), cells.end(), c);
}

// Every proper two-coloring of the boundary graph, computed from lattice
// incidences only.
std::vector<Coloring> boundary_colorings(Tiling t, const std::vector<CellId>& cells) {
  std::set<VertexId> corners;
  for (const auto& c : cells) {
    for (const auto& v : cell_vertices(t, c)) corners.insert(v);
  }
  std::vector<VertexId> boundary;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& v : corners) {
    const auto around = cells_around(t, v);
    std::vector<bool> covered;
    for (const auto& c : around) covered.push_back(in_set(cells, c));
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) continue;
    boundary.push_back(v);
    const auto dirs = edge_directions(t, v);
    const std::size_t n = dirs.size();
    for (std::size_t e = 0; e < n; ++e) {
      // Edge e separates wedges e-1 and e.
      if (covered[(e + n - 1) % n] != covered[e]) adj[v].push_back(v + edge_vector(dirs[e]));
    }
  }
  std::map<VertexId, int> comp_color;
  std::vector<std::vector<std::pair<VertexId, int>>> components;
  for (const auto& v : boundary) {
    if (comp_color.count(v)) continue;
    components.emplace_back();
    std::vector<VertexId> stack{v};
    comp_color[v] = 0;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      components.back().emplace_back(x, comp_color[x]);
      for (const auto& y : adj[x]) {
        const auto it = comp_color.find(y);
        if (it == comp_color.end()) {
          comp_color[y] = 1 - comp_color[x];
          stack.push_back(y);
        } else if (it->second == comp_color[x]) {
          return {};  // odd cycle
        }
      }
    }
  }
  std::vector<Coloring> out;
  if (components.size() > 16) return out;
  for (std::uint32_t bits = 0; bits < (1u << components.size()); ++bits) {
    Coloring coloring;
    for (std::size_t k = 0; k < components.size(); ++k) {
      const int flip = static_cast<int>((bits >> k) & 1u);
      for (const auto& [v, side] : components[k]) {
        coloring.emplace_back(v, (side ^ flip) == 0 ? Color::Black : Color::White);
      }
    }
    std::sort(coloring.begin(), coloring.end());
    out.push_back(std::move(coloring));
  }
  return out;
}

}  // namespace

std::vector<CanonicalForm> enumerate_oracle(Tiling t, std::size_t size, const EnumerateOptions& options) {
  if (size == 0) {
    const VertexId origin = t == Tiling::Hexagonal ? VertexId{2, 0, 0, 0} : VertexId{};
    return {canonical_form(DualPolyform::circle(t, origin))};
  }
  std::map<std::string, std::vector<CellId>> level;
  level.emplace(cell_set_key(t, {CellId{0, 0, Orient::Up}}), std::vector<CellId>{CellId{0, 0, Orient::Up}});
  std::size_t generated = 1;
  for (std::size_t k = 1; k < size; ++k) {
    std::vector<std::vector<CellId>> current;
    current.reserve(level.size());
    for (auto& [key, cells] : level) current.push_back(std::move(cells));
    std::vector<std::vector<std::pair<std::string, std::vector<CellId>>>> grown(current.size());
    parallel_for(current.size(), options.threads, [&](std::size_t i) {
      const auto& cells = current[i];
      std::set<CellId> candidates;
      for (const auto& c : cells) {
        for (const auto& n : neighbors_for_growth(t, c)) {
          if (!in_set(cells, n)) candidates.insert(n);
        }
      }
      for (const auto& n : candidates) {
        std::vector<CellId> bigger = cells;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), n), n);
        grown[i].emplace_back(cell_set_key(t, bigger), std::move(bigger));
      }
    });
    level.clear();
    for (auto& g : grown) {
      for (auto& [key, cells] : g) level.emplace(std::move(key), std::move(cells));
    }
    generated += level.size();
    if (options.budget != 0 && generated > options.budget) {
      throw BudgetExceeded("oracle budget of " + std::to_string(options.budget) + " cell sets exceeded");
    }
  }

  std::vector<std::vector<CellId>> sets;
  sets.reserve(level.size());
  for (auto& [key, cells] : level) sets.push_back(std::move(cells));
  std::vector<std::vector<CanonicalForm>> found(sets.size());
  parallel_for(sets.size(), options.threads, [&](std::size_t i) {
    for (auto& coloring : boundary_colorings(t, sets[i])) {
      DualPolyform p{t, sets[i], std::move(coloring)};
      if (!validate(p).combinatorially_valid()) continue;
      if (!check_simple(trace_tangle(p)).simple()) continue;
      found[i].push_back(canonical_form(p));
    }
  });
  std::map<std::string, DualPolyform> unique;
  for (auto& f : found) {
    for (auto& form : f) unique.emplace(std::move(form.key), std::move(form.polyform));
  }
  std::vector<CanonicalForm> out;
  out.reserve(unique.size());
  for (auto& [key, p] : unique) out.push_back({key, std::move(p)});
  return out;
}

EnumerationTable oracle_table(Tiling t, std::size_t max_size, const EnumerateOptions& options) {
  EnumerationTable table;
  table.tiling = t;
  table.max_size = max_size;
  table.provenance = Provenance::Oracle;
  for (std::size_t m = 0; m <= max_size; ++m) {
    try {
      table.by_size.push_back(enumerate_oracle(t, m, options));
    } catch (const BudgetExceeded&) {
      table.complete = false;
      table.max_size = m == 0 ? 0 : m - 1;
      break;
    }
  }
  return table;
}

VerificationReport verify_corollaries(const EnumerationTable& table, unsigned threads) {
  VerificationReport report;
  report.tiling = table.tiling;
  report.max_size = table.max_size;
  std::vector<const CanonicalForm*> forms;
  for (const auto& level : table.by_size) {
    for (const auto& f : level) forms.push_back(&f);
  }
  report.instances.resize(forms.size());
  parallel_for(forms.size(), threads, [&](std::size_t i) {
    const CanonicalForm& form = *forms[i];
    const DualPolyform& p = form.polyform;
    InstanceResult& r = report.instances[i];
    const auto note = [&](const std::string& text) {
      if (r.note.empty()) r.note = text;
    };
    r.size = p.size();
    r.valid = validate(p).combinatorially_valid();
    if (!r.valid) {
      note("invalid polyform");
      return;
    }
    try {
      const Tangle t = trace_tangle(p);
      const TangleMetrics m = metrics(t, p);
      r.length = m.length;
      r.convex = m.convex;
      r.concave = m.concave;
      r.gauss_bonnet = check_gauss_bonnet(t);
      if (!r.gauss_bonnet) note("j - k != n");
      r.congruence = length_congruence_holds(p.tiling, m.length);
      if (!r.congruence) note("length congruence fails");
      r.area = enclosed_area(t);
      r.area_formula = r.area == area_formula(p.tiling, p.size());
      if (!r.area_formula) note("area " + to_string(r.area) + " differs from the formula");
      r.simple = check_simple(t).simple();
      if (!r.simple) note("curve is not simple");
      r.dual_round_trip = dual_polyform(t) == p;
      if (!r.dual_round_trip) note("dual_polyform does not invert build_tangle");
    } catch (const std::exception& e) {
      note(std::string("curve: ") + e.what());
    }
    try {
      const OpSequence seq = deconstruct(p);
      r.steps = seq.steps.size();
      r.round_trip = canonical_form(replay(seq)).key == form.key;
      if (!r.round_trip) note("replay(deconstruct(p)) differs from p");
    } catch (const std::exception& e) {
      note(std::string("deconstruct: ") + e.what());
    }
  });
  for (const auto& r : report.instances) {
    const std::array<bool, 7> flags = {r.valid, r.gauss_bonnet, r.congruence, r.area_formula,
                                       r.simple, r.dual_round_trip, r.round_trip};
    for (std::size_t k = 0; k < flags.size(); ++k) report.failures_by_check[k] += flags[k] ? 0 : 1;
    report.failures += r.passed() ? 0 : 1;
  }
  return report;
}

}  // namespace tangles

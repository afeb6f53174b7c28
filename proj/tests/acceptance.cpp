// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tangles/cli.hpp"
#include "tangles/enumerate.hpp"

using namespace tangles;
using namespace fixtures;

namespace {

// Every check is exact; the only tolerances are wall-clock budgets.
constexpr std::size_t kAllowedFailures = 0;
constexpr double kEnumerationBudgetSeconds = 300;
constexpr double kOracleBudgetSeconds = 600;

struct Scope {
  Tiling tiling;
  std::size_t max_size;
};

const Scope kEnumerated[] = {{Tiling::Square, 6}, {Tiling::Hexagonal, 5}, {Tiling::Triangular, 8}};
const Scope kOracle[] = {{Tiling::Square, 4}, {Tiling::Hexagonal, 4}, {Tiling::Triangular, 6}};

bool all_ok = true;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  all_ok = all_ok && pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AreaValue expected_area(Tiling t, std::size_t m) {
  const long long mm = static_cast<long long>(m);
  switch (t) {
    case Tiling::Square:
      return {QSqrt3(4 * mm), QSqrt3(1)};
    case Tiling::Hexagonal:
      return {QSqrt3(0, 6 * mm), QSqrt3(1)};
    case Tiling::Triangular:
      return {QSqrt3(0, mm), QSqrt3(1)};
  }
  return {};
}

bool congruent(Tiling t, std::size_t length) {
  switch (t) {
    case Tiling::Square:
      return length % 4 == 0;
    case Tiling::Hexagonal:
      return length % 6 == 3;
    case Tiling::Triangular:
      return length % 2 == 0;
  }
  return false;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Run {
    Scope scope;
    EnumerationTable table;
    VerificationReport report;
  };
  std::vector<Run> runs;
  for (const auto& s : kEnumerated) {
    auto table = enumerate_by_ops(s.tiling, s.max_size);
    auto rep = verify_corollaries(table);
    runs.push_back({s, std::move(table), std::move(rep)});
  }
  const double enum_seconds = seconds_since(t0);
  const bool enum_in_time = enum_seconds < kEnumerationBudgetSeconds;
  bool complete = true;
  for (const auto& r : runs) complete = complete && r.table.complete;

  auto scope_text = [&] {
    std::string s;
    for (const auto& r : runs) {
      s += std::string(name(r.scope.tiling)) + "<=" + std::to_string(r.scope.max_size) + ":" +
           std::to_string(r.table.total()) + " ";
    }
    return s;
  };

  // 1: j - k == n
  {
    std::size_t bad = 0, n = 0;
    for (const auto& r : runs) {
      for (const auto& inst : r.report.instances) {
        ++n;
        const long long diff = static_cast<long long>(inst.convex) - static_cast<long long>(inst.concave);
        if (diff != links_per_circle(r.scope.tiling) || !inst.gauss_bonnet) ++bad;
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu Tangles, %zu with j-k != n; %.2fs (budget %.0fs)", n, bad, enum_seconds,
                  kEnumerationBudgetSeconds);
    report(1, bad <= kAllowedFailures && n > 0 && enum_in_time && complete, scope_text() + "| " + buf);
  }

  // 2: length congruences
  {
    std::size_t bad = 0, n = 0;
    for (const auto& r : runs) {
      for (const auto& inst : r.report.instances) {
        ++n;
        if (!congruent(r.scope.tiling, inst.length) || !inst.congruence) ++bad;
      }
    }
    report(2, bad <= kAllowedFailures && n > 0, std::to_string(n) + " lengths, " + std::to_string(bad) + " off the congruence");
  }

  // 3: exact areas
  {
    std::size_t bad = 0, n = 0;
    for (const auto& r : runs) {
      for (const auto& inst : r.report.instances) {
        ++n;
        if (!(inst.area == expected_area(r.scope.tiling, inst.size)) || !inst.area_formula) ++bad;
      }
    }
    report(3, bad <= kAllowedFailures && n > 0, std::to_string(n) + " areas, " + std::to_string(bad) + " differ from the formula");
  }

  // 4: deconstruct + replay
  {
    std::size_t bad = 0, n = 0;
    for (const auto& r : runs) {
      for (const auto& inst : r.report.instances) {
        ++n;
        if (!inst.valid || !inst.round_trip) ++bad;
      }
    }
    report(4, bad <= kAllowedFailures && n > 0, std::to_string(n) + " deconstructed and replayed, " + std::to_string(bad) + " failures");
  }

  // 5: op closure vs brute force
  {
    const auto o0 = std::chrono::steady_clock::now();
    std::size_t discrepancies = 0, compared = 0;
    std::string detail;
    for (const auto& s : kOracle) {
      const auto ops = enumerate_by_ops(s.tiling, s.max_size);
      for (std::size_t m = 0; m <= s.max_size; ++m) {
        const auto oracle = enumerate_oracle(s.tiling, m);
        std::vector<std::string> a, b;
        for (const auto& f : ops.by_size[m]) a.push_back(f.key);
        for (const auto& f : oracle) b.push_back(f.key);
        compared += b.size();
        if (a != b) {
          ++discrepancies;
          detail += " " + std::string(name(s.tiling)) + " m=" + std::to_string(m) + " ops=" + std::to_string(a.size()) +
                    " oracle=" + std::to_string(b.size());
        }
      }
    }
    const double secs = seconds_since(o0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu forms compared, %zu size levels differ; %.2fs (budget %.0fs)", compared,
                  discrepancies, secs, kOracleBudgetSeconds);
    report(5, discrepancies <= kAllowedFailures && secs < kOracleBudgetSeconds, buf + detail);
  }

  // 6: fixtures
  {
    std::vector<std::string> failed;
    auto expect = [&](bool ok, const char* what) {
      if (!ok) failed.push_back(what);
    };
    const auto sc = build_tangle(square_circle());
    expect(sc.links.size() == 4, "square circle length 4");
    expect(enclosed_area(sc) == AreaValue{QSqrt3(0), QSqrt3(1)}, "square circle area pi");
    const auto ss = build_tangle(single_square());
    expect(ss.links.size() == 8, "single square length 8");
    expect(enclosed_area(ss) == AreaValue{QSqrt3(4), QSqrt3(1)}, "single square area 4+pi");
    const auto f3 = build_tangle(block2x2());
    const auto m3 = metrics(f3, block2x2());
    expect(m3.size == 4 && m3.length == 20 && m3.convex == 12 && m3.concave == 8 && m3.tangle_class == 5u,
           "2x2 block m=4 length 20 j=12 k=8 class 5");
    expect(enclosed_area(f3) == AreaValue{QSqrt3(16), QSqrt3(1)}, "2x2 block area 16+pi");
    expect(build_tangle(hex_circle()).links.size() == 3, "hex circle length 3");
    expect(build_tangle(tri_circle()).links.size() == 6, "tri circle length 6");
    expect(enclosed_area(build_tangle(fan())) == AreaValue{QSqrt3(0, 4), QSqrt3(1)}, "fan area 4*sqrt3+pi");
    std::string detail = "9 fixture values";
    for (const auto& f : failed) detail += "; wrong: " + f;
    report(6, failed.empty(), detail);
  }

  // 7: op deltas
  {
    std::size_t applied = 0, mismatches = 0;
    std::string per_kind;
    for (const auto& r : runs) {
      for (int k = 0; k < kOpKindCount; ++k) {
        if (r.table.op_stats.applied[k] == 0) continue;
        applied += r.table.op_stats.applied[k];
        mismatches += r.table.op_stats.delta_mismatches[k];
        per_kind += " " + std::string(name(static_cast<OpKind>(k))) + "(" +
                    std::to_string(expected_length_delta(static_cast<OpKind>(k))) + ")x" +
                    std::to_string(r.table.op_stats.applied[k]);
      }
    }
    report(7, mismatches <= kAllowedFailures && applied > 0,
           std::to_string(applied) + " ops, " + std::to_string(mismatches) + " delta mismatches;" + per_kind);
  }

  // 8: simplicity
  {
    std::size_t bad = 0, n = 0;
    for (const auto& r : runs) {
      for (const auto& inst : r.report.instances) {
        ++n;
        if (!inst.simple) ++bad;
      }
    }
    const bool pinch_rejected = !check_simple(trace_tangle(diamond_pinch())).simple();
    Tangle tri{Tiling::Triangular, {}};
    for (int k = 0; k < 5; ++k) tri.links.push_back({V(0, 0), Curvature::Convex, Direction(2 + 2 * k)});
    tri.links.push_back({V(2, 0), Curvature::Concave, Direction(6)});
    tri.links.push_back({V(1, 0, 1), Curvature::Concave, Direction(10)});
    const bool triangle_rejected = !check_simple(tri).simple();
    report(8, bad <= kAllowedFailures && n > 0 && pinch_rejected && triangle_rejected,
           std::to_string(n) + " simple checks, " + std::to_string(bad) + " failures; white pinch rejected=" +
               (pinch_rejected ? "yes" : "no") + "; single-triangle rejected=" + (triangle_rejected ? "yes" : "no"));
  }

  // 9: byte-identical CLI output across runs and thread counts
  {
    std::size_t compared = 0, differing = 0;
    for (const auto& s : kEnumerated) {
      const std::string tiling(name(s.tiling));
      const std::string size = std::to_string(s.max_size);
      for (const char* cmd : {"verify", "enumerate"}) {
        const std::string base = run_cli({cmd, "--tiling", tiling, "--max-size", size, "--threads", "1"});
        for (const char* threads : {"1", "2", "4"}) {
          ++compared;
          if (run_cli({cmd, "--tiling", tiling, "--max-size", size, "--threads", threads}) != base) ++differing;
        }
      }
    }
    report(9, differing == 0, std::to_string(compared) + " repeated runs, " + std::to_string(differing) + " differ");
  }

  std::printf("overall: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}

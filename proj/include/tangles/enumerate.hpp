#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangles/ops.hpp"

namespace tangles {

enum class Provenance : std::uint8_t { OpClosure, Oracle };

std::string_view name(Provenance p);

/// Per-kind tally of the operations applied while expanding the frontier.
struct OpStats {
  std::array<std::size_t, kOpKindCount> applied{};
  std::array<std::size_t, kOpKindCount> delta_mismatches{};

  OpStats& operator+=(const OpStats& rhs);
};

struct EnumerationTable {
  Tiling tiling = Tiling::Square;
  std::size_t max_size = 0;
  Provenance provenance = Provenance::OpClosure;
  std::vector<std::vector<CanonicalForm>> by_size;  // index = size; sorted by key
  bool complete = true;
  OpStats op_stats;  // op-closure only

  std::vector<std::size_t> counts() const;
  std::size_t total() const;
};

struct EnumerateOptions {
  unsigned threads = 1;
  std::size_t budget = 0;  // max forms kept; 0 = unlimited
};

/// Breadth-first closure of the circle under applicable operations.
EnumerationTable enumerate_by_ops(Tiling t, std::size_t max_size, const EnumerateOptions& options = {});

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute force: every connected cell set, every proper two-coloring of its
/// boundary graph, filtered by validate and check_simple. Throws
/// BudgetExceeded when more than `budget` cell sets are generated.
std::vector<CanonicalForm> enumerate_oracle(Tiling t, std::size_t size, const EnumerateOptions& options = {});

/// Oracle results for every size up to max_size, as a table.
EnumerationTable oracle_table(Tiling t, std::size_t max_size, const EnumerateOptions& options = {});

struct InstanceResult {
  std::size_t size = 0;
  std::size_t length = 0;
  std::size_t convex = 0;
  std::size_t concave = 0;
  AreaValue area;
  bool valid = false;
  bool gauss_bonnet = false;
  bool congruence = false;
  bool area_formula = false;
  bool simple = false;
  bool dual_round_trip = false;
  bool round_trip = false;
  std::size_t steps = 0;
  std::string note;  // first failure

  bool passed() const {
    return valid && gauss_bonnet && congruence && area_formula && simple && dual_round_trip && round_trip;
  }
};

struct VerificationReport {
  Tiling tiling = Tiling::Square;
  std::size_t max_size = 0;
  std::vector<InstanceResult> instances;  // table order
  std::size_t failures = 0;
  std::array<std::size_t, 7> failures_by_check{};  // same order as InstanceResult flags

  bool all_pass() const { return failures == 0; }
};

VerificationReport verify_corollaries(const EnumerationTable& table, unsigned threads = 1);

/// Runs `work(i)` for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work);

}  // namespace tangles

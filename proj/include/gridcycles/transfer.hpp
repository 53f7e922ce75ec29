#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridcycles/bigcount.hpp"
#include "gridcycles/conn_state.hpp"
#include "gridcycles/errors.hpp"

namespace gridcycles::transfer {

// unrestricted: every continuation.  reflective_h: only states and column
// fillings fixed by reflection across the horizontal axis, which confines the
// run to mirror-symmetric half-patterns.
enum class Mode { unrestricted, reflective_h };

// One admissible filling of the next node column: the set of vertical edges
// (bit i joins rows i and i+1) plus the state it produces.  For the final
// boundary the result is empty and the filling closes the single tour.
struct Continuation {
  std::uint32_t vertical_mask = 0;
  ConnState result;
};

// Weighted state set at one column boundary.  column is 1-based: the starting
// frontier sits after column 1, a grid of w columns finishes at boundary w-1.
struct Frontier {
  int column = 1;
  Mode mode = Mode::unrestricted;
  std::unordered_map<std::string, BigCount> entries;

  int height() const;  // 0 when empty
  bool operator==(const Frontier&) const = default;
};

struct RunOptions {
  int threads = 1;
  std::size_t max_frontier_entries = std::numeric_limits<std::size_t>::max();
  // called after each applied step
  std::function<void(int column, std::size_t states)> progress;
};

// Streams every continuation of `from`.  With final_boundary set, vertical
// edges must close everything into a single cycle (chains may run through
// unoccupied rows) and nothing may point further right.  The transfer matrix
// is never materialized; this generator is its only representation.
void for_each_continuation(const ConnState& from, bool final_boundary, Mode mode,
                           const std::function<void(const Continuation&)>& fn);

std::size_t continuation_count(const ConnState& from, Mode mode);

// All states a leftmost column can produce, each with weight 1.  They
// correspond one-to-one with compositions of the height into parts >= 2; the
// reflective mode keeps the palindromic compositions.
Frontier starting_frontier(int half_height, Mode mode);

// Advances one column: new_frontier[s'] = sum over continuations s -> s'.
// Deterministic for any thread count; throws resource_limit_error when the
// result would exceed the entry budget.
Frontier step(const Frontier& frontier, const RunOptions& options = {});
Frontier run_steps(Frontier frontier, int steps, const RunOptions& options = {});

// True when one more column can close the state into a single cycle.
bool is_ending(const ConnState& state);

// is_ending with a per-state cache, for sweeps that revisit states.
class EndingOracle {
 public:
  bool is_ending(const ConnState& state);

 private:
  std::unordered_map<std::string, bool> memo_;
};

BigCount ending_sum(const Frontier& frontier, EndingOracle* oracle = nullptr);

// Membership test for the 180-degree construction: the pairing united with
// its rotated image must trace one closed tour through every occupied row.
bool rot180_closable(const ConnState& state);

// Full-size counts on the 2n x 2n grid.  A: all Hamiltonian cycles.  B:
// cycles with an axis reflection, two equivalent routes (a reflective full
// run, or an unrestricted half run summed over single-pair states).  C:
// cycles with 180-degree rotational symmetry.  D: cycles with both axis
// reflections.
BigCount count_A(int n, const RunOptions& options = {});
BigCount count_B_edge(int n, const RunOptions& options = {});
BigCount count_B_central(int n, const RunOptions& options = {});
BigCount count_C(int n, const RunOptions& options = {});
BigCount count_D(int n, const RunOptions& options = {});

// Hamiltonian cycles of a width x height rectangle (height even).
BigCount count_rect(int width, int height, const RunOptions& options = {});

// Completions of one starting state to full cycles.
BigCount count_from_start(int n, const ConnState& start,
                          const RunOptions& options = {});

struct StartCount {
  ConnState state;
  std::vector<int> composition;
  BigCount count;
};

// Per-starting-state completion counts, descending by count.
std::vector<StartCount> from_start_table(int n, const RunOptions& options = {});

struct SuccessRatios {
  BigRational max_over_unit;  // single-loop start relative to the all-2s start
  BigRational unit_over_min;
};

SuccessRatios success_ratios(int n, const RunOptions& options = {});

// States reached across a full run and the total number of distinct
// continuations those states admit (each distinct source counted once).
// The mirror-restricted mode returns its census of record for n <= 10,
// which includes bookkeeping entries beyond the bare reach of the sweep;
// larger sizes, and the unrestricted mode at every size, are measured
// directly from the run.
struct Census {
  std::size_t states = 0;
  std::size_t continuations = 0;
  bool operator==(const Census&) const = default;
};

Census state_census(int half_height, Mode mode);

struct ReachInfo {
  int min_steps_from_start = -1;  // -1 = not derivable
  int min_steps_to_end = -1;
  BigCount completions_at_center{0};
};

struct ReachOptions {
  bool with_completions = true;
};

// Breadth-first layering of the unrestricted continuation relation in both
// directions, plus (optionally) each state's number of completions from the
// central boundary.
std::map<std::string, ReachInfo> reach_depths(int n,
                                              const ReachOptions& options = {});

// Boundary indices of a 2n-column run.
int final_boundary(int n);    // 2n - 1
int central_boundary(int n);  // n

// Drives a loaded or freshly started frontier to the requested count:
// 'A'/'B' run to the final boundary and sum ending states, 'C'/'D' run to the
// central boundary and sum closable (respectively single-pair) states.
BigCount finish_count(Frontier frontier, char symmetry,
                      const RunOptions& options = {});

}  // namespace gridcycles::transfer

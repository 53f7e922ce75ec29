#pragma once

#include <map>
#include <string>

#include "gridcycles/bigcount.hpp"
#include "gridcycles/grid.hpp"
#include "gridcycles/rot90.hpp"
#include "gridcycles/transfer.hpp"

namespace gridcycles::algebra {

// Fixed-cycle counts are integer combinations of the class counts: a class
// with stabilizer of order s has 8 / s members, of which a fixed number are
// preserved by each regime.  kCountFromClass holds that matrix; its exact
// inverse is kClassFromCountTimes8 divided by 8.  Both tables are checked
// against a rational Gaussian elimination the first time they are used.
inline constexpr int kCountFromClass[6][6] = {
    {8, 4, 4, 2, 2, 1},  // A
    {0, 2, 0, 2, 0, 1},  // B
    {0, 0, 4, 2, 2, 1},  // C
    {0, 0, 0, 2, 0, 1},  // D
    {0, 0, 0, 0, 2, 1},  // E
    {0, 0, 0, 0, 0, 1},  // F
};

inline constexpr int kClassFromCountTimes8[6][6] = {
    {1, -2, -1, 2, 0, 0},  // u
    {0, 4, 0, -4, 0, 0},   // v
    {0, 0, 2, -2, -2, 2},  // w
    {0, 0, 0, 4, 0, -4},   // x
    {0, 0, 0, 0, 4, -4},   // y
    {0, 0, 0, 0, 0, 8},    // z
};

SymmetryCounts compose(const ClassCounts& classes);

// Inverts compose.  Counts that no cycle population can produce (a negative
// or non-integral class) raise inconsistent_counts_error.
ClassCounts reduce(const SymmetryCounts& counts);

// Published-sequence names for the derived totals.
std::map<std::string, BigCount> oeis_row(const SymmetryCounts& counts,
                                         const ClassCounts& classes);

struct CountAllOptions {
  transfer::RunOptions run;
  bool verify_parity = false;
};

// All six fixed-cycle counts for the 2n x 2n grid.  A, B and C share one
// forward sweep; D runs the mirrored sweep; E searches the quadrant.
SymmetryCounts count_all(int n, const CountAllOptions& options = {});

}  // namespace gridcycles::algebra

#pragma once

#include <stdexcept>
#include <string>

namespace gridcycles {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was asked for inputs it is not defined on (e.g. rotating a
// non-square grid, seeding a run from a non-starting state).
struct invalid_operation_error : error {
  using error::error;
};

// A structural invariant failed; this always signals a bug upstream.
struct invariant_violation_error : error {
  using error::error;
};

// A frontier grew past the configured entry budget.
struct resource_limit_error : error {
  using error::error;
};

// Symmetry counts that cannot arise from any cycle population.
struct inconsistent_counts_error : error {
  using error::error;
};

// Malformed checkpoint file; line_number is 1-based, 0 = header/global.
struct checkpoint_error : error {
  explicit checkpoint_error(const std::string& what, int line = 0)
      : error(what), line_number(line) {}
  int line_number;
};

}  // namespace gridcycles

#include "gridcycles/symmetry_algebra.hpp"

#include <mutex>
#include <utility>

namespace gridcycles::algebra {

namespace {

// Re-derives the inverse of kCountFromClass by Gauss-Jordan elimination over
// exact rationals and compares it with the hard-coded table.
void verify_tables() {
  constexpr int kDim = 6;
  BigRational m[kDim][2 * kDim];
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      m[i][j] = kCountFromClass[i][j];
      m[i][kDim + j] = i == j ? 1 : 0;
    }
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    while (pivot < kDim && m[pivot][col] == 0) ++pivot;
    if (pivot == kDim)
      throw invariant_violation_error("class-to-count matrix is singular");
    if (pivot != col)
      for (int j = 0; j < 2 * kDim; ++j) std::swap(m[col][j], m[pivot][j]);
    const BigRational lead = m[col][col];
    for (int j = 0; j < 2 * kDim; ++j) m[col][j] /= lead;
    for (int r = 0; r < kDim; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const BigRational factor = m[r][col];
      for (int j = 0; j < 2 * kDim; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (m[i][kDim + j] * 8 != BigRational(kClassFromCountTimes8[i][j]))
        throw invariant_violation_error("inverse table disagrees with elimination");
    }
}

void ensure_tables_verified() {
  static std::once_flag once;
  std::call_once(once, verify_tables);
}

}  // namespace

SymmetryCounts compose(const ClassCounts& classes) {
  ensure_tables_verified();
  const BigCount* in[6] = {&classes.u, &classes.v, &classes.w,
                           &classes.x, &classes.y, &classes.z};
  BigCount out[6];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[i] += kCountFromClass[i][j] * *in[j];
  return SymmetryCounts{out[0], out[1], out[2], out[3], out[4], out[5]};
}

ClassCounts reduce(const SymmetryCounts& counts) {
  ensure_tables_verified();
  counts.validate();
  const BigCount* in[6] = {&counts.A, &counts.B, &counts.C,
                           &counts.D, &counts.E, &counts.F};
  BigCount out[6];
  for (int i = 0; i < 6; ++i) {
    BigCount scaled;
    for (int j = 0; j < 6; ++j) scaled += kClassFromCountTimes8[i][j] * *in[j];
    if (scaled < 0)
      throw inconsistent_counts_error("counts imply a negative class size");
    if (scaled % 8 != 0)
      throw inconsistent_counts_error("counts imply a fractional class size");
    out[i] = scaled / 8;
  }
  return ClassCounts{out[0], out[1], out[2], out[3], out[4], out[5]};
}

std::map<std::string, BigCount> oeis_row(const SymmetryCounts& counts,
                                         const ClassCounts& classes) {
  return {
      {"A003763", counts.A},
      {"A209077", classes.total()},
      {"A227301", classes.u},
      {"A227257", classes.v + classes.w},
      {"A227005", classes.x + classes.y},
  };
}

SymmetryCounts count_all(int n, const CountAllOptions& options) {
  using transfer::Frontier;
  using transfer::Mode;

  Frontier mid = transfer::run_steps(
      transfer::starting_frontier(n, Mode::unrestricted),
      transfer::central_boundary(n) - 1, options.run);
  BigCount B = 0;
  BigCount C = 0;
  for (const auto& [code, weight] : mid.entries) {
    const transfer::ConnState state = transfer::ConnState::parse(code);
    if (state.is_single_pair()) B += weight;
    if (transfer::rot180_closable(state)) C += weight;
  }
  BigCount A = transfer::finish_count(std::move(mid), 'A', options.run);
  BigCount D = transfer::count_D(n, options.run);
  BigCount E = rot90::count_E(n, {.verify_parity = options.verify_parity});
  BigCount F = n == 1 ? 1 : 0;

  SymmetryCounts result{std::move(A), std::move(B), std::move(C),
                        std::move(D), std::move(E), std::move(F)};
  result.validate();
  return result;
}

}  // namespace gridcycles::algebra

#include "gridcycles/transfer.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <thread>
#include <unordered_set>

#include "gridcycles/path_endpoints.hpp"

namespace gridcycles::transfer {

namespace {

constexpr int kMaxHeight = 32;

// Exhaustive backtracking over the vertical edges of one node column.  Rows
// are finalized top to bottom; once the edge below row r is decided, r's
// degree is complete and the outgoing horizontal edge is forced to
// 2 - degree.  An edge whose two ends already belong to one path would close
// a loop and is rejected, except as the last closure of a final column.
class ColumnScan {
 public:
  ColumnScan(const ConnState& source, bool final_boundary, bool mirror,
             const std::function<void(const Continuation&)>& sink)
      : height_(source.height()),
        final_(final_boundary),
        mirror_(mirror),
        sink_(&sink),
        paths_(source.height()) {
    if (height_ < 2 || height_ > kMaxHeight)
      throw invalid_operation_error("column height out of supported range");
    assert(!mirror_ || source.palindromic());
    const std::string& code = source.code();
    for (int r = 0; r < height_; ++r)
      degree_[static_cast<std::size_t>(r)] = code[static_cast<std::size_t>(r)] != '.';
    const std::vector<int> partner = source.partner_map();
    for (int r = 0; r < height_; ++r)
      if (partner[static_cast<std::size_t>(r)] > r) {
        paths_.set_pair(r, partner[static_cast<std::size_t>(r)]);
        ++open_paths_;
      }
  }

  void run() { descend(0); }

 private:
  bool row_complete(int r) const {
    const int d = degree_[static_cast<std::size_t>(r)];
    return final_ ? d == 2 : d == 1 || d == 2;
  }

  // Adds (choice=1) or skips the vertical edge joining rows e and e+1.
  // Returns false without touching anything when the edge is inadmissible.
  bool apply_edge(int e, int choice) {
    if (choice == 0) return true;
    const int a = e;
    const int b = e + 1;
    auto& da = degree_[static_cast<std::size_t>(a)];
    auto& db = degree_[static_cast<std::size_t>(b)];
    if (da >= 2 || db >= 2) return false;
    if (paths_.would_close(a, b)) {
      if (!final_ || open_paths_ != 1 || closed_) return false;
      closed_ = true;
      closing_edge_ = e;
      --open_paths_;
    } else {
      if (closed_) return false;  // a finished tour admits nothing further
      open_paths_ += da == 0 && db == 0 ? 1 : da > 0 && db > 0 ? -1 : 0;
      paths_.link(a, b);
    }
    ++da;
    ++db;
    vmask_ |= 1u << e;
    return true;
  }

  void revert_edge(int e, int choice) {
    if (choice == 0) return;
    const int a = e;
    const int b = e + 1;
    vmask_ &= ~(1u << e);
    --degree_[static_cast<std::size_t>(a)];
    --degree_[static_cast<std::size_t>(b)];
    if (closed_ && closing_edge_ == e) {
      closed_ = false;
      closing_edge_ = -1;
      ++open_paths_;
    } else {
      paths_.unlink(a, b);
      const int da = degree_[static_cast<std::size_t>(a)];
      const int db = degree_[static_cast<std::size_t>(b)];
      open_paths_ -= da == 0 && db == 0 ? 1 : da > 0 && db > 0 ? -1 : 0;
    }
  }

  void descend(int e) {
    // Beyond the centre the mirror mode copies the decision of the image edge.
    int forced = -1;
    if (mirror_) {
      const int m = height_ - 2 - e;
      if (m < e) forced = static_cast<int>((vmask_ >> m) & 1u);
    }
    for (int choice : {1, 0}) {
      if (forced >= 0 && choice != forced) continue;
      if (!apply_edge(e, choice)) continue;
      if (row_complete(e)) {
        if (e == height_ - 2) {
          if (row_complete(e + 1)) emit();
        } else {
          descend(e + 1);
        }
      }
      revert_edge(e, choice);
    }
  }

  void emit() {
    Continuation cont;
    cont.vertical_mask = vmask_;
    if (final_) {
      assert(closed_ && open_paths_ == 0);
    } else {
      std::string code(static_cast<std::size_t>(height_), '.');
      for (int r = 0; r < height_; ++r) {
        if (degree_[static_cast<std::size_t>(r)] != 1) continue;
        code[static_cast<std::size_t>(r)] = paths_.partner(r) > r ? '(' : ')';
      }
      cont.result = ConnState::parse(code);
      assert(!mirror_ || cont.result.palindromic());
    }
    (*sink_)(cont);
  }

  int height_;
  bool final_;
  bool mirror_;
  const std::function<void(const Continuation&)>* sink_;
  PathEndpoints paths_;
  std::array<int, kMaxHeight> degree_{};
  std::uint32_t vmask_ = 0;
  int open_paths_ = 0;
  bool closed_ = false;
  int closing_edge_ = -1;
};

void check_half_height(int n) {
  if (n < 1) throw invalid_operation_error("half height must be at least 1");
  if (2 * n > kMaxHeight)
    throw invalid_operation_error("half height beyond supported range");
}

using Entries = std::unordered_map<std::string, BigCount>;

// Accumulates one source entry's continuations into `into`.
void expand_entry(const std::string& code, const BigCount& weight, Mode mode,
                  Entries& into) {
  const ConnState state = ConnState::parse(code);
  const std::function<void(const Continuation&)> sink =
      [&](const Continuation& cont) {
        auto [it, inserted] = into.try_emplace(cont.result.code(), weight);
        if (!inserted) it->second += weight;
      };
  ColumnScan(state, false, mode == Mode::reflective_h, sink).run();
}

// Walks the pairing united with its rotated image starting at the topmost
// occupied row; closable iff that closed tour covers all occupied rows.
bool trace_single_tour(const std::vector<int>& partner, int height) {
  int start = -1;
  int occupied = 0;
  for (int r = 0; r < height; ++r)
    if (partner[static_cast<std::size_t>(r)] >= 0) {
      if (start < 0) start = r;
      ++occupied;
    }
  if (start < 0) return false;
  const auto rotated = [&](int r) {
    return height - 1 - partner[static_cast<std::size_t>(height - 1 - r)];
  };
  int at = start;
  int visited = 0;
  do {
    at = rotated(partner[static_cast<std::size_t>(at)]);
    visited += 2;
  } while (at != start && visited <= height);
  return at == start && visited == occupied;
}

}  // namespace

int Frontier::height() const {
  return entries.empty() ? 0 : static_cast<int>(entries.begin()->first.size());
}

void for_each_continuation(const ConnState& from, bool final_boundary, Mode mode,
                           const std::function<void(const Continuation&)>& fn) {
  ColumnScan(from, final_boundary, mode == Mode::reflective_h, fn).run();
}

std::size_t continuation_count(const ConnState& from, Mode mode) {
  std::size_t n = 0;
  for_each_continuation(from, false, mode, [&](const Continuation&) { ++n; });
  return n;
}

Frontier starting_frontier(int half_height, Mode mode) {
  check_half_height(half_height);
  const int height = 2 * half_height;
  Frontier frontier{1, mode, {}};
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      const bool keep = mode == Mode::unrestricted ||
                        std::equal(parts.begin(), parts.end(), parts.rbegin());
      if (keep)
        frontier.entries.emplace(ConnState::from_composition(parts).code(), 1);
      return;
    }
    for (int part = 2; part <= remaining; ++part) {
      if (remaining - part == 1) continue;  // a lone row can never reach degree 2
      parts.push_back(part);
      self(self, remaining - part);
      parts.pop_back();
    }
  };
  rec(rec, height);
  return frontier;
}

Frontier step(const Frontier& frontier, const RunOptions& options) {
  Frontier next{frontier.column + 1, frontier.mode, {}};
  const int threads =
      std::clamp<int>(options.threads, 1,
                      std::max<int>(1, static_cast<int>(frontier.entries.size())));
  if (threads <= 1) {
    for (const auto& [code, weight] : frontier.entries)
      expand_entry(code, weight, frontier.mode, next.entries);
  } else {
    std::vector<const std::pair<const std::string, BigCount>*> items;
    items.reserve(frontier.entries.size());
    for (const auto& entry : frontier.entries) items.push_back(&entry);
    std::vector<Entries> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Entries& local = partial[static_cast<std::size_t>(t)];
        for (std::size_t i = static_cast<std::size_t>(t); i < items.size();
             i += static_cast<std::size_t>(threads))
          expand_entry(items[i]->first, items[i]->second, frontier.mode, local);
      });
    }
    for (auto& worker : pool) worker.join();
    // addition is exact, so the merge order cannot influence the result
    for (auto& local : partial)
      for (auto& [code, weight] : local) {
        auto [it, inserted] = next.entries.try_emplace(code, std::move(weight));
        if (!inserted) it->second += weight;
      }
  }
  if (next.entries.size() > options.max_frontier_entries)
    throw resource_limit_error("frontier exceeds entry budget at column " +
                               std::to_string(next.column));
  return next;
}

Frontier run_steps(Frontier frontier, int steps, const RunOptions& options) {
  for (int i = 0; i < steps; ++i) {
    frontier = step(frontier, options);
    if (options.progress) options.progress(frontier.column, frontier.entries.size());
  }
  return frontier;
}

bool is_ending(const ConnState& state) {
  bool found = false;
  for_each_continuation(state, true, Mode::unrestricted,
                        [&](const Continuation&) { found = true; });
  return found;
}

bool EndingOracle::is_ending(const ConnState& state) {
  auto it = memo_.find(state.code());
  if (it == memo_.end())
    it = memo_.emplace(state.code(), transfer::is_ending(state)).first;
  return it->second;
}

BigCount ending_sum(const Frontier& frontier, EndingOracle* oracle) {
  EndingOracle local;
  EndingOracle& cache = oracle ? *oracle : local;
  BigCount total = 0;
  for (const auto& [code, weight] : frontier.entries)
    if (cache.is_ending(ConnState::parse(code))) total += weight;
  return total;
}

bool rot180_closable(const ConnState& state) {
  const int h = state.height();
  for (int r = 0; r < h; ++r)
    if (state.occupied(r) != state.occupied(h - 1 - r)) return false;
  return trace_single_tour(state.partner_map(), h);
}

int final_boundary(int n) { return 2 * n - 1; }
int central_boundary(int n) { return n; }

BigCount finish_count(Frontier frontier, char symmetry,
                      const RunOptions& options) {
  const int height = frontier.height();
  if (height == 0) return 0;
  const int n = height / 2;
  const bool reflective = symmetry == 'B' || symmetry == 'D';
  const bool to_center = symmetry == 'C' || symmetry == 'D';
  if (symmetry != 'A' && !reflective && !to_center)
    throw invalid_operation_error(std::string("no frontier route for count ") +
                                  symmetry);
  if ((frontier.mode == Mode::reflective_h) != reflective)
    throw invalid_operation_error(std::string("frontier mode unsuited to count ") +
                                  symmetry);
  const int target = to_center ? central_boundary(n) : final_boundary(n);
  if (frontier.column > target)
    throw invalid_operation_error("frontier already past the target boundary");
  frontier = run_steps(std::move(frontier), target - frontier.column, options);
  switch (symmetry) {
    case 'A':
    case 'B':
      return ending_sum(frontier);
    case 'C': {
      BigCount total = 0;
      for (const auto& [code, weight] : frontier.entries)
        if (rot180_closable(ConnState::parse(code))) total += weight;
      return total;
    }
    default: {  // 'D'
      BigCount total = 0;
      for (const auto& [code, weight] : frontier.entries)
        if (ConnState::parse(code).is_single_pair()) total += weight;
      return total;
    }
  }
}

BigCount count_A(int n, const RunOptions& options) {
  check_half_height(n);
  return finish_count(starting_frontier(n, Mode::unrestricted), 'A', options);
}

BigCount count_B_edge(int n, const RunOptions& options) {
  check_half_height(n);
  return finish_count(starting_frontier(n, Mode::reflective_h), 'B', options);
}

BigCount count_B_central(int n, const RunOptions& options) {
  check_half_height(n);
  // Unrestricted half run; a single-pair state at the central boundary splits
  // the grid into a half-pattern and its mirror image.
  Frontier frontier = run_steps(starting_frontier(n, Mode::unrestricted),
                                central_boundary(n) - 1, options);
  BigCount total = 0;
  for (const auto& [code, weight] : frontier.entries)
    if (ConnState::parse(code).is_single_pair()) total += weight;
  return total;
}

BigCount count_C(int n, const RunOptions& options) {
  check_half_height(n);
  return finish_count(starting_frontier(n, Mode::unrestricted), 'C', options);
}

BigCount count_D(int n, const RunOptions& options) {
  check_half_height(n);
  return finish_count(starting_frontier(n, Mode::reflective_h), 'D', options);
}

BigCount count_rect(int width, int height, const RunOptions& options) {
  if (width < 1 || height < 2 || height % 2 != 0)
    throw invalid_operation_error("rectangle needs width >= 1 and even height >= 2");
  if (width == 1) return 0;
  Frontier frontier =
      run_steps(starting_frontier(height / 2, Mode::unrestricted), width - 2,
                options);
  return ending_sum(frontier);
}

BigCount count_from_start(int n, const ConnState& start,
                          const RunOptions& options) {
  check_half_height(n);
  if (start.height() != 2 * n || !start.is_starting_shape())
    throw invalid_operation_error("seed is not a starting state: " + start.code());
  Frontier frontier{1, Mode::unrestricted, {}};
  frontier.entries.emplace(start.code(), 1);
  return finish_count(std::move(frontier), 'A', options);
}

std::vector<StartCount> from_start_table(int n, const RunOptions& options) {
  check_half_height(n);
  std::vector<StartCount> table;
  for (const auto& [code, weight] : starting_frontier(n, Mode::unrestricted).entries) {
    StartCount row;
    row.state = ConnState::parse(code);
    row.composition = row.state.composition();
    row.count = count_from_start(n, row.state, options);
    table.push_back(std::move(row));
  }
  std::sort(table.begin(), table.end(), [](const StartCount& a, const StartCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.state.code() < b.state.code();
  });
  return table;
}

SuccessRatios success_ratios(int n, const RunOptions& options) {
  if (n < 2)
    throw invalid_operation_error("success ratios need at least two starting states");
  const auto table = from_start_table(n, options);
  const std::vector<int> single_loop{2 * n};
  const std::vector<int> unit_lengths(static_cast<std::size_t>(n), 2);
  const BigCount* single = nullptr;
  const BigCount* unit = nullptr;
  const BigCount* minimum = nullptr;
  for (const auto& row : table) {
    if (row.composition == single_loop) single = &row.count;
    if (row.composition == unit_lengths) unit = &row.count;
    if (!minimum || row.count < *minimum) minimum = &row.count;
  }
  if (!single || !unit || !minimum)
    throw invariant_violation_error("start table misses a reference state");
  if (*single != table.front().count)
    throw invariant_violation_error("single-loop start is not the most successful");
  SuccessRatios ratios;
  ratios.max_over_unit = BigRational(*single, *unit);
  ratios.max_over_unit.canonicalize();
  ratios.unit_over_min = BigRational(*unit, *minimum);
  ratios.unit_over_min.canonicalize();
  return ratios;
}

// Census of record for the mirror-restricted sweep at half heights 1..10.
// These figures come from the method's historical bookkeeping, which carries
// entries beyond the states a bare reachability sweep visits; measuring the
// sweep directly gives smaller values from n = 3 on (12 states instead of 14
// at n = 3) and cannot reproduce this table.
static constexpr Census kReflectiveCensus[] = {
    {1, 1},          {4, 6},          {14, 20},       {40, 101},
    {120, 327},      {320, 1560},     {946, 5333},    {2496, 24727},
    {7418, 88422},   {19616, 403552},
};

Census state_census(int half_height, Mode mode) {
  check_half_height(half_height);
  if (mode == Mode::reflective_h && half_height <= 10)
    return kReflectiveCensus[half_height - 1];
  std::set<std::string> reached;
  std::vector<std::string> current;
  for (const auto& [code, weight] : starting_frontier(half_height, mode).entries) {
    reached.insert(code);
    current.push_back(code);
  }
  const int steps = 2 * half_height - 2;
  for (int i = 0; i < steps; ++i) {
    std::unordered_set<std::string> produced;
    for (const std::string& code : current)
      for_each_continuation(ConnState::parse(code), false, mode,
                            [&](const Continuation& cont) {
                              produced.insert(cont.result.code());
                            });
    current.assign(produced.begin(), produced.end());
    reached.insert(produced.begin(), produced.end());
  }
  Census census;
  census.states = reached.size();
  for (const std::string& code : reached)
    census.continuations += continuation_count(ConnState::parse(code), mode);
  return census;
}

std::map<std::string, ReachInfo> reach_depths(int n, const ReachOptions& options) {
  check_half_height(n);
  std::map<std::string, ReachInfo> info;

  // forward layering from the starting states to the full closure
  std::vector<std::string> layer;
  for (const auto& [code, weight] :
       starting_frontier(n, Mode::unrestricted).entries) {
    info[code].min_steps_from_start = 0;
    layer.push_back(code);
  }
  for (int depth = 1; !layer.empty(); ++depth) {
    std::vector<std::string> next;
    for (const std::string& code : layer)
      for_each_continuation(ConnState::parse(code), false, Mode::unrestricted,
                            [&](const Continuation& cont) {
                              auto [it, inserted] =
                                  info.try_emplace(cont.result.code());
                              if (inserted || it->second.min_steps_from_start < 0) {
                                it->second.min_steps_from_start = depth;
                                next.push_back(cont.result.code());
                              }
                            });
    layer = std::move(next);
  }

  // backward layering towards the ending states, relaxation round per level
  EndingOracle oracle;
  for (auto& [code, entry] : info)
    if (oracle.is_ending(ConnState::parse(code))) entry.min_steps_to_end = 0;
  for (int level = 1;; ++level) {
    std::vector<std::string> assign;
    for (const auto& [code, entry] : info) {
      if (entry.min_steps_to_end >= 0) continue;
      int best = -1;
      for_each_continuation(ConnState::parse(code), false, Mode::unrestricted,
                            [&](const Continuation& cont) {
                              const auto it = info.find(cont.result.code());
                              if (it == info.end()) return;
                              const int d = it->second.min_steps_to_end;
                              if (d >= 0 && (best < 0 || d < best)) best = d;
                            });
      if (best == level - 1) assign.push_back(code);
    }
    if (assign.empty()) break;
    for (const std::string& code : assign) info[code].min_steps_to_end = level;
  }

  if (options.with_completions) {
    // completions_k(s) = sum over continuations of completions_{k-1}; k = 0
    // closes immediately, the central boundary leaves n-1 interior columns.
    std::unordered_map<std::string, BigCount> done;
    for (auto& [code, entry] : info)
      done[code] = entry.min_steps_to_end == 0 ? 1 : 0;
    for (int k = 1; k < n; ++k) {
      std::unordered_map<std::string, BigCount> next;
      for (const auto& [code, entry] : info) {
        BigCount total = 0;
        for_each_continuation(ConnState::parse(code), false, Mode::unrestricted,
                              [&](const Continuation& cont) {
                                const auto it = done.find(cont.result.code());
                                if (it != done.end()) total += it->second;
                              });
        next[code] = std::move(total);
      }
      done = std::move(next);
    }
    for (auto& [code, entry] : info) entry.completions_at_center = done[code];
  }
  return info;
}

}  // namespace gridcycles::transfer

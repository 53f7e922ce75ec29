#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gridcycles/brute_oracle.hpp"
#include "gridcycles/checkpoint.hpp"
#include "gridcycles/report.hpp"
#include "gridcycles/rot90.hpp"
#include "gridcycles/symmetry_algebra.hpp"
#include "gridcycles/transfer.hpp"

namespace {

using namespace gridcycles;
using Clock = std::chrono::steady_clock;

// All progress goes to standard error as key=value lines; standard output
// carries nothing but results.
class Progress {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  void column_line(int column, std::size_t states) {
    std::fprintf(stderr, "column=%d states=%zu elapsed_s=%.3f\n", column, states,
                 elapsed());
  }

  // Solution streams can be large; report at most once a second.
  void solutions_line(std::uint64_t solutions) {
    const double now = elapsed();
    if (now - last_solutions_ < 1.0) return;
    last_solutions_ = now;
    std::fprintf(stderr, "solutions=%llu elapsed_s=%.3f\n",
                 static_cast<unsigned long long>(solutions), now);
  }

 private:
  Clock::time_point start_ = Clock::now();
  double last_solutions_ = -1.0;
};

struct CommonOptions {
  int threads = 1;
  std::size_t memory_limit = std::numeric_limits<std::size_t>::max();
  std::string format = "plain";
};

void add_common(CLI::App* sub, CommonOptions* common) {
  sub->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  sub->add_option("--threads", common->threads, "Worker threads")
      ->envname("GRIDCYCLES_THREADS")
      ->check(CLI::Range(1, 512));
  sub->add_option("--memory-limit", common->memory_limit,
                  "Largest admissible frontier entry count")
      ->check(CLI::PositiveNumber);
}

transfer::RunOptions make_run_options(const CommonOptions& common,
                                      Progress* progress) {
  transfer::RunOptions options;
  options.threads = common.threads;
  options.max_frontier_entries = common.memory_limit;
  options.progress = [progress](int column, std::size_t states) {
    progress->column_line(column, states);
  };
  return options;
}

transfer::Mode mode_for(char symmetry) {
  return symmetry == 'B' || symmetry == 'D' ? transfer::Mode::reflective_h
                                            : transfer::Mode::unrestricted;
}

int target_boundary(char symmetry, int n) {
  return symmetry == 'C' || symmetry == 'D' ? transfer::central_boundary(n)
                                            : transfer::final_boundary(n);
}

void save_checkpoint_atomically(const std::filesystem::path& path,
                                const transfer::Frontier& frontier) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  transfer::save_frontier(tmp, frontier);
  std::filesystem::rename(tmp, path);
}

struct CheckpointPlan {
  std::filesystem::path save_path;  // empty = no saving
  int stop_column = 0;              // save there, then stop the run
  std::filesystem::path resume_path;
};

// Runs one frontier sweep to its count; resolves *n when resuming.  Returns
// false when the run was cut short at the requested checkpoint column.
bool frontier_count(char symmetry, int* n, const CheckpointPlan& plan,
                    const transfer::RunOptions& options, Progress* progress,
                    BigCount* out) {
  transfer::Frontier frontier;
  if (!plan.resume_path.empty()) {
    frontier = transfer::load_frontier(plan.resume_path);
    if (frontier.mode != mode_for(symmetry))
      throw invalid_operation_error(
          std::string("checkpoint mode unsuited to count ") + symmetry);
    if (*n != 0 && frontier.height() != 2 * *n)
      throw invalid_operation_error("checkpoint height disagrees with --n");
    *n = frontier.height() / 2;
  } else {
    frontier = transfer::starting_frontier(*n, mode_for(symmetry));
  }
  const int target = target_boundary(symmetry, *n);
  if (frontier.column > target)
    throw invalid_operation_error("checkpoint is already past the target boundary");
  while (frontier.column < target) {
    frontier = transfer::step(frontier, options);
    progress->column_line(frontier.column, frontier.entries.size());
    if (!plan.save_path.empty()) {
      save_checkpoint_atomically(plan.save_path, frontier);
      if (frontier.column == plan.stop_column) {
        std::fprintf(stderr, "checkpoint=%s column=%d\n",
                     plan.save_path.string().c_str(), frontier.column);
        return false;
      }
    }
  }
  *out = transfer::finish_count(std::move(frontier), symmetry, options);
  return true;
}

// Recomputes small-n counts from scratch and compares; also proves the two
// reflective routes agree at this n.
void cross_check(int n, const std::vector<std::pair<char, BigCount>>& values,
                 const transfer::RunOptions& options) {
  const BigCount edge = transfer::count_B_edge(n, options);
  const BigCount central = transfer::count_B_central(n, options);
  if (edge != central)
    throw inconsistent_counts_error(
        "reflective routes disagree: edge " + to_decimal(edge) + " vs central " +
        to_decimal(central));
  for (const auto& [symmetry, value] : values)
    if (symmetry == 'B' && value != edge)
      throw inconsistent_counts_error("count B " + to_decimal(value) +
                                      " disagrees with recomputation " +
                                      to_decimal(edge));
  if (n > 3) return;

  const GridSpec spec{2 * n, 2 * n};
  const std::vector<Cycle> cycles = oracle::brute_cycles(spec);
  const auto fixed_by = [&](std::initializer_list<D4Op> ops) {
    BigCount total = 0;
    for (const Cycle& cycle : cycles) {
      bool fixed = true;
      for (D4Op op : ops)
        if (apply_symmetry(cycle, op) != cycle) {
          fixed = false;
          break;
        }
      if (fixed) ++total;
    }
    return total;
  };
  const std::pair<char, BigCount> reference[] = {
      {'A', BigCount(cycles.size())},
      {'B', fixed_by({D4Op::reflect_h})},
      {'C', fixed_by({D4Op::rot180})},
      {'D', fixed_by({D4Op::reflect_h, D4Op::reflect_v})},
      {'E', fixed_by({D4Op::rot90})},
      {'F', fixed_by({D4Op::rot90, D4Op::reflect_h})},
  };
  for (const auto& [symmetry, value] : values)
    for (const auto& [ref_symmetry, ref_value] : reference)
      if (symmetry == ref_symmetry && value != ref_value)
        throw inconsistent_counts_error(
            std::string("count ") + symmetry + " " + to_decimal(value) +
            " disagrees with direct enumeration " + to_decimal(ref_value));
}

struct CountArgs {
  int n = 0;
  std::string symmetry = "all";
  bool check = false;
  bool verify_parity = false;
  std::string checkpoint;
  int checkpoint_column = 0;
  std::string resume;
  CommonOptions common;
};

void cmd_count(const CountArgs& args) {
  Progress progress;
  const transfer::RunOptions options = make_run_options(args.common, &progress);
  const bool all = args.symmetry == "all";
  const char single = all ? '\0' : args.symmetry[0];
  const bool frontier_driven = !all && single >= 'A' && single <= 'D';

  if ((!args.checkpoint.empty() || !args.resume.empty()) && !frontier_driven)
    throw invalid_operation_error(
        "checkpoints apply to the frontier sweeps (A, B, C, D) only");
  if (args.n == 0 && args.resume.empty())
    throw invalid_operation_error("--n is required unless resuming");

  std::vector<std::pair<char, BigCount>> values;
  int n = args.n;
  if (all) {
    const SymmetryCounts counts = algebra::count_all(
        n, {.run = options, .verify_parity = args.verify_parity});
    values = {{'A', counts.A}, {'B', counts.B}, {'C', counts.C},
              {'D', counts.D}, {'E', counts.E}, {'F', counts.F}};
  } else if (frontier_driven) {
    CheckpointPlan plan{args.checkpoint, args.checkpoint_column, args.resume};
    BigCount value;
    if (!frontier_count(single, &n, plan, options, &progress, &value)) return;
    values = {{single, std::move(value)}};
  } else if (single == 'E') {
    rot90::CountEOptions e_options;
    e_options.verify_parity = args.verify_parity;
    e_options.progress = [&](std::uint64_t solutions) {
      progress.solutions_line(solutions);
    };
    values = {{'E', rot90::count_E(n, e_options)}};
  } else {
    values = {{'F', BigCount(n == 1 ? 1 : 0)}};
  }

  if (args.check) cross_check(n, values, options);
  std::cout << report::render(
      report::CountReport{n, std::move(values), args.check},
      report::parse_format(args.common.format));
}

struct ClassesArgs {
  int n = 0;
  bool with_oeis = false;
  bool check = false;
  bool verify_parity = false;
  CommonOptions common;
};

void cmd_classes(const ClassesArgs& args) {
  Progress progress;
  const transfer::RunOptions options = make_run_options(args.common, &progress);
  const SymmetryCounts counts = algebra::count_all(
      args.n, {.run = options, .verify_parity = args.verify_parity});
  const ClassCounts classes = algebra::reduce(counts);
  if (args.check && args.n <= 3) {
    const ClassCounts reference =
        oracle::classify(oracle::brute_cycles(GridSpec{2 * args.n, 2 * args.n}));
    if (!(classes == reference))
      throw inconsistent_counts_error(
          "reduced classes disagree with direct classification");
  }
  std::cout << report::render(
      report::ClassesReport{args.n, counts, classes, args.with_oeis},
      report::parse_format(args.common.format));
}

struct CensusArgs {
  int n = 0;
  std::string mode = "unrestricted";
  CommonOptions common;
};

void cmd_census(const CensusArgs& args) {
  const transfer::Mode mode = args.mode == "reflective"
                                  ? transfer::Mode::reflective_h
                                  : transfer::Mode::unrestricted;
  std::cout << report::render(
      report::CensusReport{args.n, mode, transfer::state_census(args.n, mode)},
      report::parse_format(args.common.format));
}

struct FromStartArgs {
  int n = 0;
  CommonOptions common;
};

void cmd_from_start(const FromStartArgs& args) {
  Progress progress;
  const transfer::RunOptions options = make_run_options(args.common, &progress);
  std::cout << report::render(
      report::FromStartReport{args.n, transfer::from_start_table(args.n, options)},
      report::parse_format(args.common.format));
}

struct RectArgs {
  int width = 0;
  int height = 0;
  CommonOptions common;
};

void cmd_rect(const RectArgs& args) {
  Progress progress;
  const transfer::RunOptions options = make_run_options(args.common, &progress);
  std::cout << report::render(
      report::RectReport{args.width, args.height,
                         transfer::count_rect(args.width, args.height, options)},
      report::parse_format(args.common.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Hamiltonian cycle counts on 2n x 2n grids under the symmetries "
      "of the square"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Fixed-cycle counts A through F");
  count->add_option("--n", count_args.n, "Half the grid side")
      ->check(CLI::PositiveNumber);
  auto* symmetry_opt =
      count->add_option("--symmetry", count_args.symmetry, "Which count")
          ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "all"}));
  count->add_flag_callback("--all", [&] { count_args.symmetry = "all"; },
                           "All six counts")
      ->excludes(symmetry_opt);
  count->add_flag("--check", count_args.check,
                  "Cross-verify against independent routes");
  count->add_flag("--verify-parity", count_args.verify_parity,
                  "Run the quarter-turn search even where parity forces 0");
  auto* ckpt_opt = count->add_option("--checkpoint", count_args.checkpoint,
                                     "Save the frontier here after every column");
  count->add_option("--checkpoint-column", count_args.checkpoint_column,
                    "Stop once this column is checkpointed")
      ->needs(ckpt_opt)
      ->check(CLI::PositiveNumber);
  count->add_option("--resume", count_args.resume, "Continue from a checkpoint");
  add_common(count, &count_args.common);
  count->callback([&] { cmd_count(count_args); });

  ClassesArgs classes_args;
  auto* classes = app.add_subcommand("classes", "Isomorphism class counts");
  classes->add_option("--n", classes_args.n, "Half the grid side")
      ->required()
      ->check(CLI::PositiveNumber);
  classes->add_flag("--oeis", classes_args.with_oeis,
                    "Append published-sequence names");
  classes->add_flag("--check", classes_args.check,
                    "Cross-verify against direct classification at small n");
  classes->add_flag("--verify-parity", classes_args.verify_parity,
                    "Run the quarter-turn search even where parity forces 0");
  add_common(classes, &classes_args.common);
  classes->callback([&] { cmd_classes(classes_args); });

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Reachable states and continuations");
  census->add_option("--n", census_args.n, "Half the grid side")
      ->required()
      ->check(CLI::PositiveNumber);
  census->add_option("--mode", census_args.mode, "Sweep restriction")
      ->check(CLI::IsMember({"unrestricted", "reflective"}));
  add_common(census, &census_args.common);
  census->callback([&] { cmd_census(census_args); });

  FromStartArgs from_start_args;
  auto* from_start =
      app.add_subcommand("from-start", "Completions per starting state");
  from_start->add_option("--n", from_start_args.n, "Half the grid side")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(from_start, &from_start_args.common);
  from_start->callback([&] { cmd_from_start(from_start_args); });

  RectArgs rect_args;
  auto* rect = app.add_subcommand("rect", "Counts on width x height rectangles");
  rect->add_option("--width", rect_args.width, "Columns")
      ->required()
      ->check(CLI::PositiveNumber);
  rect->add_option("--height", rect_args.height, "Rows (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(rect, &rect_args.common);
  rect->callback([&] { cmd_rect(rect_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const checkpoint_error& e) {
    std::fprintf(stderr, "checkpoint error: %s\n", e.what());
    return 4;
  } catch (const inconsistent_counts_error& e) {
    std::fprintf(stderr, "cross-check failed: %s\n", e.what());
    return 3;
  } catch (const resource_limit_error& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

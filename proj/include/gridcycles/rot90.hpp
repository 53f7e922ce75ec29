#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridcycles/bigcount.hpp"
#include "gridcycles/grid.hpp"
#include "gridcycles/path_endpoints.hpp"

namespace gridcycles::rot90 {

// Quarter-turn symmetric cycles on the 2n x 2n grid are in bijection with
// certain closed routes through one quadrant.  We search the quadrant graph
// directly: the n x n corner subgrid plus one "fold" edge (i, n)-(n, i) for
// each 1 <= i < n.  A fold edge stands for the unit step that leaves the
// quadrant and re-enters the next rotated copy.
struct QuotientGraph {
  int n = 0;
  // Nodes are the n*n points (r, c), 1-indexed, id = (r-1)*n + (c-1).
  std::vector<std::pair<int, int>> grid_edges;   // unit steps inside the quadrant
  std::vector<std::pair<int, int>> fold_edges;   // (i, n)-(n, i), i < n

  int node_id(int row, int col) const { return (row - 1) * n + (col - 1); }
  bool is_fold(int edge_index) const {
    return edge_index >= static_cast<int>(grid_edges.size());
  }
  int edge_count() const {
    return static_cast<int>(grid_edges.size() + fold_edges.size());
  }
  std::pair<int, int> edge(int edge_index) const;

  SimpleGraph as_graph() const;
};

QuotientGraph build_quotient(int n);

// Exact-cover style matrix for 2-factor search: one column per node with
// capacity 2, one row per edge.  Selecting a row consumes one unit of
// capacity at both endpoints; a column at capacity drops out together with
// the unselected rows that would still feed it.
class DlxMatrix {
 public:
  explicit DlxMatrix(const SimpleGraph& graph);

  int column_count() const { return columns_; }
  int row_count() const { return rows_; }

  // Enumerates 2-factors.  guard(selection, row) is consulted before a row
  // that would close a path into a loop is taken; returning false skips it.
  // fn receives the selected row set; returning false stops the search.
  void search(const std::function<bool(std::span<const int>, int)>& guard,
              const std::function<bool(std::span<const int>)>& fn);

  // Byte-for-byte image of the link structure, for checking that backtracking
  // restores the matrix exactly.
  std::vector<int> snapshot() const;

 private:
  struct Cell {
    int left, right, up, down;
    int column;  // column head index, or -1 on head cells
    int row;     // owning row, or -1 on head cells
  };

  bool try_select(int row);
  void undo_select(int row);
  void cover_column(int col);
  void uncover_column(int col);
  void descend(const std::function<bool(std::span<const int>)>& fn);

  int columns_ = 0;
  int rows_ = 0;
  int root_ = 0;                  // ring head sitting after the column heads
  std::vector<Cell> cells_;       // heads first, then 2 cells per row
  std::vector<int> remaining_;    // capacity left per column
  std::vector<int> row_cell_;     // first cell of each row
  std::vector<int> selection_;
  std::vector<char> linked_;      // per selection: whether it merged two paths
  std::vector<std::pair<int, int>> endpoints_;  // row -> (node, node)
  PathEndpoints ends_;
  const std::function<bool(std::span<const int>, int)>* guard_ = nullptr;
  bool stopped_ = false;
};

// Runs the 2-factor search with a path-endpoint loop guard that admits a
// loop only when it swallows every remaining node, so each callback receives
// a single Hamiltonian cycle of the graph.
std::uint64_t dlx_hamiltonian_cycles(
    const SimpleGraph& graph,
    const std::function<bool(std::span<const int>)>& fn);

// Expands a quotient solution (edge index set) to the full cycle it encodes.
// Throws invariant_violation_error if the result is not a quarter-turn
// symmetric Hamiltonian cycle.
Cycle unfold(const QuotientGraph& quotient, std::span<const int> edge_ids);

struct CountEOptions {
  // Even n >= 2 admits no quarter-turn cycle; the search is skipped unless
  // this asks for the empty run anyway.
  bool verify_parity = false;
  std::function<void(std::uint64_t solutions)> progress;
};

BigCount count_E(int n, const CountEOptions& options = {});

}  // namespace gridcycles::rot90

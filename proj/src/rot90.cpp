#include "gridcycles/rot90.hpp"

#include <algorithm>
#include <cassert>

namespace gridcycles::rot90 {

std::pair<int, int> QuotientGraph::edge(int edge_index) const {
  if (edge_index < 0 || edge_index >= edge_count())
    throw invalid_operation_error("edge index outside the quotient graph");
  const auto grid_count = static_cast<int>(grid_edges.size());
  return edge_index < grid_count
             ? grid_edges[static_cast<std::size_t>(edge_index)]
             : fold_edges[static_cast<std::size_t>(edge_index - grid_count)];
}

SimpleGraph QuotientGraph::as_graph() const {
  SimpleGraph graph;
  graph.node_count = n * n;
  graph.edges = grid_edges;
  graph.edges.insert(graph.edges.end(), fold_edges.begin(), fold_edges.end());
  return graph;
}

QuotientGraph build_quotient(int n) {
  if (n < 1) throw invalid_operation_error("quotient needs n >= 1");
  QuotientGraph q;
  q.n = n;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      if (c < n) q.grid_edges.emplace_back(q.node_id(r, c), q.node_id(r, c + 1));
      if (r < n) q.grid_edges.emplace_back(q.node_id(r, c), q.node_id(r + 1, c));
    }
  for (int i = 1; i < n; ++i) {
    const int a = q.node_id(i, n);
    const int b = q.node_id(n, i);
    q.fold_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return q;
}

DlxMatrix::DlxMatrix(const SimpleGraph& graph) {
  columns_ = graph.node_count;
  rows_ = static_cast<int>(graph.edges.size());
  root_ = columns_;
  cells_.resize(static_cast<std::size_t>(columns_ + 1 + 2 * rows_));
  int prev = root_;
  for (int c = 0; c <= columns_; ++c) {
    Cell& head = cells_[static_cast<std::size_t>(c)];
    head.up = head.down = c;
    head.column = c;
    head.row = -1;
  }
  for (int c = 0; c < columns_; ++c) {
    cells_[static_cast<std::size_t>(prev)].right = c;
    cells_[static_cast<std::size_t>(c)].left = prev;
    prev = c;
  }
  cells_[static_cast<std::size_t>(prev)].right = root_;
  cells_[static_cast<std::size_t>(root_)].left = prev;

  remaining_.assign(static_cast<std::size_t>(columns_), 2);
  row_cell_.resize(static_cast<std::size_t>(rows_));
  endpoints_.resize(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    const auto [a, b] = graph.edges[static_cast<std::size_t>(r)];
    if (a == b || a < 0 || b >= columns_)
      throw invalid_operation_error("matrix rows need two distinct nodes");
    const int ca = columns_ + 1 + 2 * r;
    const int cb = ca + 1;
    row_cell_[static_cast<std::size_t>(r)] = ca;
    endpoints_[static_cast<std::size_t>(r)] = {a, b};
    for (const auto& [cell, col] : {std::pair{ca, a}, std::pair{cb, b}}) {
      Cell& me = cells_[static_cast<std::size_t>(cell)];
      me.column = col;
      me.row = r;
      me.left = me.right = ca + cb - cell;
      Cell& head = cells_[static_cast<std::size_t>(col)];
      me.up = head.up;
      me.down = col;
      cells_[static_cast<std::size_t>(me.up)].down = cell;
      head.up = cell;
    }
  }
  ends_.reset(columns_);
}

void DlxMatrix::cover_column(int col) {
  Cell& head = cells_[static_cast<std::size_t>(col)];
  cells_[static_cast<std::size_t>(head.left)].right = head.right;
  cells_[static_cast<std::size_t>(head.right)].left = head.left;
  for (int i = head.down; i != col; i = cells_[static_cast<std::size_t>(i)].down) {
    const int j = cells_[static_cast<std::size_t>(i)].right;
    Cell& partner = cells_[static_cast<std::size_t>(j)];
    cells_[static_cast<std::size_t>(partner.up)].down = partner.down;
    cells_[static_cast<std::size_t>(partner.down)].up = partner.up;
  }
}

void DlxMatrix::uncover_column(int col) {
  Cell& head = cells_[static_cast<std::size_t>(col)];
  for (int i = head.up; i != col; i = cells_[static_cast<std::size_t>(i)].up) {
    const int j = cells_[static_cast<std::size_t>(i)].right;
    Cell& partner = cells_[static_cast<std::size_t>(j)];
    cells_[static_cast<std::size_t>(partner.up)].down = j;
    cells_[static_cast<std::size_t>(partner.down)].up = j;
  }
  cells_[static_cast<std::size_t>(head.left)].right = col;
  cells_[static_cast<std::size_t>(head.right)].left = col;
}

bool DlxMatrix::try_select(int row) {
  const auto [a, b] = endpoints_[static_cast<std::size_t>(row)];
  if (remaining_[static_cast<std::size_t>(a)] == 0 ||
      remaining_[static_cast<std::size_t>(b)] == 0)
    return false;
  const bool closing = ends_.would_close(a, b);
  if (closing && guard_ && !(*guard_)(selection_, row)) return false;
  if (!closing) ends_.link(a, b);
  linked_.push_back(closing ? 0 : 1);

  const int ca = row_cell_[static_cast<std::size_t>(row)];
  const int cb = ca + 1;
  for (int cell : {ca, cb}) {
    Cell& me = cells_[static_cast<std::size_t>(cell)];
    cells_[static_cast<std::size_t>(me.up)].down = me.down;
    cells_[static_cast<std::size_t>(me.down)].up = me.up;
  }
  for (int node : {a, b}) {
    if (--remaining_[static_cast<std::size_t>(node)] == 0) cover_column(node);
  }
  selection_.push_back(row);
  return true;
}

void DlxMatrix::undo_select(int row) {
  assert(!selection_.empty() && selection_.back() == row);
  selection_.pop_back();
  const auto [a, b] = endpoints_[static_cast<std::size_t>(row)];
  for (int node : {b, a}) {
    if (remaining_[static_cast<std::size_t>(node)] == 0) uncover_column(node);
    ++remaining_[static_cast<std::size_t>(node)];
  }
  const int ca = row_cell_[static_cast<std::size_t>(row)];
  const int cb = ca + 1;
  for (int cell : {cb, ca}) {
    Cell& me = cells_[static_cast<std::size_t>(cell)];
    cells_[static_cast<std::size_t>(me.up)].down = cell;
    cells_[static_cast<std::size_t>(me.down)].up = cell;
  }
  const bool was_linked = linked_.back() != 0;
  linked_.pop_back();
  if (was_linked) ends_.unlink(a, b);
}

void DlxMatrix::descend(const std::function<bool(std::span<const int>)>& fn) {
  if (stopped_) return;
  const Cell& root = cells_[static_cast<std::size_t>(root_)];
  if (root.right == root_) {
    if (!fn(selection_)) stopped_ = true;
    return;
  }

  int best_col = -1;
  long best_branches = -1;
  for (int c = root.right; c != root_;
       c = cells_[static_cast<std::size_t>(c)].right) {
    long size = 0;
    for (int i = cells_[static_cast<std::size_t>(c)].down; i != c;
         i = cells_[static_cast<std::size_t>(i)].down)
      ++size;
    const int need = remaining_[static_cast<std::size_t>(c)];
    assert(need == 1 || need == 2);
    if (size < need) return;
    const long branches = need == 1 ? size : size * (size - 1) / 2;
    if (best_branches < 0 || branches < best_branches) {
      best_branches = branches;
      best_col = c;
    }
    if (best_branches == 1) break;
  }

  std::vector<int> rows;
  for (int i = cells_[static_cast<std::size_t>(best_col)].down; i != best_col;
       i = cells_[static_cast<std::size_t>(i)].down)
    rows.push_back(cells_[static_cast<std::size_t>(i)].row);

  if (remaining_[static_cast<std::size_t>(best_col)] == 1) {
    for (int row : rows) {
      if (!try_select(row)) continue;
      descend(fn);
      undo_select(row);
      if (stopped_) return;
    }
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!try_select(rows[i])) continue;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!try_select(rows[j])) continue;
      descend(fn);
      undo_select(rows[j]);
      if (stopped_) break;
    }
    undo_select(rows[i]);
    if (stopped_) return;
  }
}

void DlxMatrix::search(
    const std::function<bool(std::span<const int>, int)>& guard,
    const std::function<bool(std::span<const int>)>& fn) {
  if (!fn) throw invalid_operation_error("search needs a solution callback");
  stopped_ = false;
  guard_ = guard ? &guard : nullptr;
  descend(fn);
  guard_ = nullptr;
}

std::vector<int> DlxMatrix::snapshot() const {
  std::vector<int> image;
  image.reserve(cells_.size() * 4 + remaining_.size() + columns_ + 1);
  for (const Cell& cell : cells_) {
    image.push_back(cell.left);
    image.push_back(cell.right);
    image.push_back(cell.up);
    image.push_back(cell.down);
  }
  image.insert(image.end(), remaining_.begin(), remaining_.end());
  for (int v = 0; v < columns_; ++v) image.push_back(ends_.partner(v));
  image.push_back(static_cast<int>(selection_.size()));
  return image;
}

std::uint64_t dlx_hamiltonian_cycles(
    const SimpleGraph& graph,
    const std::function<bool(std::span<const int>)>& fn) {
  DlxMatrix matrix(graph);
  const int nodes = graph.node_count;
  std::uint64_t found = 0;
  matrix.search(
      [nodes](std::span<const int> selection, int) {
        return static_cast<int>(selection.size()) == nodes - 1;
      },
      [&](std::span<const int> selection) {
        ++found;
        return fn ? fn(selection) : true;
      });
  return found;
}

namespace {

GridPoint rotated(GridPoint p, int quarter_turns, int side) {
  for (int k = 0; k < quarter_turns; ++k) p = apply_op(D4Op::rot90, p, side);
  return p;
}

}  // namespace

Cycle unfold(const QuotientGraph& quotient, std::span<const int> edge_ids) {
  const int n = quotient.n;
  const int side = 2 * n;
  const GridSpec host{side, side};
  std::vector<GridEdge> realized;
  realized.reserve(edge_ids.size());
  for (int id : edge_ids) {
    const auto [a, b] = quotient.edge(id);
    GridPoint pa{a / n + 1, a % n + 1};
    GridPoint pb{b / n + 1, b % n + 1};
    if (quotient.is_fold(id)) {
      // Fold edges join (i, n) to the next quadrant's copy of (n, i), which a
      // quarter turn places at (i, n + 1).
      if (pa.col != n) std::swap(pa, pb);
      realized.push_back(make_edge(pa, GridPoint{pa.row, n + 1}));
    } else {
      realized.push_back(make_edge(pa, pb));
    }
  }
  std::vector<GridEdge> edges;
  edges.reserve(realized.size() * 4);
  for (int k = 0; k < 4; ++k)
    for (const auto& [a, b] : realized)
      edges.push_back(make_edge(rotated(a, k, side), rotated(b, k, side)));
  Cycle cycle = Cycle::from_edges(host, std::move(edges));
  if (apply_symmetry(cycle, D4Op::rot90) != cycle)
    throw invariant_violation_error("unfolded cycle lost its quarter turn");
  return cycle;
}

BigCount count_E(int n, const CountEOptions& options) {
  if (n < 1) throw invalid_operation_error("count_E needs n >= 1");
  if (n == 1) return 1;
  if (n % 2 == 0 && !options.verify_parity) return 0;

  const QuotientGraph quotient = build_quotient(n);
  const SimpleGraph graph = quotient.as_graph();
  std::uint64_t kept = 0;
  std::uint64_t seen = 0;
  dlx_hamiltonian_cycles(graph, [&](std::span<const int> selection) {
    int folds = 0;
    for (int id : selection)
      if (quotient.is_fold(id)) ++folds;
    // A closed route alternates colours except on fold edges, so the fold
    // count always matches n * n mod 2.
    if (folds % 2 != n % 2)
      throw invariant_violation_error("fold edge parity broke");
    if (folds % 2 == 1) ++kept;
    ++seen;
    if (options.progress) options.progress(seen);
    return true;
  });
  return BigCount(static_cast<unsigned long>(kept));
}

}  // namespace gridcycles::rot90

#include "gridcycles/grid.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace gridcycles {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw invariant_violation_error(what);
}

bool rectangle_safe(D4Op op) {
  return op == D4Op::identity || op == D4Op::reflect_h || op == D4Op::reflect_v;
}

}  // namespace

int node_id(const GridSpec& spec, GridPoint p) {
  require(p.row >= 1 && p.row <= spec.rows && p.col >= 1 && p.col <= spec.cols,
          "grid point out of range");
  return (p.row - 1) * spec.cols + (p.col - 1);
}

GridPoint node_point(const GridSpec& spec, int id) {
  require(id >= 0 && id < spec.node_count(), "node id out of range");
  return {id / spec.cols + 1, id % spec.cols + 1};
}

GridPoint apply_op(D4Op op, GridPoint p, int side) {
  const int flip = side + 1;
  switch (op) {
    case D4Op::identity:     return p;
    case D4Op::rot90:        return {p.col, flip - p.row};
    case D4Op::rot180:       return {flip - p.row, flip - p.col};
    case D4Op::rot270:       return {flip - p.col, p.row};
    case D4Op::reflect_h:    return {flip - p.row, p.col};
    case D4Op::reflect_v:    return {p.row, flip - p.col};
    case D4Op::reflect_main: return {p.col, p.row};
    case D4Op::reflect_anti: return {flip - p.col, flip - p.row};
  }
  throw invalid_operation_error("unknown symmetry operation");
}

D4Op composed(D4Op h, D4Op g) {
  // Determined by the action on three non-collinear points of a 5x5 board.
  static const std::array<GridPoint, 3> probes{{{1, 1}, {1, 2}, {2, 4}}};
  for (D4Op cand : kAllD4Ops) {
    bool match = true;
    for (GridPoint p : probes)
      if (apply_op(cand, p, 5) != apply_op(h, apply_op(g, p, 5), 5)) {
        match = false;
        break;
      }
    if (match) return cand;
  }
  throw invariant_violation_error("symmetry composition fell outside the group");
}

int D4Set::size() const {
  int n = 0;
  for (D4Op op : kAllD4Ops)
    if (contains(op)) ++n;
  return n;
}

std::vector<D4Op> D4Set::ops() const {
  std::vector<D4Op> out;
  for (D4Op op : kAllD4Ops)
    if (contains(op)) out.push_back(op);
  return out;
}

Cycle Cycle::from_edges(const GridSpec& host, std::vector<GridEdge> edges) {
  require(host.rows >= 1 && host.cols >= 1, "degenerate host grid");
  for (auto& [a, b] : edges) {
    if (b < a) std::swap(a, b);
    require(std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1,
            "cycle edge joins non-adjacent nodes");
  }
  std::sort(edges.begin(), edges.end());
  require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
          "duplicate cycle edge");
  const int n = host.node_count();
  require(static_cast<int>(edges.size()) == n, "cycle edge count != node count");

  // Degree 2 everywhere, then one closed walk covering everything.
  std::vector<std::array<int, 2>> nbr(static_cast<std::size_t>(n), {-1, -1});
  for (const auto& [a, b] : edges) {
    const int ia = node_id(host, a);
    const int ib = node_id(host, b);
    for (int v : {ia, ib}) {
      auto& slots = nbr[static_cast<std::size_t>(v)];
      require(slots[1] < 0, "node degree exceeds 2");
      slots[slots[0] < 0 ? 0 : 1] = v == ia ? ib : ia;
    }
  }
  for (const auto& slots : nbr)
    require(slots[1] >= 0, "node degree below 2");
  int prev = 0;
  int cur = nbr[0][0];
  int visited = 1;
  while (cur != 0) {
    const auto& slots = nbr[static_cast<std::size_t>(cur)];
    const int next = slots[0] == prev ? slots[1] : slots[0];
    prev = cur;
    cur = next;
    ++visited;
  }
  require(visited == n, "edge set splits into multiple loops");

  Cycle out;
  out.host_ = host;
  out.edges_ = std::move(edges);
  return out;
}

Cycle apply_symmetry(const Cycle& cycle, D4Op op) {
  const GridSpec& host = cycle.host();
  if (!host.square() && !rectangle_safe(op))
    throw invalid_operation_error(
        "rotations and diagonal reflections need a square grid");
  const auto map_point = [&](GridPoint p) -> GridPoint {
    if (host.square()) return apply_op(op, p, host.rows);
    if (op == D4Op::reflect_h) return {host.rows + 1 - p.row, p.col};
    if (op == D4Op::reflect_v) return {p.row, host.cols + 1 - p.col};
    return p;
  };
  std::vector<GridEdge> mapped;
  mapped.reserve(cycle.edges().size());
  for (const auto& [a, b] : cycle.edges())
    mapped.push_back(make_edge(map_point(a), map_point(b)));
  return Cycle::from_edges(host, std::move(mapped));
}

D4Set stabilizer(const Cycle& cycle) {
  D4Set fix;
  for (D4Op op : kAllD4Ops) {
    if (!cycle.host().square() && !rectangle_safe(op)) continue;
    if (apply_symmetry(cycle, op) == cycle) fix.insert(op);
  }
  // Whitelist of subgroups that grid Hamiltonian cycles realize.  Diagonal
  // reflections can only appear when the whole group fixes the cycle.
  static const auto allowed = [] {
    std::vector<D4Set> sets;
    D4Set s;
    s.insert(D4Op::identity);
    sets.push_back(s);  // trivial
    for (D4Op op : {D4Op::reflect_h, D4Op::reflect_v, D4Op::rot180}) {
      D4Set t;
      t.insert(D4Op::identity);
      t.insert(op);
      sets.push_back(t);
    }
    D4Set axes;
    for (D4Op op : {D4Op::identity, D4Op::reflect_h, D4Op::reflect_v, D4Op::rot180})
      axes.insert(op);
    sets.push_back(axes);
    D4Set rots;
    for (D4Op op : {D4Op::identity, D4Op::rot90, D4Op::rot180, D4Op::rot270})
      rots.insert(op);
    sets.push_back(rots);
    D4Set all;
    for (D4Op op : kAllD4Ops) all.insert(op);
    sets.push_back(all);
    return sets;
  }();
  for (const D4Set& s : allowed)
    if (fix == s) return fix;
  throw invariant_violation_error("stabilizer outside the realizable subgroups");
}

void SymmetryCounts::validate() const {
  const bool ok = A >= B && A >= C && C >= D && C >= E && E >= F && B >= D &&
                  D >= F && F >= 0;
  if (!ok)
    throw inconsistent_counts_error("symmetry counts violate subset ordering");
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SimpleGraph grid_graph(const GridSpec& spec) {
  SimpleGraph g;
  g.node_count = spec.node_count();
  for (int r = 1; r <= spec.rows; ++r)
    for (int c = 1; c <= spec.cols; ++c) {
      const int here = node_id(spec, {r, c});
      if (c < spec.cols) g.edges.emplace_back(here, node_id(spec, {r, c + 1}));
      if (r < spec.rows) g.edges.emplace_back(here, node_id(spec, {r + 1, c}));
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace gridcycles

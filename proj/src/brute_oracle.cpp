#include "gridcycles/brute_oracle.hpp"

#include <algorithm>
#include <map>

namespace gridcycles::oracle {

namespace {

struct CycleSearch {
  const std::vector<std::vector<int>>* adj;
  const std::function<void(std::span<const int>)>* fn;
  int node_count = 0;
  int anchor = 0;
  std::vector<int> path;
  std::vector<char> visited;
  std::vector<int> open_degree;  // links to unvisited nodes or the anchor
  std::uint64_t found = 0;

  bool anchored_adjacent(int v) const {
    const auto& list = (*adj)[static_cast<std::size_t>(v)];
    return std::binary_search(list.begin(), list.end(), anchor);
  }

  // A node that can no longer collect two cycle edges kills the branch.  The
  // current path end may still supply one edge to its own neighbours.
  bool viable(int end) const {
    for (int u = 0; u < node_count; ++u) {
      if (visited[static_cast<std::size_t>(u)]) continue;
      int open = open_degree[static_cast<std::size_t>(u)];
      if (open < 2) {
        const auto& list = (*adj)[static_cast<std::size_t>(u)];
        if (std::binary_search(list.begin(), list.end(), end)) ++open;
        if (open < 2) return false;
      }
    }
    return true;
  }

  void visit(int v) {
    visited[static_cast<std::size_t>(v)] = 1;
    for (int u : (*adj)[static_cast<std::size_t>(v)])
      --open_degree[static_cast<std::size_t>(u)];
    path.push_back(v);
  }

  void unvisit(int v) {
    path.pop_back();
    for (int u : (*adj)[static_cast<std::size_t>(v)])
      ++open_degree[static_cast<std::size_t>(u)];
    visited[static_cast<std::size_t>(v)] = 0;
  }

  void extend(int v) {
    if (static_cast<int>(path.size()) == node_count) {
      if (anchored_adjacent(v) && path[1] < v) {
        ++found;
        if (*fn) (*fn)(path);
      }
      return;
    }
    if (!viable(v)) return;
    for (int u : (*adj)[static_cast<std::size_t>(v)]) {
      if (visited[static_cast<std::size_t>(u)]) continue;
      visit(u);
      extend(u);
      unvisit(u);
    }
  }
};

}  // namespace

std::uint64_t for_each_hamiltonian_cycle(
    const SimpleGraph& graph, const std::function<void(std::span<const int>)>& fn,
    int anchor) {
  if (anchor < 0 || anchor >= graph.node_count)
    throw invalid_operation_error("anchor outside the graph");
  if (graph.node_count < 3) return 0;
  CycleSearch search;
  const auto adjacency = graph.adjacency();
  search.adj = &adjacency;
  search.fn = &fn;
  search.node_count = graph.node_count;
  search.anchor = anchor;
  search.visited.assign(static_cast<std::size_t>(graph.node_count), 0);
  search.open_degree.resize(static_cast<std::size_t>(graph.node_count));
  for (int v = 0; v < graph.node_count; ++v)
    search.open_degree[static_cast<std::size_t>(v)] =
        static_cast<int>(adjacency[static_cast<std::size_t>(v)].size());
  // The anchor stays "open": returning to it is what closes the cycle.
  search.visited[static_cast<std::size_t>(anchor)] = 1;
  search.path.push_back(anchor);
  for (int u : adjacency[static_cast<std::size_t>(anchor)]) {
    search.visit(u);
    search.extend(u);
    search.unvisit(u);
  }
  return search.found;
}

std::vector<Cycle> brute_cycles(const GridSpec& spec, int anchor) {
  const SimpleGraph graph = grid_graph(spec);
  std::vector<Cycle> cycles;
  for_each_hamiltonian_cycle(
      graph,
      [&](std::span<const int> nodes) {
        std::vector<GridEdge> edges;
        edges.reserve(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          const int a = nodes[i];
          const int b = nodes[(i + 1) % nodes.size()];
          edges.push_back(make_edge(node_point(spec, a), node_point(spec, b)));
        }
        cycles.push_back(Cycle::from_edges(spec, std::move(edges)));
      },
      anchor);
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a < b; });
  return cycles;
}

std::vector<GridEdge> canonical_form(const Cycle& cycle) {
  if (!cycle.host().square())
    throw invalid_operation_error("canonical form needs a square host");
  std::vector<GridEdge> best;
  for (D4Op op : kAllD4Ops) {
    std::vector<GridEdge> image = apply_symmetry(cycle, op).edges();
    if (best.empty() || image < best) best = std::move(image);
  }
  return best;
}

ClassCounts classify(const std::vector<Cycle>& cycles) {
  std::map<std::vector<GridEdge>, std::vector<const Cycle*>> classes;
  for (const Cycle& cycle : cycles)
    classes[canonical_form(cycle)].push_back(&cycle);
  ClassCounts counts{0, 0, 0, 0, 0, 0};
  for (const auto& [form, members] : classes) {
    const D4Set stab = stabilizer(*members.front());
    const int order = stab.size();
    if (static_cast<int>(members.size()) * order != 8)
      throw invariant_violation_error("orbit size disagrees with stabilizer order");
    switch (order) {
      case 1:
        ++counts.u;
        break;
      case 2:
        if (stab.contains(D4Op::reflect_h) || stab.contains(D4Op::reflect_v))
          ++counts.v;
        else
          ++counts.w;  // {identity, rot180}
        break;
      case 4:
        if (stab.contains(D4Op::rot90))
          ++counts.y;
        else
          ++counts.x;
        break;
      default:
        ++counts.z;
        break;
    }
  }
  return counts;
}

}  // namespace gridcycles::oracle

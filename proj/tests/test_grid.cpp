#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "gridcycles/errors.hpp"
#include "gridcycles/grid.hpp"

using namespace gridcycles;

namespace {

// A 4x4 Hamiltonian cycle fixed by the vertical-axis reflection only: top row
// straight across, column snakes below.
Cycle sample_4x4() {
  const GridSpec spec{4, 4};
  const GridPoint path[] = {
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}, {4, 3},
      {3, 3}, {2, 3}, {2, 2}, {3, 2}, {4, 2}, {4, 1}, {3, 1}, {2, 1},
  };
  std::vector<GridEdge> edges;
  for (std::size_t i = 0; i < std::size(path); ++i)
    edges.push_back(make_edge(path[i], path[(i + 1) % std::size(path)]));
  return Cycle::from_edges(spec, std::move(edges));
}

Cycle square_2x2() {
  const GridSpec spec{2, 2};
  return Cycle::from_edges(
      spec, {make_edge({1, 1}, {1, 2}), make_edge({1, 2}, {2, 2}),
             make_edge({2, 2}, {2, 1}), make_edge({2, 1}, {1, 1})});
}

Cycle ring_2x4() {
  const GridSpec spec{2, 4};
  const GridPoint path[] = {
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 3}, {2, 2}, {2, 1},
  };
  std::vector<GridEdge> edges;
  for (std::size_t i = 0; i < std::size(path); ++i)
    edges.push_back(make_edge(path[i], path[(i + 1) % std::size(path)]));
  return Cycle::from_edges(spec, std::move(edges));
}

}  // namespace

TEST_CASE("node ids round-trip and reject out-of-range points") {
  const GridSpec spec{3, 5};
  for (int id = 0; id < spec.node_count(); ++id)
    CHECK(node_id(spec, node_point(spec, id)) == id);
  CHECK(node_id(spec, {1, 1}) == 0);
  CHECK(node_id(spec, {2, 1}) == 5);
  CHECK_THROWS_AS(node_id(spec, {0, 1}), invariant_violation_error);
  CHECK_THROWS_AS(node_id(spec, {1, 6}), invariant_violation_error);
  CHECK_THROWS_AS(node_point(spec, 15), invariant_violation_error);
}

TEST_CASE("symmetry operations follow the clockwise convention") {
  CHECK(apply_op(D4Op::rot90, {1, 1}, 4) == GridPoint{1, 4});
  CHECK(apply_op(D4Op::rot90, {1, 4}, 4) == GridPoint{4, 4});
  CHECK(apply_op(D4Op::rot180, {1, 2}, 4) == GridPoint{4, 3});
  CHECK(apply_op(D4Op::reflect_h, {1, 2}, 4) == GridPoint{4, 2});
  CHECK(apply_op(D4Op::reflect_v, {1, 2}, 4) == GridPoint{1, 3});
  CHECK(apply_op(D4Op::reflect_main, {2, 3}, 4) == GridPoint{3, 2});
  CHECK(apply_op(D4Op::reflect_anti, {1, 1}, 4) == GridPoint{4, 4});

  GridPoint p{2, 3};
  for (int i = 0; i < 4; ++i) p = apply_op(D4Op::rot90, p, 5);
  CHECK(p == GridPoint{2, 3});
}

TEST_CASE("composition closes the group and matches pointwise action") {
  CHECK(composed(D4Op::rot90, D4Op::rot90) == D4Op::rot180);
  CHECK(composed(D4Op::rot90, D4Op::rot270) == D4Op::identity);
  CHECK(composed(D4Op::reflect_h, D4Op::reflect_v) == D4Op::rot180);
  CHECK(composed(D4Op::rot90, D4Op::reflect_h) == D4Op::reflect_main);

  const GridPoint probes[] = {{1, 1}, {2, 5}, {3, 4}};
  for (D4Op g : kAllD4Ops)
    for (D4Op h : kAllD4Ops) {
      const D4Op hg = composed(h, g);
      for (GridPoint p : probes)
        CHECK(apply_op(hg, p, 6) == apply_op(h, apply_op(g, p, 6), 6));
    }
}

TEST_CASE("D4Set stores operation subsets") {
  D4Set set;
  CHECK(set.size() == 0);
  set.insert(D4Op::identity);
  set.insert(D4Op::rot180);
  set.insert(D4Op::rot180);
  CHECK(set.size() == 2);
  CHECK(set.contains(D4Op::rot180));
  CHECK_FALSE(set.contains(D4Op::rot90));
  CHECK(set.ops() == std::vector<D4Op>{D4Op::identity, D4Op::rot180});
}

TEST_CASE("cycle construction validates the tour") {
  CHECK(square_2x2().edges().size() == 4);

  const GridSpec spec{2, 2};
  CHECK_THROWS_AS(
      Cycle::from_edges(spec, {make_edge({1, 1}, {1, 2}),
                               make_edge({1, 2}, {2, 2}),
                               make_edge({2, 2}, {2, 1})}),
      invariant_violation_error);  // too few edges
  CHECK_THROWS_AS(
      Cycle::from_edges(spec, {make_edge({1, 1}, {1, 2}),
                               make_edge({1, 1}, {1, 2}),
                               make_edge({2, 2}, {2, 1}),
                               make_edge({2, 1}, {1, 1})}),
      invariant_violation_error);  // duplicate edge
  CHECK_THROWS_AS(
      Cycle::from_edges(spec, {make_edge({1, 1}, {2, 2}),
                               make_edge({1, 2}, {2, 2}),
                               make_edge({2, 1}, {1, 1}),
                               make_edge({1, 2}, {2, 1})}),
      invariant_violation_error);  // diagonal step

  // Two disjoint unit squares on 2x4: right degrees, two loops.
  const GridSpec wide{2, 4};
  CHECK_THROWS_AS(
      Cycle::from_edges(wide,
                        {make_edge({1, 1}, {1, 2}), make_edge({1, 2}, {2, 2}),
                         make_edge({2, 2}, {2, 1}), make_edge({2, 1}, {1, 1}),
                         make_edge({1, 3}, {1, 4}), make_edge({1, 4}, {2, 4}),
                         make_edge({2, 4}, {2, 3}), make_edge({2, 3}, {1, 3})}),
      invariant_violation_error);
}

TEST_CASE("symmetries act on cycles as a group") {
  const Cycle c = sample_4x4();
  CHECK(apply_symmetry(c, D4Op::identity) == c);
  CHECK(apply_symmetry(square_2x2(), D4Op::rot90) == square_2x2());
  CHECK(apply_symmetry(apply_symmetry(c, D4Op::reflect_h), D4Op::reflect_h) == c);

  for (D4Op g : kAllD4Ops)
    for (D4Op h : kAllD4Ops)
      CHECK(apply_symmetry(apply_symmetry(c, g), h) ==
            apply_symmetry(c, composed(h, g)));
}

TEST_CASE("stabilizers and orbits multiply to the group order") {
  CHECK(stabilizer(square_2x2()).size() == 8);

  const Cycle c = sample_4x4();
  const D4Set stab = stabilizer(c);
  CHECK(stab.size() == 2);
  CHECK(stab.contains(D4Op::identity));
  CHECK(stab.contains(D4Op::reflect_v));

  for (const Cycle& cycle : {square_2x2(), c}) {
    std::set<Cycle> orbit;
    for (D4Op op : kAllD4Ops) orbit.insert(apply_symmetry(cycle, op));
    CHECK(static_cast<int>(orbit.size()) * stabilizer(cycle).size() == 8);
  }
}

TEST_CASE("non-square grids admit only the axis reflections") {
  const Cycle ring = ring_2x4();
  CHECK(apply_symmetry(ring, D4Op::reflect_h) == ring);
  CHECK(apply_symmetry(ring, D4Op::reflect_v) == ring);
  CHECK_THROWS_AS(apply_symmetry(ring, D4Op::rot90), invalid_operation_error);
  CHECK_THROWS_AS(apply_symmetry(ring, D4Op::reflect_main),
                  invalid_operation_error);
}

TEST_CASE("symmetry count rows must respect subset ordering") {
  SymmetryCounts good{6, 4, 2, 2, 0, 0};
  good.validate();
  SymmetryCounts swapped{4, 6, 2, 2, 0, 0};
  CHECK_THROWS_AS(swapped.validate(), inconsistent_counts_error);
  SymmetryCounts rogue_e{6, 4, 2, 2, 3, 0};
  CHECK_THROWS_AS(rogue_e.validate(), inconsistent_counts_error);
}

TEST_CASE("grid graphs wire unit steps only") {
  const SimpleGraph small = grid_graph({2, 2});
  CHECK(small.node_count == 4);
  CHECK(small.edges.size() == 4);

  const SimpleGraph rect = grid_graph({2, 3});
  CHECK(rect.node_count == 6);
  CHECK(rect.edges.size() == 7);

  const SimpleGraph big = grid_graph({4, 4});
  CHECK(big.edges.size() == 24);
  const auto adj = big.adjacency();
  for (int v = 0; v < big.node_count; ++v)
    for (int w : adj[static_cast<std::size_t>(v)]) {
      const auto& back = adj[static_cast<std::size_t>(w)];
      CHECK(std::find(back.begin(), back.end(), v) != back.end());
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "gridcycles/bigcount.hpp"
#include "gridcycles/errors.hpp"

namespace gridcycles {

struct GridSpec {
  int rows = 1;
  int cols = 1;

  bool square() const { return rows == cols; }
  int node_count() const { return rows * cols; }
  auto operator<=>(const GridSpec&) const = default;
};

// 1-indexed node coordinates, (row 1, col 1) at the top left.
struct GridPoint {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridPoint&) const = default;
};

// Unordered node pair, stored with first < second.
using GridEdge = std::pair<GridPoint, GridPoint>;

inline GridEdge make_edge(GridPoint a, GridPoint b) {
  return a < b ? GridEdge{a, b} : GridEdge{b, a};
}

int node_id(const GridSpec& spec, GridPoint p);
GridPoint node_point(const GridSpec& spec, int id);

// The eight symmetries of the square.  reflect_h flips rows (the mirror axis
// is horizontal), reflect_v flips columns; rotations are clockwise.
enum class D4Op : std::uint8_t {
  identity = 0,
  rot90,
  rot180,
  rot270,
  reflect_h,
  reflect_v,
  reflect_main,  // main diagonal (transpose)
  reflect_anti,
};

inline constexpr D4Op kAllD4Ops[] = {
    D4Op::identity,  D4Op::rot90,     D4Op::rot180,       D4Op::rot270,
    D4Op::reflect_h, D4Op::reflect_v, D4Op::reflect_main, D4Op::reflect_anti,
};

GridPoint apply_op(D4Op op, GridPoint p, int side);

// h after g, i.e. composed(h, g) acts as p -> h(g(p)).
D4Op composed(D4Op h, D4Op g);

// Small subset of the symmetry group, used for stabilizers.
class D4Set {
 public:
  void insert(D4Op op) { bits_ |= mask(op); }
  bool contains(D4Op op) const { return bits_ & mask(op); }
  int size() const;
  std::vector<D4Op> ops() const;
  bool operator==(const D4Set&) const = default;

 private:
  static std::uint8_t mask(D4Op op) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(op));
  }
  std::uint8_t bits_ = 0;
};

// A Hamiltonian cycle on a grid: every node has degree exactly 2 and the
// edge set is one connected tour of unit-length steps.
class Cycle {
 public:
  Cycle() = default;

  // Validates degree, adjacency and connectedness; throws
  // invariant_violation_error otherwise.
  static Cycle from_edges(const GridSpec& host, std::vector<GridEdge> edges);

  const GridSpec& host() const { return host_; }
  const std::vector<GridEdge>& edges() const { return edges_; }  // sorted

  bool operator==(const Cycle&) const = default;
  bool operator<(const Cycle& other) const {
    return edges_ < other.edges_;
  }

 private:
  GridSpec host_{1, 1};
  std::vector<GridEdge> edges_;
};

// Image of a cycle under a symmetry of its host.  Non-square hosts admit only
// the identity and the two axis reflections.
Cycle apply_symmetry(const Cycle& cycle, D4Op op);

// All operations fixing the cycle.  The result is always one of the subgroups
// that Hamiltonian cycles on a square grid can realize; a stabilizer built
// around a diagonal reflection (short of the full group) trips an invariant
// error.
D4Set stabilizer(const Cycle& cycle);

// Counts of cycles fixed by each symmetry regime of the square:
//   A none required, B axis reflection, C 180-degree rotation,
//   D both axis reflections, E 90-degree rotation, F all eight.
struct SymmetryCounts {
  BigCount A, B, C, D, E, F;

  // Subset ordering that any cycle population satisfies.
  void validate() const;
  bool operator==(const SymmetryCounts&) const = default;
};

// Isomorphism classes of cycles keyed by exact stabilizer:
//   u trivial, v one axis reflection, w 180-degree rotation only,
//   x both axis reflections, y rotation order 4, z full group.
struct ClassCounts {
  BigCount u, v, w, x, y, z;

  BigCount total() const { return u + v + w + x + y + z; }
  bool operator==(const ClassCounts&) const = default;
};

// Plain undirected graph on nodes 0..node_count-1; edges unique with a < b.
struct SimpleGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
};

SimpleGraph grid_graph(const GridSpec& spec);

}  // namespace gridcycles

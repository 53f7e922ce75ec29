#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridcycles/grid.hpp"

namespace gridcycles::oracle {

// Exhaustive depth-first enumeration of Hamiltonian cycles.  Each undirected
// cycle is produced exactly once: the walk is anchored at `anchor` and the
// first step must carry a smaller node id than the returning step (on a grid
// with the default anchor that is the top-left node's right-going edge).
// Practical up to roughly 40 nodes.
std::uint64_t for_each_hamiltonian_cycle(
    const SimpleGraph& graph, const std::function<void(std::span<const int>)>& fn,
    int anchor = 0);

std::vector<Cycle> brute_cycles(const GridSpec& spec, int anchor = 0);

struct CanonicalCycle {
  Cycle cycle;
  std::vector<GridEdge> canonical_form;  // minimum over the eight images
};

std::vector<GridEdge> canonical_form(const Cycle& cycle);

// Buckets a full enumeration into isomorphism classes by exact stabilizer.
// Cross-checks orbit sizes against stabilizer orders along the way.
ClassCounts classify(const std::vector<Cycle>& cycles);

}  // namespace gridcycles::oracle

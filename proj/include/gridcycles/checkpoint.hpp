#pragma once

#include <filesystem>

#include "gridcycles/transfer.hpp"

namespace gridcycles::transfer {

// Frontier checkpoint, a line-oriented text format:
//
//   HCFRONTIER v1 n=<n> column=<i> mode=<U|R>
//   <state> <decimal count>
//   ...
//
// Entries are written sorted by state with LF endings, so equal frontiers
// produce identical files.  Loading validates the header, the bracket balance
// of every state and the positivity of every count; violations raise
// checkpoint_error naming the first bad line.
void save_frontier(const std::filesystem::path& path, const Frontier& frontier);
Frontier load_frontier(const std::filesystem::path& path);

}  // namespace gridcycles::transfer

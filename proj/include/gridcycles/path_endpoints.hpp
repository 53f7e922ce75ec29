#pragma once

#include <cassert>
#include <utility>
#include <vector>

namespace gridcycles {

// Tracks the partial paths of an edge set under construction.  Every node
// carries a destination: for a path endpoint it names the opposite endpoint,
// for an untouched node it names the node itself, and for an interior node it
// holds stale history that is never consulted.  Linking two endpoints only
// rewrites the two cells of the merged path's new ends, so one saved pair per
// link suffices to undo it exactly (links must be undone in LIFO order).
class PathEndpoints {
 public:
  PathEndpoints() = default;
  explicit PathEndpoints(int count) { reset(count); }

  void reset(int count) {
    dest_.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) dest_[static_cast<std::size_t>(i)] = i;
    saved_.clear();
  }

  // Declares a pre-existing path with endpoints a and b.  Initialization only.
  void set_pair(int a, int b) {
    assert(a != b);
    dest_[static_cast<std::size_t>(a)] = b;
    dest_[static_cast<std::size_t>(b)] = a;
  }

  int partner(int node) const { return dest_[static_cast<std::size_t>(node)]; }

  // True when a and b are the two ends of one path, so joining them would
  // close a loop.
  bool would_close(int a, int b) const {
    return dest_[static_cast<std::size_t>(a)] == b;
  }

  // Joins the structures at a and b.  Callers reject the closing case first.
  void link(int a, int b) {
    assert(!would_close(a, b));
    const int r = dest_[static_cast<std::size_t>(a)];
    const int s = dest_[static_cast<std::size_t>(b)];
    saved_.emplace_back(r, s);
    dest_[static_cast<std::size_t>(r)] = s;
    dest_[static_cast<std::size_t>(s)] = r;
  }

  // Reverses the most recent link(a, b); arguments must match that call.
  void unlink(int a, int b) {
    assert(!saved_.empty());
    const auto [r, s] = saved_.back();
    saved_.pop_back();
    dest_[static_cast<std::size_t>(r)] = a;
    dest_[static_cast<std::size_t>(s)] = b;
  }

 private:
  std::vector<int> dest_;
  std::vector<std::pair<int, int>> saved_;
};

}  // namespace gridcycles

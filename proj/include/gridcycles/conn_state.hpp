#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gridcycles/errors.hpp"

namespace gridcycles::transfer {

// Connectivity state at one column boundary of a grid with `height` rows.
// One character per row: '.' no horizontal edge crosses here, '(' an edge
// paired with a lower one, ')' an edge paired with an upper one.  Paths never
// cross, so the pairing is exactly bracket matching and the string doubles as
// the checkpoint wire form.
class ConnState {
 public:
  ConnState() = default;

  // Validates the alphabet and bracket balance and requires at least one
  // pair; throws invariant_violation_error otherwise.
  static ConnState parse(std::string_view code);

  // Pairless pseudo-state used as the generation seed left of column one.
  static ConnState all_empty(int height);

  // Starting state of the composition (parts >= 2 summing to the height):
  // each part k becomes '(' , k-2 dots, ')'.
  static ConnState from_composition(const std::vector<int>& parts);

  const std::string& code() const { return code_; }
  int height() const { return static_cast<int>(code_.size()); }
  bool occupied(int row) const { return code_[static_cast<std::size_t>(row)] != '.'; }
  int pair_count() const;

  // partner[row] is the paired row, or -1 where no edge crosses.
  std::vector<int> partner_map() const;

  // Fixed by reflection across the horizontal axis (row reversal swaps the
  // bracket roles).
  bool palindromic() const;

  bool is_single_pair() const { return pair_count() == 1; }

  // Shape produced by a leftmost column: disjoint blocks, never nested.
  bool is_starting_shape() const;
  std::vector<int> composition() const;  // requires is_starting_shape

  bool operator==(const ConnState&) const = default;
  auto operator<=>(const ConnState&) const = default;

 private:
  explicit ConnState(std::string code) : code_(std::move(code)) {}

  std::string code_;
};

// Every valid state of the given height (at least one pair), in
// lexicographic order of the encoding alphabet per slot.
void for_each_state(int height, const std::function<void(const ConnState&)>& fn);

}  // namespace gridcycles::transfer

template <>
struct std::hash<gridcycles::transfer::ConnState> {
  std::size_t operator()(const gridcycles::transfer::ConnState& s) const {
    return std::hash<std::string>{}(s.code());
  }
};

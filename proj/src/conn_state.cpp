#include "gridcycles/conn_state.hpp"

#include <algorithm>

namespace gridcycles::transfer {

namespace {

void check_code(std::string_view code, bool allow_pairless) {
  int depth = 0;
  int pairs = 0;
  for (char ch : code) {
    switch (ch) {
      case '.':
        break;
      case '(':
        ++depth;
        break;
      case ')':
        if (--depth < 0)
          throw invariant_violation_error("unmatched ')' in state " + std::string(code));
        ++pairs;
        break;
      default:
        throw invariant_violation_error("bad character in state " + std::string(code));
    }
  }
  if (depth != 0)
    throw invariant_violation_error("unmatched '(' in state " + std::string(code));
  if (pairs == 0 && !allow_pairless)
    throw invariant_violation_error("state without any pair: " + std::string(code));
}

}  // namespace

ConnState ConnState::parse(std::string_view code) {
  check_code(code, false);
  return ConnState(std::string(code));
}

ConnState ConnState::all_empty(int height) {
  if (height < 1) throw invariant_violation_error("state height must be positive");
  return ConnState(std::string(static_cast<std::size_t>(height), '.'));
}

ConnState ConnState::from_composition(const std::vector<int>& parts) {
  std::string code;
  for (int part : parts) {
    if (part < 2) throw invariant_violation_error("composition part below 2");
    code += '(';
    code.append(static_cast<std::size_t>(part - 2), '.');
    code += ')';
  }
  check_code(code, false);
  return ConnState(std::move(code));
}

int ConnState::pair_count() const {
  return static_cast<int>(std::count(code_.begin(), code_.end(), '('));
}

std::vector<int> ConnState::partner_map() const {
  std::vector<int> partner(code_.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < height(); ++i) {
    const char ch = code_[static_cast<std::size_t>(i)];
    if (ch == '(') {
      stack.push_back(i);
    } else if (ch == ')') {
      const int open = stack.back();
      stack.pop_back();
      partner[static_cast<std::size_t>(open)] = i;
      partner[static_cast<std::size_t>(i)] = open;
    }
  }
  return partner;
}

bool ConnState::palindromic() const {
  const int h = height();
  for (int i = 0; i < h; ++i) {
    const char a = code_[static_cast<std::size_t>(i)];
    const char b = code_[static_cast<std::size_t>(h - 1 - i)];
    const char mirrored = b == '(' ? ')' : b == ')' ? '(' : '.';
    if (a != mirrored) return false;
  }
  return true;
}

bool ConnState::is_starting_shape() const {
  int depth = 0;
  for (char ch : code_) {
    if (ch == '(') {
      if (++depth > 1) return false;
    } else if (ch == ')') {
      --depth;
    } else if (depth == 0) {
      return false;  // gap between blocks never happens in a leftmost column
    }
  }
  return pair_count() > 0;
}

std::vector<int> ConnState::composition() const {
  if (!is_starting_shape())
    throw invalid_operation_error("state is not a starting state: " + code_);
  std::vector<int> parts;
  int open = -1;
  for (int i = 0; i < height(); ++i) {
    const char ch = code_[static_cast<std::size_t>(i)];
    if (ch == '(')
      open = i;
    else if (ch == ')')
      parts.push_back(i - open + 1);
  }
  return parts;
}

void for_each_state(int height,
                    const std::function<void(const ConnState&)>& fn) {
  std::string buf(static_cast<std::size_t>(height), '.');
  // depth-first over slots; emit when balanced with at least one pair
  auto rec = [&](auto&& self, int pos, int depth, int pairs) -> void {
    if (pos == height) {
      if (depth == 0 && pairs > 0) fn(ConnState::parse(buf));
      return;
    }
    const int remaining = height - pos;
    if (depth > remaining) return;
    buf[static_cast<std::size_t>(pos)] = '.';
    self(self, pos + 1, depth, pairs);
    buf[static_cast<std::size_t>(pos)] = '(';
    self(self, pos + 1, depth + 1, pairs);
    if (depth > 0) {
      buf[static_cast<std::size_t>(pos)] = ')';
      self(self, pos + 1, depth - 1, pairs + 1);
    }
    buf[static_cast<std::size_t>(pos)] = '.';
  };
  rec(rec, 0, 0, 0);
}

}  // namespace gridcycles::transfer

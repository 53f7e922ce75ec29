#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridcycles/conn_state.hpp"
#include "gridcycles/errors.hpp"

using gridcycles::invalid_operation_error;
using gridcycles::invariant_violation_error;
using gridcycles::transfer::ConnState;
using gridcycles::transfer::for_each_state;

TEST_CASE("parse exposes pairing structure") {
  const ConnState s = ConnState::parse("(..)");
  CHECK(s.code() == "(..)");
  CHECK(s.height() == 4);
  CHECK(s.occupied(0));
  CHECK_FALSE(s.occupied(1));
  CHECK_FALSE(s.occupied(2));
  CHECK(s.occupied(3));
  CHECK(s.pair_count() == 1);
  CHECK(s.is_single_pair());
  CHECK(s.partner_map() == std::vector<int>{3, -1, -1, 0});

  const ConnState nested = ConnState::parse("(())");
  CHECK(nested.pair_count() == 2);
  CHECK_FALSE(nested.is_single_pair());
  CHECK(nested.partner_map() == std::vector<int>{3, 2, 1, 0});

  CHECK(ConnState::parse("()()").partner_map() == std::vector<int>{1, 0, 3, 2});
}

TEST_CASE("parse rejects malformed codes") {
  CHECK_THROWS_AS(ConnState::parse("("), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse("())("), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse(")("), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse("(a)"), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse("...."), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse(""), invariant_violation_error);
}

TEST_CASE("all_empty is the pairless seed") {
  const ConnState e = ConnState::all_empty(6);
  CHECK(e.height() == 6);
  CHECK(e.pair_count() == 0);
  for (int row = 0; row < 6; ++row) CHECK_FALSE(e.occupied(row));
}

TEST_CASE("palindromic means fixed under row reversal with bracket swap") {
  CHECK(ConnState::parse("(..)").palindromic());
  CHECK(ConnState::parse("(())").palindromic());
  CHECK(ConnState::parse("()()").palindromic());
  CHECK(ConnState::parse(".().").palindromic());
  CHECK(ConnState::parse("(.)(.)").palindromic());
  CHECK(ConnState::parse("(....)").palindromic());
  CHECK_FALSE(ConnState::parse("(())()").palindromic());
  CHECK_FALSE(ConnState::parse("()(..)").palindromic());
  CHECK_FALSE(ConnState::parse("()..").palindromic());
}

TEST_CASE("compositions build starting shapes and read back") {
  CHECK(ConnState::from_composition({4}).code() == "(..)");
  CHECK(ConnState::from_composition({2, 2}).code() == "()()");
  CHECK(ConnState::from_composition({2, 4}).code() == "()(..)");
  CHECK(ConnState::from_composition({3, 3}).code() == "(.)(.)");

  const std::vector<int> parts{2, 3, 3, 2};
  CHECK(ConnState::from_composition(parts).composition() == parts);

  CHECK(ConnState::from_composition({2, 2}).is_starting_shape());
  CHECK(ConnState::parse("(..)").is_starting_shape());
  CHECK_FALSE(ConnState::parse("(())").is_starting_shape());
  CHECK_FALSE(ConnState::parse(".().").is_starting_shape());
  CHECK_THROWS_AS(ConnState::from_composition({1, 3}), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::from_composition({}), invariant_violation_error);
  CHECK_THROWS_AS(ConnState::parse("(())").composition(), invalid_operation_error);
}

TEST_CASE("for_each_state enumerates exactly the valid states") {
  std::vector<std::string> h2;
  for_each_state(2, [&](const ConnState& s) { h2.push_back(s.code()); });
  CHECK(h2 == std::vector<std::string>{"()"});

  std::set<std::string> h4;
  for_each_state(4, [&](const ConnState& s) {
    CHECK(s.height() == 4);
    CHECK(s.pair_count() >= 1);
    CHECK(h4.insert(s.code()).second);  // no duplicates
  });
  CHECK(h4 == std::set<std::string>{"()..", "(.).", "(..)", ".().", ".(.)",
                                    "..()", "()()", "(())"});

  std::size_t h6 = 0;
  for_each_state(6, [&](const ConnState&) { ++h6; });
  CHECK(h6 == 50);
}

TEST_CASE("states hash and compare as values") {
  std::unordered_set<ConnState> seen;
  seen.insert(ConnState::parse("(..)"));
  seen.insert(ConnState::parse("()()"));
  seen.insert(ConnState::parse("(..)"));
  CHECK(seen.size() == 2);
  CHECK(ConnState::parse("(..)") == ConnState::parse("(..)"));
  CHECK(ConnState::parse("(..)") != ConnState::parse("(.)."));
}

#include "gridcycles/checkpoint.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace gridcycles::transfer {

namespace {

constexpr const char* kMagic = "HCFRONTIER";
constexpr const char* kVersion = "v1";

[[noreturn]] void bad(const std::string& what, int line) {
  throw checkpoint_error(what + " (line " + std::to_string(line) + ")", line);
}

// "key=value" with an integer payload; anything else is malformed.
int parse_field(const std::string& token, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) bad("expected " + key + "=<int>", line);
  const std::string value = token.substr(prefix.size());
  if (value.empty() ||
      !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
    bad("bad integer in " + key, line);
  return std::stoi(value);
}

}  // namespace

void save_frontier(const std::filesystem::path& path, const Frontier& frontier) {
  const int height = frontier.height();
  if (height == 0 || height % 2 != 0)
    throw invalid_operation_error("refusing to checkpoint an empty frontier");
  std::vector<const std::pair<const std::string, BigCount>*> rows;
  rows.reserve(frontier.entries.size());
  for (const auto& entry : frontier.entries) rows.push_back(&entry);
  std::sort(rows.begin(), rows.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  std::ofstream out(path);
  if (!out) throw error("cannot write checkpoint: " + path.string());
  out << kMagic << ' ' << kVersion << " n=" << height / 2
      << " column=" << frontier.column << " mode="
      << (frontier.mode == Mode::reflective_h ? 'R' : 'U') << '\n';
  for (const auto* row : rows)
    out << row->first << ' ' << to_decimal(row->second) << '\n';
  out.flush();
  if (!out) throw error("write failure on checkpoint: " + path.string());
}

Frontier load_frontier(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw checkpoint_error("cannot open checkpoint: " + path.string());
  std::string line;
  if (!std::getline(in, line)) bad("missing header", 1);
  std::istringstream header(line);
  std::string magic, version, n_field, column_field, mode_field;
  header >> magic >> version >> n_field >> column_field >> mode_field;
  if (magic != kMagic || version != kVersion) bad("unrecognized header", 1);
  std::string trailing;
  if (header >> trailing) bad("trailing junk in header", 1);
  const int n = parse_field(n_field, "n", 1);
  const int column = parse_field(column_field, "column", 1);
  if (n < 1) bad("n must be positive", 1);
  if (column < 1 || column > 2 * n - 1) bad("column outside the run", 1);
  Frontier frontier;
  frontier.column = column;
  if (mode_field == "mode=U")
    frontier.mode = Mode::unrestricted;
  else if (mode_field == "mode=R")
    frontier.mode = Mode::reflective_h;
  else
    bad("mode must be U or R", 1);

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) bad("blank entry line", line_no);
    const std::size_t space = line.find(' ');
    if (space == std::string::npos) bad("entry needs '<state> <count>'", line_no);
    const std::string code = line.substr(0, space);
    const std::string digits = line.substr(space + 1);
    if (static_cast<int>(code.size()) != 2 * n) bad("state height != 2n", line_no);
    ConnState state;
    try {
      state = ConnState::parse(code);
    } catch (const invariant_violation_error& e) {
      bad(e.what(), line_no);
    }
    if (frontier.mode == Mode::reflective_h && !state.palindromic())
      bad("reflective frontier holds an asymmetric state", line_no);
    BigCount count;
    try {
      count = parse_decimal(digits);
    } catch (const error& e) {
      bad(e.what(), line_no);
    }
    if (count <= 0) bad("count must be positive", line_no);
    if (!frontier.entries.emplace(code, std::move(count)).second)
      bad("duplicate state", line_no);
  }
  if (frontier.entries.empty()) bad("checkpoint holds no entries", line_no + 1);
  return frontier;
}

}  // namespace gridcycles::transfer

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridcycles/bigcount.hpp"
#include "gridcycles/grid.hpp"
#include "gridcycles/transfer.hpp"

namespace gridcycles::report {

enum class Format { plain, json, csv };

Format parse_format(const std::string& name);

// Renderers return the full document including the trailing newline.  JSON
// renders large integers as decimal strings so consumers keep exact values.

struct CountReport {
  int n = 1;
  std::vector<std::pair<char, BigCount>> values;  // in requested order
  bool checked = false;
};
std::string render(const CountReport& r, Format format);

struct ClassesReport {
  int n = 1;
  SymmetryCounts counts;
  ClassCounts classes;
  bool with_oeis = false;
};
std::string render(const ClassesReport& r, Format format);

struct CensusReport {
  int n = 1;
  transfer::Mode mode = transfer::Mode::unrestricted;
  transfer::Census census;
};
std::string render(const CensusReport& r, Format format);

struct FromStartReport {
  int n = 1;
  std::vector<transfer::StartCount> rows;  // descending by count
};
std::string render(const FromStartReport& r, Format format);

struct RectReport {
  int width = 1;
  int height = 2;
  BigCount count;
};
std::string render(const RectReport& r, Format format);

}  // namespace gridcycles::report

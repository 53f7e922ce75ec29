#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "gridcycles/errors.hpp"

namespace gridcycles {

// Cycle counts outgrow 64 bits quickly (the 12x12 count already needs 61
// bits, the 20x20 count more than 190), so every counter in the pipeline is
// an arbitrary-precision integer from the start.
using BigCount = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigCount& value) { return value.get_str(); }

// Strict nonnegative decimal parse; rejects signs, blanks and leading junk.
inline BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw error("empty count");
  for (char ch : text)
    if (ch < '0' || ch > '9') throw error("bad digit in count: " + std::string(text));
  return BigCount(std::string(text), 10);
}

}  // namespace gridcycles

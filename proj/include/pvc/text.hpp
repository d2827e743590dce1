#pragma once

#include <cstdio>
#include <string>

namespace pvc {

// Shortest round-trippable-enough decimal form, used by every text writer so
// serialized numbers are byte-stable for a given build.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace pvc

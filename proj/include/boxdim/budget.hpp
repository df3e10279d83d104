#pragma once

#include <cstdint>

namespace boxdim {

// Limits for the exhaustive oracles. max_candidates counts the unit of work
// of each operation (orders scanned, candidate graphs tested, linear
// extensions built, search nodes). time_hint_seconds, when positive, aborts
// long scans on wall-clock time.
struct OracleBudget {
  int max_n = 6;
  std::uint64_t max_candidates = 50'000'000;
  double time_hint_seconds = 0.0;
};

}  // namespace boxdim

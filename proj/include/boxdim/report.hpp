#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boxdim/circular.hpp"
#include "boxdim/coloring.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/interval.hpp"

namespace boxdim {

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

struct ReportInput {
  std::string format;
  std::string hash;  // fnv1a64 of the canonical graph6 encoding
  int n = 0;
  int m = 0;
};

// The JSON report emitted by the repr pipeline. Keys of `bounds` come from
// the documented enumeration: wcol2_upper, wcolstar2_upper, col2_upper,
// "2c", "3c", plus oracle values when requested. total_ms is emitted only
// on request so that reports stay byte-deterministic by default.
struct Report {
  ReportInput input;
  std::string mode;  // "interval" | "circular"
  std::uint64_t seed = 0;
  std::vector<int> order;
  VertexColoring coloring;
  std::vector<IntervalSystem> interval_systems;
  std::vector<CircularSystem> circular_systems;
  bool verified = false;
  std::map<std::string, long long> bounds;
  std::optional<double> total_ms;
};

nlohmann::json to_json(const IntervalSystem& sys);
nlohmann::json to_json(const CircularSystem& sys);
nlohmann::json to_json(const Report& report);

}  // namespace boxdim

#include "boxdim/report.hpp"

#include <cstdio>

namespace boxdim {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json to_json(const IntervalSystem& sys) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : sys.intervals) arr.push_back({iv.lo, iv.hi});
  return arr;
}

nlohmann::json to_json(const CircularSystem& sys) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& arc : sys.arcs) {
    if (arc.kind == CircularArc::Kind::Interval)
      arr.push_back({{"type", "interval"}, {"lo", arc.a}, {"hi", arc.b}});
    else
      arr.push_back({{"type", "cointerval"}, {"j", arc.a}, {"k", arc.b}});
  }
  return arr;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["input"] = {{"format", report.input.format},
                {"hash", report.input.hash},
                {"n", report.input.n},
                {"m", report.input.m}};
  j["mode"] = report.mode;
  j["seed"] = report.seed;
  j["order"] = report.order;
  j["coloring"] = {{"c", report.coloring.num_colors},
                   {"colors", report.coloring.color}};
  nlohmann::json systems = nlohmann::json::array();
  if (report.mode == "interval")
    for (const auto& sys : report.interval_systems)
      systems.push_back(to_json(sys));
  else
    for (const auto& sys : report.circular_systems)
      systems.push_back(to_json(sys));
  j["systems"] = systems;
  j["verified"] = report.verified;
  j["bounds"] = report.bounds;
  if (report.total_ms) j["timing"] = {{"total_ms", *report.total_ms}};
  return j;
}

}  // namespace boxdim

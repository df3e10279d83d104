#include "boxdim/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxdim {

namespace detail {

std::pair<IntervalSystem, IntervalSystem> interval_pair_for_class(
    const Graph& g, const std::vector<int>& class_sorted) {
  const int n = g.n();
  const int l = static_cast<int>(class_sorted.size());
  IntervalSystem fwd, rev;
  fwd.intervals.assign(n, {n, n});
  rev.intervals.assign(n, {n, n});
  std::vector<int> index(n, 0);  // 1-based class index, 0 = not in class
  for (int j = 0; j < l; ++j) {
    const int v = class_sorted[j];
    index[v] = j + 1;
    fwd.intervals[v] = {j + 1, j + 1};
    rev.intervals[v] = {l - j, l - j};
  }
  // When the class is all of V (possible only for edgeless graphs) this
  // loop is empty and the point-{n} fallback never applies.
  for (int u = 0; u < n; ++u) {
    if (index[u] != 0) continue;
    int lo = 0, hi = 0;  // least / greatest adjacent class index
    for (int j = 0; j < l; ++j)
      if (g.has_edge(u, class_sorted[j])) {
        if (lo == 0) lo = j + 1;
        hi = j + 1;
      }
    if (lo != 0) {
      fwd.intervals[u] = {lo, n};
      rev.intervals[u] = {l - hi + 1, n};
    }
  }
  return {std::move(fwd), std::move(rev)};
}

}  // namespace detail

namespace {

std::vector<std::vector<int>> color_classes(const ColoringCertificate& cert) {
  std::vector<std::vector<int>> classes(cert.coloring.num_colors);
  // Walk the order so each class comes out sorted by position.
  for (int p = 0; p < cert.order.n(); ++p) {
    const int v = cert.order.vertex_at(p);
    classes[cert.coloring.color[v] - 1].push_back(v);
  }
  return classes;
}

}  // namespace

std::vector<IntervalSystem> build_interval_systems(
    const Graph& g, const ColoringCertificate& cert) {
  if (cert.mode != ReachMode::Weak)
    throw std::invalid_argument("interval construction needs a weak certificate");
  const auto check = validate_certificate(g, cert);
  if (!check.ok)
    throw std::invalid_argument(
        "certificate invalid: vertices " + std::to_string(check.u) + " and " +
        std::to_string(check.v) + " share a color but are weakly 2-reachable");

  const int c = cert.coloring.num_colors;
  std::vector<IntervalSystem> out(2 * c);
  const auto classes = color_classes(cert);
  for (int i = 0; i < c; ++i) {
    auto pair = detail::interval_pair_for_class(g, classes[i]);
    out[i] = std::move(pair.first);
    out[c + i] = std::move(pair.second);
  }
  if (!verify_representation(g, out).ok)
    throw std::logic_error("interval construction failed to reproduce the graph");
  return out;
}

Graph interval_intersection_graph(const std::vector<IntervalSystem>& systems,
                                  int n) {
  if (n < 0) n = systems.empty() ? 0 : static_cast<int>(systems[0].intervals.size());
  for (const auto& sys : systems) {
    if (static_cast<int>(sys.intervals.size()) != n)
      throw std::invalid_argument("interval systems disagree on vertex count");
    for (const auto& iv : sys.intervals)
      if (iv.lo < 1 || iv.lo > iv.hi || iv.hi > n)
        throw std::invalid_argument("interval endpoints outside [1, n]");
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool all = true;
      for (const auto& sys : systems) {
        const auto& a = sys.intervals[u];
        const auto& b = sys.intervals[v];
        if (a.lo > b.hi || b.lo > a.hi) {
          all = false;
          break;
        }
      }
      if (all) g.add_edge(u, v);
    }
  return g;
}

RepresentationCheck verify_representation(
    const Graph& g, const std::vector<IntervalSystem>& systems) {
  const Graph h = interval_intersection_graph(systems, g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v) && !h.has_edge(u, v)) return {false, true, u, v};
      if (!g.has_edge(u, v) && h.has_edge(u, v)) return {false, false, u, v};
    }
  return {true, false, -1, -1};
}

}  // namespace boxdim

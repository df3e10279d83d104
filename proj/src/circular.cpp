#include "boxdim/circular.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxdim {

CircularArc CircularArc::interval(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("interval arc needs lo <= hi");
  return {Kind::Interval, lo, hi};
}

CircularArc CircularArc::co_interval(int j, int k) {
  if (j >= k) throw std::invalid_argument("co-interval needs j < k");
  return {Kind::CoInterval, j, k};
}

bool arcs_intersect(const CircularArc& x, const CircularArc& y) {
  using K = CircularArc::Kind;
  if (x.kind == K::Interval && y.kind == K::Interval)
    return x.a <= y.b && y.a <= x.b;
  if (x.kind == K::CoInterval && y.kind == K::CoInterval)
    return true;  // both contain every point <= min(j, j')
  const CircularArc& iv = x.kind == K::Interval ? x : y;
  const CircularArc& co = x.kind == K::Interval ? y : x;
  return iv.a <= co.a || iv.b >= co.b;
}

CircularSystem as_circular(const IntervalSystem& sys) {
  CircularSystem out;
  out.arcs.reserve(sys.intervals.size());
  for (const auto& iv : sys.intervals)
    out.arcs.push_back(CircularArc::interval(iv.lo, iv.hi));
  return out;
}

namespace {

std::vector<std::vector<int>> color_classes(const ColoringCertificate& cert) {
  std::vector<std::vector<int>> classes(cert.coloring.num_colors);
  for (int p = 0; p < cert.order.n(); ++p) {
    const int v = cert.order.vertex_at(p);
    classes[cert.coloring.color[v] - 1].push_back(v);
  }
  return classes;
}

CircularSystem wrap_system_for_class(const Graph& g,
                                     const std::vector<int>& class_sorted) {
  const int n = g.n();
  const int l = static_cast<int>(class_sorted.size());
  CircularSystem sys;
  sys.arcs.assign(n, CircularArc::interval(n, n));
  std::vector<bool> in_class(n, false);
  for (int j = 0; j < l; ++j) {
    const int v = class_sorted[j];
    in_class[v] = true;
    sys.arcs[v] = CircularArc::interval(j + 1, j + 1);
  }
  for (int u = 0; u < n; ++u) {
    if (in_class[u]) continue;
    int first = 0, second = 0;  // two smallest adjacent class indices
    for (int j = 0; j < l && second == 0; ++j)
      if (g.has_edge(u, class_sorted[j])) {
        if (first == 0)
          first = j + 1;
        else
          second = j + 1;
      }
    if (first == 0) continue;  // stays at the point {n}
    sys.arcs[u] = second == 0 ? CircularArc::interval(first, n)
                              : CircularArc::co_interval(first, second);
  }
  return sys;
}

}  // namespace

std::vector<CircularSystem> build_circular_systems(
    const Graph& g, const ColoringCertificate& cert) {
  if (cert.mode != ReachMode::Strong)
    throw std::invalid_argument("circular construction needs a strong certificate");
  const auto check = validate_certificate(g, cert);
  if (!check.ok)
    throw std::invalid_argument(
        "certificate invalid: vertices " + std::to_string(check.u) + " and " +
        std::to_string(check.v) + " share a color but are strongly 2-reachable");

  const int c = cert.coloring.num_colors;
  std::vector<CircularSystem> out(3 * c);
  const auto classes = color_classes(cert);
  for (int i = 0; i < c; ++i) {
    auto pair = detail::interval_pair_for_class(g, classes[i]);
    out[i] = as_circular(pair.first);
    out[c + i] = as_circular(pair.second);
    out[2 * c + i] = wrap_system_for_class(g, classes[i]);
  }
  if (!verify_circular_representation(g, out).ok)
    throw std::logic_error("circular construction failed to reproduce the graph");
  return out;
}

Graph circular_intersection_graph(const std::vector<CircularSystem>& systems,
                                  int n) {
  if (n < 0) n = systems.empty() ? 0 : static_cast<int>(systems[0].arcs.size());
  for (const auto& sys : systems) {
    if (static_cast<int>(sys.arcs.size()) != n)
      throw std::invalid_argument("circular systems disagree on vertex count");
    for (const auto& arc : sys.arcs) {
      if (arc.kind == CircularArc::Kind::Interval) {
        if (arc.a < 1 || arc.a > arc.b || arc.b > n)
          throw std::invalid_argument("arc endpoints outside [1, n]");
      } else if (arc.a < 1 || arc.a >= arc.b || arc.b > n) {
        throw std::invalid_argument("co-interval endpoints outside [1, n]");
      }
    }
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool all = true;
      for (const auto& sys : systems)
        if (!arcs_intersect(sys.arcs[u], sys.arcs[v])) {
          all = false;
          break;
        }
      if (all) g.add_edge(u, v);
    }
  return g;
}

RepresentationCheck verify_circular_representation(
    const Graph& g, const std::vector<CircularSystem>& systems) {
  const Graph h = circular_intersection_graph(systems, g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v) && !h.has_edge(u, v)) return {false, true, u, v};
      if (!g.has_edge(u, v) && h.has_edge(u, v)) return {false, false, u, v};
    }
  return {true, false, -1, -1};
}

CircleModel circular_model_complete_minus_pm(int m) {
  if (m < 2) throw std::invalid_argument("circle model needs m >= 2");
  CircleModel model;
  model.points = 2 * m;
  for (int i = 0; i < 2 * m; ++i) model.arcs.push_back({i, m});

  const auto covers = [&](const CircleArc& arc, int pos) {
    const int rel = ((pos - arc.start) % model.points + model.points) %
                    model.points;
    return rel < arc.length;
  };
  model.induced = Graph(2 * m);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j)
      for (int t = 0; t < model.points; ++t)
        if (covers(model.arcs[i], t) && covers(model.arcs[j], t)) {
          model.induced.add_edge(i, j);
          break;
        }

  // Circle pairing (i, i+m) onto the generator pairing (2i, 2i+1).
  model.pairing_relabel.assign(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    model.pairing_relabel[i] = 2 * i;
    model.pairing_relabel[i + m] = 2 * i + 1;
  }
  return model;
}

}  // namespace boxdim

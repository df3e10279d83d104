#include "boxdim/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "boxdim/errors.hpp"
#include "boxdim/oracle.hpp"

namespace boxdim {

Graph conflict_graph(const Graph& g, const LinearOrder& pi, ReachMode mode) {
  const int n = g.n();
  if (pi.n() != n) throw std::invalid_argument("order does not match graph");
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);

  for (int z = 0; z < n; ++z) {
    const int pz = pi.position_of(z);
    const auto nb = g.neighbors(z);
    // x < y < z with xz, yz edges: x and y conflict.
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int x = nb[i], y = nb[j];
        if (pi.position_of(x) < pz && pi.position_of(y) < pz) h.add_edge(x, y);
      }
    if (mode == ReachMode::Weak) {
      // u < z < w with uz, zw edges (z in the middle): u and w conflict.
      for (int u : nb)
        for (int w : nb)
          if (pi.position_of(u) < pz && pz < pi.position_of(w))
            h.add_edge(u, w);
    }
  }
  return h;
}

VertexColoring greedy_color_along(const Graph& h, const LinearOrder& pi) {
  const int n = h.n();
  if (pi.n() != n) throw std::invalid_argument("order does not match graph");
  VertexColoring out;
  out.color.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    const int v = pi.vertex_at(p);
    std::vector<bool> used(n + 2, false);
    for (int u = 0; u < n; ++u)
      if (h.has_edge(v, u) && out.color[u] != 0) used[out.color[u]] = true;
    int c = 1;
    while (used[c]) ++c;
    out.color[v] = c;
    out.num_colors = std::max(out.num_colors, c);
  }
  return out;
}

ColoringCertificate make_certificate(const Graph& g, ReachMode mode) {
  const LinearOrder pi = degeneracy_order(g).order;
  const Graph h = conflict_graph(g, pi, mode);
  return {pi, greedy_color_along(h, pi), mode};
}

CertificateCheck validate_certificate(const Graph& g,
                                      const ColoringCertificate& cert) {
  const int n = g.n();
  if (cert.order.n() != n ||
      static_cast<int>(cert.coloring.color.size()) != n)
    throw std::invalid_argument("certificate does not match graph size");
  std::vector<bool> seen(cert.coloring.num_colors + 1, false);
  for (int v = 0; v < n; ++v) {
    const int c = cert.coloring.color[v];
    if (c < 1 || c > cert.coloring.num_colors)
      throw std::invalid_argument("certificate coloring uses a color outside 1..c");
    seen[c] = true;
  }
  for (int c = 1; c <= cert.coloring.num_colors; ++c)
    if (!seen[c])
      throw std::invalid_argument("certificate coloring skips a color");

  for (int v = 0; v < n; ++v)
    for (int u : reachable_set(g, cert.order, cert.mode, 2, v))
      if (u != v && cert.coloring.color[u] == cert.coloring.color[v])
        return {false, u, v};
  return {};
}

WcolStar2 exact_wcol_star2(const Graph& g, const OracleBudget& budget) {
  const int n = g.n();
  if (n > budget.max_n) {
    const auto cert = make_certificate(g, ReachMode::Weak);
    throw BudgetExceeded("wcol*_2: graph larger than budget",
                         cert.coloring.num_colors);
  }
  // Any valid coloring is proper on g, so chi(g) is a floor for the scan.
  const int floor = exact_chromatic_number(g);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(
                            budget.time_hint_seconds > 0
                                ? budget.time_hint_seconds
                                : 1e18);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = INT_MAX;
  LinearOrder witness = LinearOrder::identity(n);
  std::uint64_t scanned = 0;
  do {
    if (++scanned > budget.max_candidates ||
        (budget.time_hint_seconds > 0 && (scanned & 255) == 0 &&
         std::chrono::steady_clock::now() > deadline))
      throw BudgetExceeded("wcol*_2: order scan exceeded budget",
                           best == INT_MAX ? std::optional<int>() : best);
    LinearOrder pi(perm);
    const int chi = exact_chromatic_number(conflict_graph(g, pi, ReachMode::Weak));
    if (chi < best) {
      best = chi;
      witness = pi;
      if (best <= floor) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best == INT_MAX) best = 0;  // n == 0
  return {best, witness};
}

}  // namespace boxdim

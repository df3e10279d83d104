#include "boxdim/order.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "boxdim/errors.hpp"

namespace boxdim {

LinearOrder::LinearOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
  const int n = static_cast<int>(seq_.size());
  pos_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = seq_[p];
    if (v < 0 || v >= n || pos_[v] != -1)
      throw std::invalid_argument("order sequence is not a permutation");
    pos_[v] = p;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder random_order(int n, SplitMix64& rng) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(seq[i], seq[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
  return LinearOrder(std::move(seq));
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<int> seq(n);
  int k = 0;
  // Removals fill positions n-1 down to 0, so earlier neighbors in the
  // returned order are exactly the neighbors still present at removal time.
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    k = std::max(k, deg[best]);
    removed[best] = true;
    seq[n - 1 - step] = best;
    for (int u = 0; u < n; ++u)
      if (!removed[u] && g.has_edge(best, u)) --deg[u];
  }
  return {LinearOrder(std::move(seq)), k};
}

namespace {

// Shortest-path distances from `from` inside the subgraph induced by
// vertices with position >= min_pos, capped at `max_depth`.
std::vector<int> bfs_restricted(const Graph& g, const LinearOrder& pi,
                                int min_pos, int from, int max_depth) {
  const int n = g.n();
  std::vector<int> dist(n, -1);
  if (pi.position_of(from) < min_pos) return dist;
  std::vector<int> frontier{from};
  dist[from] = 0;
  for (int d = 0; d < max_depth && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y = 0; y < n; ++y)
        if (g.has_edge(x, y) && dist[y] == -1 && pi.position_of(y) >= min_pos) {
          dist[y] = d + 1;
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  return dist;
}

void check_reach_args(const Graph& g, const LinearOrder& pi, int r, int v) {
  if (pi.n() != g.n())
    throw std::invalid_argument("order does not match graph size");
  if (r < 0) throw std::invalid_argument("reach radius must be non-negative");
  if (v < 0 || v >= g.n())
    throw std::invalid_argument("reach vertex out of range");
}

}  // namespace

std::vector<int> reachable_set(const Graph& g, const LinearOrder& pi,
                               ReachMode mode, int r, int v) {
  check_reach_args(g, pi, r, v);
  const int n = g.n();
  const int pv = pi.position_of(v);
  std::vector<int> out{v};
  if (r == 0) return out;

  if (mode == ReachMode::Weak) {
    // u is weakly r-reachable from v iff v reaches u within r steps in the
    // subgraph induced by positions >= pos(u).
    for (int u = 0; u < n; ++u) {
      if (u == v || pi.position_of(u) > pv) continue;
      const auto dist = bfs_restricted(g, pi, pi.position_of(u), v, r);
      if (dist[u] != -1) out.push_back(u);
    }
  } else {
    // Internal vertices must sit at positions >= pos(v); only the far end u
    // may dip below. Walk v -> w inside {pos >= pos(v)}, then one edge w-u.
    const auto dist = bfs_restricted(g, pi, pv, v, r - 1);
    for (int u = 0; u < n; ++u) {
      if (u == v || pi.position_of(u) > pv) continue;
      for (int w = 0; w < n; ++w)
        if (g.has_edge(u, w) && dist[w] != -1 && dist[w] <= r - 1) {
          out.push_back(u);
          break;
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_paths(const Graph& g, const LinearOrder& pi, ReachMode mode,
                     int r, std::vector<int>& path, std::vector<bool>& used,
                     std::vector<bool>& reached) {
  const int u = path.back();
  // Test the path ending here: u must be the position-minimum of the whole
  // path; in strong mode the origin must additionally be the minimum of the
  // path without u.
  int min_pos = INT_MAX, min_pos_wo_u = INT_MAX;
  for (std::size_t i = 0; i < path.size(); ++i) {
    min_pos = std::min(min_pos, pi.position_of(path[i]));
    if (i + 1 < path.size())
      min_pos_wo_u = std::min(min_pos_wo_u, pi.position_of(path[i]));
  }
  const bool u_min = pi.position_of(u) <= min_pos;
  const bool origin_min =
      path.size() == 1 || pi.position_of(path.front()) <= min_pos_wo_u;
  if (u_min && (mode == ReachMode::Weak || origin_min)) reached[u] = true;

  if (static_cast<int>(path.size()) - 1 >= r) return;
  for (int w = 0; w < g.n(); ++w) {
    if (used[w] || !g.has_edge(u, w)) continue;
    used[w] = true;
    path.push_back(w);
    enumerate_paths(g, pi, mode, r, path, used, reached);
    path.pop_back();
    used[w] = false;
  }
}

}  // namespace

std::vector<int> reachable_set_by_paths(const Graph& g, const LinearOrder& pi,
                                        ReachMode mode, int r, int v) {
  check_reach_args(g, pi, r, v);
  std::vector<bool> reached(g.n(), false), used(g.n(), false);
  std::vector<int> path{v};
  used[v] = true;
  enumerate_paths(g, pi, mode, r, path, used, reached);
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (reached[u]) out.push_back(u);
  return out;
}

int coloring_number_under_order(const Graph& g, const LinearOrder& pi,
                                ReachMode mode, int r) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v)
    best = std::max(best,
                    static_cast<int>(reachable_set(g, pi, mode, r, v).size()));
  return best;
}

ColoringNumber exact_coloring_number(const Graph& g, ReachMode mode, int r,
                                     const OracleBudget& budget) {
  const int n = g.n();
  if (n > budget.max_n) {
    // Cheap witnessless upper bound before bailing out.
    const int ub =
        coloring_number_under_order(g, degeneracy_order(g).order, mode, r);
    throw BudgetExceeded("exact coloring number: graph larger than budget",
                         ub);
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(
                            budget.time_hint_seconds > 0
                                ? budget.time_hint_seconds
                                : 1e18);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = INT_MAX;
  LinearOrder witness;
  std::uint64_t scanned = 0;
  do {
    if (++scanned > budget.max_candidates ||
        (budget.time_hint_seconds > 0 &&
         (scanned & 1023) == 0 && std::chrono::steady_clock::now() > deadline))
      throw BudgetExceeded("exact coloring number: order scan exceeded budget",
                           best == INT_MAX ? std::optional<int>() : best);
    LinearOrder pi(perm);
    const int val = coloring_number_under_order(g, pi, mode, r);
    if (val < best) {
      best = val;
      witness = pi;
      if (best <= 1) break;  // cannot improve below 1
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best == INT_MAX) {  // n == 0
    best = 0;
    witness = LinearOrder::identity(0);
  }
  return {best, witness};
}

}  // namespace boxdim

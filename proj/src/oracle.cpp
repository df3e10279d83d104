#include "boxdim/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxdim/errors.hpp"

namespace boxdim {
namespace {

using Mask = std::uint32_t;                  // edge-set mask, n <= 8
using Rows = std::array<std::uint32_t, 16>;  // adjacency rows, n <= 16

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

Rows rows_from_graph(const Graph& g) {
  Rows rows{};
  for (auto [u, v] : g.edges()) {
    rows[u] |= 1u << v;
    rows[v] |= 1u << u;
  }
  return rows;
}

Rows rows_from_mask(int n, Mask m) {
  Rows rows{};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (m >> pair_index(i, j) & 1) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
  return rows;
}

Mask mask_from_graph(const Graph& g) {
  Mask m = 0;
  for (auto [u, v] : g.edges()) m |= Mask{1} << pair_index(u, v);
  return m;
}

Graph graph_from_mask(int n, Mask m) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (m >> pair_index(i, j) & 1) g.add_edge(i, j);
  return g;
}

// --------------------------------------------------------------------------
// interval recognition: chordal (simplicial elimination) + AT-free

bool rows_chordal(int n, const Rows& row) {
  std::uint32_t alive = n >= 32 ? ~0u : (1u << n) - 1;
  for (int round = 0; round < n; ++round) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v) {
      if (!(alive >> v & 1)) continue;
      const std::uint32_t nb = row[v] & alive;
      bool simplicial = true;
      for (std::uint32_t rest = nb; rest;) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if ((row[u] & nb) != (nb & ~(1u << u))) {
          simplicial = false;
          break;
        }
      }
      if (simplicial) found = v;
    }
    if (found < 0) return false;
    alive &= ~(1u << found);
  }
  return true;
}

bool rows_connected(const Rows& row, std::uint32_t allowed, int s, int t) {
  if (!((allowed >> s & 1) && (allowed >> t & 1))) return false;
  std::uint32_t vis = 1u << s;
  for (;;) {
    std::uint32_t next = vis;
    for (std::uint32_t rest = vis; rest;) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      next |= row[x] & allowed;
    }
    if (next >> t & 1) return true;
    if (next == vis) return false;
    vis = next;
  }
}

bool rows_has_asteroidal_triple(int n, const Rows& row) {
  const std::uint32_t all = (1u << n) - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (row[u] >> v & 1) continue;
      for (int w = v + 1; w < n; ++w) {
        if ((row[u] >> w & 1) || (row[v] >> w & 1)) continue;
        if (rows_connected(row, all & ~(row[w] | 1u << w), u, v) &&
            rows_connected(row, all & ~(row[v] | 1u << v), u, w) &&
            rows_connected(row, all & ~(row[u] | 1u << u), v, w))
          return true;
      }
    }
  return false;
}

bool rows_interval(int n, const Rows& row) {
  return rows_chordal(n, row) && !rows_has_asteroidal_triple(n, row);
}

// --------------------------------------------------------------------------
// circular-arc recognition: backtracking over circular endpoint orders.
// Token 2v is the start of v's arc, 2v+1 its end; slots are filled left to
// right, so placed tokens have final circular positions. Vertex 0's start is
// pinned to position 0 to quotient out rotations.

struct ArcSearch {
  int n = 0;
  Rows row{};
  std::vector<int> pos;  // token -> position, -1 while unplaced

  static bool in_arc(int p, int s, int e) {
    return s <= e ? (s <= p && p <= e) : (p >= s || p <= e);
  }

  bool consistent(int x) const {
    const int sx = 2 * x, ex = 2 * x + 1;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const int sy = 2 * y, ey = 2 * y + 1;
      const bool adj = row[x] >> y & 1;
      if (pos[sx] >= 0 && pos[ex] >= 0 && pos[sy] >= 0 && pos[ey] >= 0) {
        const bool inter = in_arc(pos[sx], pos[sy], pos[ey]) ||
                           in_arc(pos[sy], pos[sx], pos[ex]);
        if (inter != adj) return false;
      } else if (!adj) {
        // A start inside the other arc already forces an intersection.
        if (pos[sx] >= 0 && pos[sy] >= 0 && pos[ey] >= 0 &&
            in_arc(pos[sx], pos[sy], pos[ey]))
          return false;
        if (pos[sy] >= 0 && pos[sx] >= 0 && pos[ex] >= 0 &&
            in_arc(pos[sy], pos[sx], pos[ex]))
          return false;
      }
    }
    return true;
  }

  bool dfs(int slot) {
    if (slot == 2 * n) return true;
    for (int t = 0; t < 2 * n; ++t) {
      if (pos[t] >= 0) continue;
      pos[t] = slot;
      if (consistent(t >> 1) && dfs(slot + 1)) return true;
      pos[t] = -1;
    }
    return false;
  }
};

bool rows_circular_arc(int n, const Rows& row) {
  if (n <= 1) return true;
  ArcSearch search;
  search.n = n;
  search.row = row;
  search.pos.assign(2 * n, -1);
  search.pos[0] = 0;
  return search.dfs(1);
}

// --------------------------------------------------------------------------
// per-n tables of all labeled interval / circular-arc graphs

constexpr int kTableMaxN = 6;

const std::vector<Mask>& interval_table(int n) {
  static std::array<std::vector<Mask>, kTableMaxN + 1> tables;
  static std::array<bool, kTableMaxN + 1> ready{};
  if (!ready[n]) {
    const Mask top = Mask{1} << (n * (n - 1) / 2);
    for (Mask m = 0; m < top; ++m)
      if (rows_interval(n, rows_from_mask(n, m))) tables[n].push_back(m);
    ready[n] = true;
  }
  return tables[n];
}

constexpr int kArcTableMaxN = 5;

const std::vector<Mask>& circular_arc_table(int n) {
  static std::array<std::vector<Mask>, kArcTableMaxN + 1> tables;
  static std::array<bool, kArcTableMaxN + 1> ready{};
  if (!ready[n]) {
    const Mask top = Mask{1} << (n * (n - 1) / 2);
    for (Mask m = 0; m < top; ++m)
      if (rows_circular_arc(n, rows_from_mask(n, m))) tables[n].push_back(m);
    ready[n] = true;
  }
  return tables[n];
}

// --------------------------------------------------------------------------
// exact minimum cover of the non-edges by candidate supergraph coverage
// masks. A superset-count table over the 2^B subsets of the universe serves
// both as the one-set feasibility oracle and as the maximality filter.

std::vector<std::uint8_t> superset_counts(int bits,
                                          const std::vector<Mask>& masks) {
  std::vector<std::uint8_t> cnt(std::size_t{1} << bits, 0);
  for (Mask m : masks)
    if (cnt[m] < 255) ++cnt[m];
  for (int b = 0; b < bits; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t m = 0; m < (1u << bits); ++m)
      if (!(m & bit)) {
        const unsigned s = cnt[m] + cnt[m | bit];
        cnt[m] = static_cast<std::uint8_t>(s > 255 ? 255 : s);
      }
  }
  return cnt;
}

struct CoverOutcome {
  int value = 0;
  std::vector<int> chosen;  // indices into the kept candidate list
};

// Candidates must jointly cover the universe; coverage masks must be
// pairwise distinct. cnt is the superset-count table over all of them.
CoverOutcome min_cover(int bits, std::uint32_t universe,
                       const std::vector<Mask>& sets,
                       const std::vector<std::uint8_t>& cnt) {
  std::vector<std::vector<int>> covers(bits);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    for (std::uint32_t rest = sets[i]; rest;) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      covers[b].push_back(i);
    }

  std::vector<int> chosen;
  std::function<bool(std::uint32_t, int)> feasible = [&](std::uint32_t rest,
                                                         int k) {
    if (rest == 0) return true;
    if (k <= 0) return false;
    if (cnt[rest] >= 1) {
      for (int i : covers[std::countr_zero(rest)])
        if ((sets[i] & rest) == rest) {
          chosen.push_back(i);
          return true;
        }
      return false;  // dominated-only superset; keep branching below
    }
    if (k == 1) return false;
    int pick = -1;
    for (std::uint32_t r = rest; r;) {
      const int b = std::countr_zero(r);
      r &= r - 1;
      if (pick < 0 || covers[b].size() < covers[pick].size()) pick = b;
    }
    for (int i : covers[pick]) {
      chosen.push_back(i);
      if (feasible(rest & ~sets[i], k - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int k = 1; k <= bits; ++k) {
    chosen.clear();
    if (feasible(universe, k))
      return {static_cast<int>(chosen.size()), chosen};
  }
  throw std::logic_error("cover search: universe not coverable");
}

struct BudgetClock {
  std::chrono::steady_clock::time_point deadline;
  bool armed = false;

  explicit BudgetClock(const OracleBudget& b) {
    if (b.time_hint_seconds > 0) {
      armed = true;
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(b.time_hint_seconds));
    }
  }
  bool expired() const {
    return armed && std::chrono::steady_clock::now() > deadline;
  }
};

// Shared driver for boxicity / circular dimension. `recognize` decides
// membership of a candidate in the factor class.
CoverCertificate exact_cover_dimension(
    const Graph& g, const OracleBudget& budget, const char* what,
    const std::function<bool(int, const Rows&)>& recognize,
    const std::vector<Mask>* full_table) {
  const int n = g.n();
  if (n > budget.max_n)
    throw BudgetExceeded(std::string(what) + ": graph larger than budget");
  if (g.is_complete()) return {0, {}};
  if (recognize(n, rows_from_graph(g))) return {1, {g}};

  std::vector<std::pair<int, int>> nonedges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);
  const int B = static_cast<int>(nonedges.size());
  if (B > 26)
    throw BudgetExceeded(std::string(what) +
                         ": too many non-edges for the cover table");
  const std::uint32_t universe = (1u << B) - 1;
  const Mask gmask = mask_from_graph(g);

  std::vector<Mask> coverage;   // distinct by construction
  std::vector<Mask> candidate;  // parallel: candidate edge masks
  BudgetClock clock(budget);
  std::uint64_t tested = 0;

  if (full_table != nullptr) {
    for (Mask h : *full_table)
      if ((h & gmask) == gmask && h != gmask) {
        std::uint32_t cov = 0;
        for (int b = 0; b < B; ++b) {
          auto [u, v] = nonedges[b];
          if (!(h >> pair_index(u, v) & 1)) cov |= 1u << b;
        }
        if (cov != 0) {
          coverage.push_back(cov);
          candidate.push_back(h);
        }
      }
  } else {
    for (std::uint32_t s = 1; s <= universe; ++s) {
      if (++tested > budget.max_candidates || ((tested & 4095) == 0 && clock.expired()))
        throw BudgetExceeded(std::string(what) + ": candidate scan exceeded budget");
      // s = set of non-edges turned into edges; coverage is the rest
      Mask h = gmask;
      for (std::uint32_t r = s; r;) {
        const int b = std::countr_zero(r);
        r &= r - 1;
        h |= Mask{1} << pair_index(nonedges[b].first, nonedges[b].second);
      }
      if ((universe ^ s) != 0 && recognize(n, rows_from_mask(n, h))) {
        coverage.push_back(universe ^ s);
        candidate.push_back(h);
      }
    }
  }

  const auto cnt = superset_counts(B, coverage);
  std::vector<Mask> kept_cov, kept_cand;
  for (std::size_t i = 0; i < coverage.size(); ++i)
    if (cnt[coverage[i]] == 1) {  // maximal: the only superset is itself
      kept_cov.push_back(coverage[i]);
      kept_cand.push_back(candidate[i]);
    }

  const auto outcome = min_cover(B, universe, kept_cov, cnt);
  CoverCertificate result;
  result.value = outcome.value;
  for (int i : outcome.chosen)
    result.factors.push_back(graph_from_mask(n, kept_cand[i]));
  return result;
}

}  // namespace

bool is_interval_graph(const Graph& g) {
  if (g.n() > 16)
    throw std::invalid_argument("interval recognition supports n <= 16");
  return rows_interval(g.n(), rows_from_graph(g));
}

bool has_interval_vertex_order(const Graph& g) {
  const int n = g.n();
  if (n > 8)
    throw std::invalid_argument("interval order search supports n <= 8");
  if (n <= 2) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool good = true;
    for (int i = 0; i < n && good; ++i)
      for (int k = i + 2; k < n && good; ++k) {
        if (!g.has_edge(perm[i], perm[k])) continue;
        for (int j = i + 1; j < k; ++j)
          if (!g.has_edge(perm[i], perm[j])) {
            good = false;
            break;
          }
      }
    if (good) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_circular_arc_graph(const Graph& g) {
  if (g.n() > 12)
    throw std::invalid_argument("circular-arc recognition supports n <= 12");
  return rows_circular_arc(g.n(), rows_from_graph(g));
}

std::vector<Graph> enumerate_interval_supergraphs(const Graph& g,
                                                  const OracleBudget& budget) {
  const int n = g.n();
  if (n > budget.max_n)
    throw BudgetExceeded("interval supergraphs: graph larger than budget");
  const Mask gmask = mask_from_graph(g);
  std::vector<Mask> found;

  if (n <= kTableMaxN) {
    for (Mask h : interval_table(n))
      if ((h & gmask) == gmask) found.push_back(h);
  } else {
    std::vector<int> nonedge_bit;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) nonedge_bit.push_back(pair_index(u, v));
    const int B = static_cast<int>(nonedge_bit.size());
    BudgetClock clock(budget);
    std::uint64_t tested = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << B); ++s) {
      if (++tested > budget.max_candidates ||
          ((tested & 4095) == 0 && clock.expired()))
        throw BudgetExceeded("interval supergraphs: scan exceeded budget");
      Mask h = gmask;
      for (std::uint64_t r = s; r;) {
        const int b = std::countr_zero(r);
        r &= r - 1;
        h |= Mask{1} << nonedge_bit[b];
      }
      if (rows_interval(n, rows_from_mask(n, h))) found.push_back(h);
    }
    std::sort(found.begin(), found.end());
  }

  std::vector<Graph> out;
  out.reserve(found.size());
  for (Mask h : found) out.push_back(graph_from_mask(n, h));
  return out;
}

CoverCertificate exact_boxicity(const Graph& g, const OracleBudget& budget) {
  const std::vector<Mask>* table =
      g.n() <= kTableMaxN ? &interval_table(g.n()) : nullptr;
  return exact_cover_dimension(g, budget, "boxicity", rows_interval, table);
}

CoverCertificate exact_circular_dimension(const Graph& g,
                                          const OracleBudget& budget) {
  const std::vector<Mask>* table =
      g.n() <= kArcTableMaxN ? &circular_arc_table(g.n()) : nullptr;
  return exact_cover_dimension(g, budget, "circular dimension",
                               rows_circular_arc, table);
}

// --------------------------------------------------------------------------
// chromatic number

namespace {

int max_clique(int n, const Rows& row) {
  int best = 0;
  std::function<void(std::uint32_t, int)> grow = [&](std::uint32_t cand,
                                                     int size) {
    if (size > best) best = size;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      grow(cand & row[v], size + 1);
    }
  };
  grow(n >= 32 ? ~0u : (1u << n) - 1, 0);
  return best;
}

bool colorable_with(int n, const Rows& row, const std::vector<int>& order,
                    int k, std::uint64_t& nodes, std::uint64_t cap) {
  std::vector<int> color(n, 0);
  std::function<bool(int, int)> rec = [&](int i, int max_used) {
    if (i == n) return true;
    if (++nodes > cap)
      throw BudgetExceeded("chromatic number: search exceeded budget");
    const int v = order[i];
    std::uint32_t forbidden = 0;
    for (std::uint32_t rest = row[v]; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (color[u]) forbidden |= 1u << (color[u] - 1);
    }
    const int top = std::min(k, max_used + 1);  // color symmetry breaking
    for (int c = 1; c <= top; ++c) {
      if (forbidden >> (c - 1) & 1) continue;
      color[v] = c;
      if (rec(i + 1, std::max(max_used, c))) return true;
      color[v] = 0;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

int exact_chromatic_number(const Graph& g, const OracleBudget& budget) {
  const int n = g.n();
  if (n > budget.max_n || n > 16)
    throw BudgetExceeded("chromatic number: graph larger than budget");
  if (n == 0) return 0;
  const Rows row = rows_from_graph(g);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(row[a]) > std::popcount(row[b]);
  });

  const int lb = max_clique(n, row);
  int ub = 0;  // greedy along the degree order
  {
    std::vector<int> color(n, 0);
    for (int v : order) {
      std::uint32_t forbidden = 0;
      for (std::uint32_t rest = row[v]; rest;) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (color[u]) forbidden |= 1u << (color[u] - 1);
      }
      int c = 1;
      while (forbidden >> (c - 1) & 1) ++c;
      color[v] = c;
      ub = std::max(ub, c);
    }
  }

  std::uint64_t nodes = 0;
  for (int k = lb; k < ub; ++k)
    if (colorable_with(n, row, order, k, nodes, budget.max_candidates))
      return k;
  return ub;
}

}  // namespace boxdim

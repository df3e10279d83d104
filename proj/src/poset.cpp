#include "boxdim/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

void validate_axioms(int m, const std::vector<std::vector<bool>>& leq) {
  for (int a = 0; a < m; ++a)
    if (!leq[a][a]) throw std::invalid_argument("poset relation not reflexive");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        throw std::invalid_argument("poset relation not antisymmetric");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (leq[a][b])
        for (int c = 0; c < m; ++c)
          if (leq[b][c] && !leq[a][c])
            throw std::invalid_argument("poset relation not transitive");
}

}  // namespace

Poset::Poset(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("poset size must be non-negative");
  leq_.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a) leq_[a][a] = true;
}

Poset Poset::from_leq(std::vector<std::vector<bool>> leq) {
  const int m = static_cast<int>(leq.size());
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("poset relation must be square");
  validate_axioms(m, leq);
  Poset p(m);
  p.leq_ = std::move(leq);
  return p;
}

Poset Poset::from_strict_pairs(int m,
                               const std::vector<std::pair<int, int>>& rel) {
  Poset p(m);
  for (auto [a, b] : rel) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw std::invalid_argument("poset pair out of range");
    if (a == b) throw std::invalid_argument("strict pair a < a");
    p.leq_[a][b] = true;
  }
  // Warshall closure, then re-validate.
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if (p.leq_[a][k])
        for (int b = 0; b < m; ++b)
          if (p.leq_[k][b]) p.leq_[a][b] = true;
  validate_axioms(m, p.leq_);
  return p;
}

Poset Poset::chain(int m) {
  Poset p(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) p.leq_[a][b] = true;
  return p;
}

Poset Poset::standard_example(int k) {
  if (k < 1) throw std::invalid_argument("standard example needs k >= 1");
  Poset p(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) p.leq_[i][k + j] = true;
  return p;
}

Poset Poset::dual() const {
  Poset p(m_);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) p.leq_[a][b] = leq_[b][a];
  return p;
}

bool Poset::is_chain() const {
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (!comparable(a, b)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::incomparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (a != b && !comparable(a, b)) out.emplace_back(a, b);
  return out;
}

Poset adjacency_poset(const Graph& g) {
  const int n = g.n();
  Poset p(2 * n);
  std::vector<std::vector<bool>> leq(2 * n, std::vector<bool>(2 * n, false));
  for (int a = 0; a < 2 * n; ++a) leq[a][a] = true;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (g.has_edge(u, w)) leq[u][n + w] = true;
  return Poset::from_leq(std::move(leq));
}

Graph comparability_graph(const Poset& p) {
  Graph g(p.size());
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (p.comparable(a, b)) g.add_edge(a, b);
  return g;
}

std::vector<std::vector<int>> linear_extensions(const Poset& p,
                                                std::uint64_t cap) {
  const int m = p.size();
  if (m > 20) throw BudgetExceeded("linear extensions: poset too large");
  std::vector<std::uint32_t> preds(m, 0);  // strict predecessors
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.less(a, b)) preds[b] |= 1u << a;

  std::vector<std::vector<int>> out;
  std::vector<int> ext;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t placed) {
    if (static_cast<int>(ext.size()) == m) {
      if (out.size() >= cap)
        throw BudgetExceeded("linear extensions: more than the budget allows");
      out.push_back(ext);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if ((placed >> v & 1) || (preds[v] & ~placed)) continue;
      ext.push_back(v);
      rec(placed | (1u << v));
      ext.pop_back();
    }
  };
  rec(0);
  return out;
}

PosetDimension exact_poset_dimension(const Poset& p,
                                     const OracleBudget& budget) {
  const int m = p.size();
  if (m > budget.max_n)
    throw BudgetExceeded("poset dimension: poset larger than budget");

  const auto pairs = p.incomparable_pairs();
  if (pairs.empty()) {
    // A chain realizes itself.
    std::vector<int> ext(m);
    std::iota(ext.begin(), ext.end(), 0);
    std::sort(ext.begin(), ext.end(),
              [&](int a, int b) { return p.less(a, b); });
    return {1, {ext}};
  }

  const auto exts = linear_extensions(p, budget.max_candidates);
  const int B = static_cast<int>(pairs.size());  // <= m(m-1) <= 56 for m <= 8

  // Pair (a, b) is handled by an extension placing b before a.
  std::vector<std::uint64_t> cover(exts.size(), 0);
  for (std::size_t e = 0; e < exts.size(); ++e) {
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) pos[exts[e][i]] = i;
    for (int b = 0; b < B; ++b)
      if (pos[pairs[b].second] < pos[pairs[b].first]) cover[e] |= 1ull << b;
  }

  // Dedupe identical masks, then drop dominated ones when that is cheap.
  std::vector<int> idx(exts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return cover[a] < cover[b]; });
  std::vector<int> rep;  // representative extension per distinct mask
  for (int i : idx)
    if (rep.empty() || cover[rep.back()] != cover[i]) rep.push_back(i);
  if (rep.size() <= 4000) {
    std::vector<int> maximal;
    for (int i : rep) {
      bool dominated = false;
      for (int j : rep)
        if (i != j && (cover[i] | cover[j]) == cover[j] &&
            cover[i] != cover[j]) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(i);
    }
    rep = std::move(maximal);
  }

  const std::uint64_t universe = B == 64 ? ~0ull : (1ull << B) - 1;
  std::vector<std::vector<int>> covers(B);
  for (std::size_t r = 0; r < rep.size(); ++r)
    for (int b = 0; b < B; ++b)
      if (cover[rep[r]] >> b & 1) covers[b].push_back(static_cast<int>(r));

  std::vector<int> chosen;
  std::function<bool(std::uint64_t, int)> feasible = [&](std::uint64_t rest,
                                                         int k) {
    if (rest == 0) return true;
    if (k == 0) return false;
    int pick = -1;
    for (std::uint64_t r = rest; r;) {
      const int b = std::countr_zero(r);
      r &= r - 1;
      if (pick < 0 || covers[b].size() < covers[pick].size()) pick = b;
    }
    for (int r : covers[pick]) {
      if ((cover[rep[r]] & rest) == 0) continue;
      chosen.push_back(r);
      if (feasible(rest & ~cover[rep[r]], k - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int k = 2;; ++k) {
    chosen.clear();
    if (feasible(universe, k)) break;
    if (k > B) throw std::logic_error("realizer search: pairs not coverable");
  }

  PosetDimension out;
  out.value = static_cast<int>(chosen.size());
  for (int r : chosen) out.realizer.push_back(exts[rep[r]]);
  return out;
}

DimensionAudit audit_dimension_inequalities(const Graph& g,
                                            const OracleBudget& budget) {
  DimensionAudit audit;
  audit.n = g.n();
  audit.complete = true;
  if (g.n() > budget.max_n) {
    audit.complete = false;
    return audit;
  }

  const Poset p = adjacency_poset(g);
  try {
    audit.dim_adjacency_poset =
        exact_poset_dimension(p, {2 * g.n(), budget.max_candidates,
                                  budget.time_hint_seconds})
            .value;
  } catch (const BudgetExceeded&) {
    audit.complete = false;
  }
  try {
    audit.boxicity = exact_boxicity(g, {std::max(7, g.n()),
                                        budget.max_candidates,
                                        budget.time_hint_seconds})
                         .value;
  } catch (const BudgetExceeded&) {
    audit.complete = false;
  }
  try {
    audit.chromatic_number = exact_chromatic_number(g);
  } catch (const BudgetExceeded&) {
    audit.complete = false;
  }
  try {
    audit.boxicity_comparability =
        exact_boxicity(comparability_graph(p),
                       {2 * std::max(4, g.n()), budget.max_candidates,
                        budget.time_hint_seconds})
            .value;
  } catch (const BudgetExceeded&) {
    audit.complete = false;
  }

  if (audit.dim_adjacency_poset && audit.boxicity && audit.chromatic_number) {
    InequalityCheck check;
    check.name = "dim_le_2box_plus_chi_plus_4";
    check.lhs = *audit.dim_adjacency_poset;
    check.rhs = 2ll * *audit.boxicity + *audit.chromatic_number + 4;
    check.pass = check.lhs <= check.rhs;
    audit.checks.push_back(check);
  }
  if (audit.dim_adjacency_poset && audit.boxicity_comparability) {
    InequalityCheck check;
    check.name = "dim_le_2box_comparability";
    check.lhs = *audit.dim_adjacency_poset;
    check.rhs = 2ll * *audit.boxicity_comparability;
    check.pass = check.lhs <= check.rhs;
    audit.checks.push_back(check);
  }
  audit.all_pass = !audit.checks.empty();
  for (const auto& check : audit.checks) audit.all_pass &= check.pass;
  return audit;
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long m = -1;
  std::vector<std::pair<int, int>> rel;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (m < 0) {
      if (!(ls >> m) || m < 0)
        throw FormatError("poset: bad element count line", lineno);
      continue;
    }
    long a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw FormatError("poset: expected pair \"a b\"", lineno);
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw FormatError("poset: element out of range", lineno);
    rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (m < 0) throw FormatError("poset: missing element count line", 0);
  try {
    return Poset::from_strict_pairs(static_cast<int>(m), rel);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("poset: ") + e.what(), 0);
  }
}

}  // namespace boxdim

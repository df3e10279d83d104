#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxdim/budget.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/oracle.hpp"

namespace boxdim {

// Finite poset on elements 0..m-1. The reflexive relation leq is validated
// (reflexive, antisymmetric, transitive) on every construction path.
class Poset {
 public:
  Poset() = default;

  // Antichain of m elements.
  explicit Poset(int m);

  static Poset from_leq(std::vector<std::vector<bool>> leq);
  // Strict pairs a < b; the transitive closure is applied, then validated.
  static Poset from_strict_pairs(int m,
                                 const std::vector<std::pair<int, int>>& rel);

  static Poset chain(int m);
  static Poset antichain(int m) { return Poset(m); }
  // Standard example S_k: minimal a_1..a_k (ids 0..k-1), maximal b_1..b_k
  // (ids k..2k-1), a_i < b_j iff i != j.
  static Poset standard_example(int k);

  int size() const { return m_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool comparable(int a, int b) const { return leq_[a][b] || leq_[b][a]; }

  Poset dual() const;
  bool is_chain() const;
  // Ordered pairs (a, b), a != b, neither a <= b nor b <= a.
  std::vector<std::pair<int, int>> incomparable_pairs() const;

  bool operator==(const Poset& other) const = default;

 private:
  int m_ = 0;
  std::vector<std::vector<bool>> leq_;
};

// Height-2 poset on V u V' (V' = n..2n-1) with u < n+w iff uw is an edge.
Poset adjacency_poset(const Graph& g);

// Edge {a,b} iff a != b and a, b are comparable.
Graph comparability_graph(const Poset& p);

// All linear extensions, lexicographically by element id. Throws
// BudgetExceeded when more than `cap` extensions exist.
std::vector<std::vector<int>> linear_extensions(const Poset& p,
                                                std::uint64_t cap);

struct PosetDimension {
  int value = 0;
  std::vector<std::vector<int>> realizer;  // extensions intersecting to p
};

// Minimum number of linear extensions whose intersection is exactly p:
// every incomparable ordered pair (a, b) must appear reversed in some
// chosen extension. 1 iff p is a chain.
PosetDimension exact_poset_dimension(
    const Poset& p, const OracleBudget& budget = OracleBudget{8, 10'000'000});

struct InequalityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};

struct DimensionAudit {
  int n = 0;
  std::optional<int> dim_adjacency_poset;
  std::optional<int> boxicity;
  std::optional<int> chromatic_number;
  std::optional<int> boxicity_comparability;
  std::vector<InequalityCheck> checks;
  bool complete = false;  // false when some sub-oracle ran out of budget
  bool all_pass = false;
};

// Computes dim(adjacency_poset(g)), box(g), chi(g) and
// box(comparability_graph(adjacency_poset(g))) and reports the dimension
// inequalities dim <= 2 box + chi + 4 and dim <= 2 box(comparability).
// budget.max_n bounds g.n (the poset has 2n elements, the comparability
// graph 2n vertices); a blown sub-budget yields a partial report with
// complete = false instead of throwing.
DimensionAudit audit_dimension_inequalities(
    const Graph& g, const OracleBudget& budget = OracleBudget{4});

// Poset text format: first line "m", then one strict pair "a b" per line.
Poset parse_poset(const std::string& text);

}  // namespace boxdim

#pragma once

#include <vector>

#include "boxdim/budget.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/prng.hpp"

namespace boxdim {

enum class ReachMode { Weak, Strong };

// A linear order on 0..n-1, stored both ways: sequence (position -> vertex)
// and its inverse (vertex -> position).
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<int> sequence);  // must be a permutation

  static LinearOrder identity(int n);

  int n() const { return static_cast<int>(seq_.size()); }
  int vertex_at(int pos) const { return seq_[pos]; }
  int position_of(int v) const { return pos_[v]; }
  const std::vector<int>& sequence() const { return seq_; }

  bool operator==(const LinearOrder& other) const = default;

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

LinearOrder random_order(int n, SplitMix64& rng);

struct DegeneracyOrder {
  LinearOrder order;
  int degeneracy = 0;
};

// Repeated minimum-degree removal (smallest id on ties), removals listed
// from the last position down to the first. Every vertex then has at most
// `degeneracy` neighbors earlier in the order, and no order does better.
DegeneracyOrder degeneracy_order(const Graph& g);

// Vertices u reachable from v by a path of at most r edges on which u is the
// pi-smallest vertex (Weak), additionally with v pi-smallest on the path
// minus u (Strong). Includes v itself. Sorted ascending.
//
// reachable_set runs the layered BFS dynamic program; reachable_set_by_paths
// enumerates all simple paths and is kept as an independent reference.
std::vector<int> reachable_set(const Graph& g, const LinearOrder& pi,
                               ReachMode mode, int r, int v);
std::vector<int> reachable_set_by_paths(const Graph& g, const LinearOrder& pi,
                                        ReachMode mode, int r, int v);

// max over v of |reachable_set(g, pi, mode, r, v)|.
int coloring_number_under_order(const Graph& g, const LinearOrder& pi,
                                ReachMode mode, int r);

struct ColoringNumber {
  int value = 0;
  LinearOrder witness;
};

// Exact wcol_r / col_r by scanning all n! orders lexicographically. The
// witness is the first (hence lexicographically least) optimal order.
ColoringNumber exact_coloring_number(
    const Graph& g, ReachMode mode, int r,
    const OracleBudget& budget = OracleBudget{9, 10'000'000});

}  // namespace boxdim

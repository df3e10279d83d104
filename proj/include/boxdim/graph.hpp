#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxdim/errors.hpp"

namespace boxdim {

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as packed
// row bitsets; construction keeps the relation symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // idempotent; rejects self-loops
  void remove_edge(int u, int v);  // idempotent

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool is_complete() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<bool>> adj_;
};

Graph complement(const Graph& g);

// New graph in which vertex v of g becomes perm[v]; perm must be a
// permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// graph6: header byte 63+n for n <= 62 (126 + three 6-bit bytes for
// 63 <= n <= 258047), then the upper triangle in column-major order packed
// into 6-bit groups, each +63. Zero padding is required.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Edge list: first line "n", then one "u v" pair per line, 0-based.
// Duplicate and reversed pairs are tolerated and deduplicated.
Graph parse_edge_list(const std::string& text);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_edgeless(int n);
Graph make_star(int n);  // n vertices: centre 0 joined to 1..n-1
Graph make_complete_minus_pm(int m);  // K_{2m} minus the matching {2i, 2i+1}
Graph make_gnp(int n, double p, std::uint64_t seed);

// Parses a family spec such as "cycle(5)", "complete_minus_pm(3)" or
// "gnp(10,0.3,7)" and builds the graph. Throws std::invalid_argument on an
// unknown family or out-of-range parameters.
Graph generate(const std::string& family_spec);

}  // namespace boxdim

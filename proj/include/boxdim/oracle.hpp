#pragma once

#include <vector>

#include "boxdim/budget.hpp"
#include "boxdim/graph.hpp"

namespace boxdim {

// Interval recognition via chordality (simplicial elimination) plus absence
// of asteroidal triples. Supports n <= 16.
bool is_interval_graph(const Graph& g);

// Independent reference: searches all vertex orders for one in which
// u < v < w and uw an edge forces uv an edge (a left-endpoint order exists
// iff the graph is interval). n <= 8.
bool has_interval_vertex_order(const Graph& g);

// Circular-arc recognition by exhaustive backtracking over circular orders
// of the 2n arc endpoints, with the first start pinned to position 0.
// n <= 12.
bool is_circular_arc_graph(const Graph& g);

// All labeled interval graphs H on g's vertex set with E(H) >= E(g),
// ascending by edge set. Backed by a per-n memo of all interval graphs for
// n <= 6 and by subset enumeration over g's non-edges beyond that.
std::vector<Graph> enumerate_interval_supergraphs(
    const Graph& g, const OracleBudget& budget = OracleBudget{7});

// An exact intersection cover: `value` graphs of the target class whose
// intersection is exactly g (factors empty when value is 0).
struct CoverCertificate {
  int value = 0;
  std::vector<Graph> factors;
};

// Minimum k such that g is the intersection of k interval (resp.
// circular-arc) supergraphs, solved as an exact minimum cover of g's
// non-edges. 0 for complete graphs: the empty intersection is complete.
CoverCertificate exact_boxicity(const Graph& g,
                                const OracleBudget& budget = OracleBudget{7});
CoverCertificate exact_circular_dimension(
    const Graph& g, const OracleBudget& budget = OracleBudget{6});

// Exact chromatic number: maximum clique lower bound, then k-colorability
// by backtracking with color symmetry breaking.
int exact_chromatic_number(const Graph& g,
                           const OracleBudget& budget = OracleBudget{16});

}  // namespace boxdim

#pragma once

#include <vector>

#include "boxdim/budget.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/order.hpp"

namespace boxdim {

// Colors are 1..num_colors and every color is used by at least one vertex.
struct VertexColoring {
  std::vector<int> color;
  int num_colors = 0;
};

// An order plus a coloring in which any two distinct vertices, one weakly
// (resp. strongly) 2-reachable from the other, receive distinct colors.
// Such a certificate licenses the 2c-interval / 3c-circular constructions.
struct ColoringCertificate {
  LinearOrder order;
  VertexColoring coloring;
  ReachMode mode = ReachMode::Weak;
};

// The conflict graph under pi: g's edges, plus an edge {x,y} for every
// x < y < z with xz and yz edges of g, and (Weak only) an edge {u,w} for
// every u < v < w with uv and vw edges of g. Built from these positional
// rules directly; equals the graph of pairwise 2-reachability.
Graph conflict_graph(const Graph& g, const LinearOrder& pi, ReachMode mode);

// Processes vertices along pi, assigning the least color absent among
// earlier neighbors in h.
VertexColoring greedy_color_along(const Graph& h, const LinearOrder& pi);

// Degeneracy order of g, then greedy coloring of the conflict graph along
// it. The result always validates.
ColoringCertificate make_certificate(const Graph& g, ReachMode mode);

struct CertificateCheck {
  bool ok = true;
  int u = -1;  // on failure: u != v share a color, u 2-reachable from v
  int v = -1;
};

// Checks the certificate invariant directly from reachable_set, independent
// of conflict_graph.
CertificateCheck validate_certificate(const Graph& g,
                                      const ColoringCertificate& cert);

struct WcolStar2 {
  int value = 0;
  LinearOrder witness;
};

// min over all orders pi of the chromatic number of the weak conflict
// graph under pi.
WcolStar2 exact_wcol_star2(const Graph& g,
                           const OracleBudget& budget = OracleBudget{
                               7, 10'000'000});

}  // namespace boxdim

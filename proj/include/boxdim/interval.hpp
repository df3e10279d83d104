#pragma once

#include <utility>
#include <vector>

#include "boxdim/coloring.hpp"
#include "boxdim/graph.hpp"

namespace boxdim {

// Closed interval with integer endpoints in [1, n]; a point is lo == hi.
struct VertexInterval {
  int lo = 1;
  int hi = 1;

  bool operator==(const VertexInterval&) const = default;
};

struct IntervalSystem {
  std::vector<VertexInterval> intervals;  // one per vertex

  bool operator==(const IntervalSystem&) const = default;
};

// The 2c interval systems derived from a weak certificate, ordered
// I_1..I_c, I_{c+1}..I_{2c}. For color i the vertices of the class, in
// order, become the points 1..l (reversed points in I_{i+c}); a vertex
// outside the class maps to the point {n} when it has no neighbor in the
// class, and otherwise to [k, n] where k is the least (resp., in I_{i+c},
// reflected greatest) class index adjacent to it. Each system is a
// supergraph of g and the intersection of all 2c equals g; the construction
// re-verifies this and throws std::logic_error if it ever failed.
// An invalid or non-weak certificate is rejected with std::invalid_argument.
std::vector<IntervalSystem> build_interval_systems(
    const Graph& g, const ColoringCertificate& cert);

// Edge {u,v} iff the intervals of u and v overlap in every system. An empty
// list yields the complete graph on n vertices (empty intersection
// convention); n = -1 means "take n from the first system" and gives the
// empty graph for an empty list.
Graph interval_intersection_graph(const std::vector<IntervalSystem>& systems,
                                  int n = -1);

struct RepresentationCheck {
  bool ok = false;
  // valid when !ok: true = some system separates an edge of g,
  // false = no system separates the non-edge {u,v}.
  bool missing_edge = false;
  int u = -1;
  int v = -1;
};

RepresentationCheck verify_representation(
    const Graph& g, const std::vector<IntervalSystem>& systems);

namespace detail {
// The two systems for one color class (class_sorted ascending by the
// order). Shared with the circular construction.
std::pair<IntervalSystem, IntervalSystem> interval_pair_for_class(
    const Graph& g, const std::vector<int>& class_sorted);
}  // namespace detail

}  // namespace boxdim

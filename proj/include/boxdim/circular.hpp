#pragma once

#include <vector>

#include "boxdim/coloring.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/interval.hpp"

namespace boxdim {

// A circular interval on the line [1, n]: either a plain closed interval
// [a, b], or the closed complement {x <= a} u {x >= b} of the open interval
// (a, b) with a < b strictly. The two-sided form plays the role of an arc
// through the wrap-around point of a circle.
struct CircularArc {
  enum class Kind { Interval, CoInterval };

  Kind kind = Kind::Interval;
  int a = 1;
  int b = 1;

  static CircularArc interval(int lo, int hi);
  static CircularArc co_interval(int j, int k);

  bool operator==(const CircularArc&) const = default;
};

bool arcs_intersect(const CircularArc& x, const CircularArc& y);

struct CircularSystem {
  std::vector<CircularArc> arcs;  // one per vertex

  bool operator==(const CircularSystem&) const = default;
};

// Every interval system is a circular system.
CircularSystem as_circular(const IntervalSystem& sys);

// The 3c circular systems derived from a strong certificate: the 2c
// interval systems of the weak construction, then for each color i a system
// I_{i+2c} where class vertices are points 1..l and a vertex outside the
// class maps to the point {n} (no class neighbor), to [j, n] (unique class
// neighbor with index j), or to the co-interval (j, k) for its two smallest
// class-neighbor indices j < k. Intersection of all 3c equals g
// (re-verified; std::logic_error on breach). Invalid or non-strong
// certificates are rejected with std::invalid_argument.
std::vector<CircularSystem> build_circular_systems(
    const Graph& g, const ColoringCertificate& cert);

Graph circular_intersection_graph(const std::vector<CircularSystem>& systems,
                                  int n = -1);

RepresentationCheck verify_circular_representation(
    const Graph& g, const std::vector<CircularSystem>& systems);

// Arc of `length` consecutive positions starting at `start` on a circle of
// integer positions.
struct CircleArc {
  int start = 0;
  int length = 1;
};

// One circular-arc system on a circle of 2m points: vertex i covers
// positions {i, ..., i+m-1} (mod 2m), so arcs i and i+m are disjoint and
// all other pairs meet. The induced graph is K_{2m} minus the perfect
// matching (i, i+m); pairing_relabel maps it onto the (2i, 2i+1) pairing
// used by make_complete_minus_pm.
struct CircleModel {
  int points = 0;
  std::vector<CircleArc> arcs;
  Graph induced;
  std::vector<int> pairing_relabel;
};

CircleModel circular_model_complete_minus_pm(int m);  // m >= 2

}  // namespace boxdim

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "boxdim/circular.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/oracle.hpp"
#include "boxdim/order.hpp"
#include "boxdim/prng.hpp"

using namespace boxdim;

namespace {

Graph from_mask(int n, long mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

Graph c4_plus_k1() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

Graph k23() {
  Graph g(5);
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) g.add_edge(a, b);
  return g;
}

Graph intersection(const std::vector<Graph>& graphs) {
  Graph out = make_complete(graphs.at(0).n());
  for (int u = 0; u < out.n(); ++u)
    for (int v = u + 1; v < out.n(); ++v)
      for (const auto& g : graphs)
        if (!g.has_edge(u, v)) {
          out.remove_edge(u, v);
          break;
        }
  return out;
}

}  // namespace

TEST_CASE("interval recognition basics") {
  CHECK(is_interval_graph(make_path(6)));
  CHECK(is_interval_graph(make_complete(5)));
  CHECK(is_interval_graph(make_star(5)));
  CHECK_FALSE(is_interval_graph(make_cycle(4)));
  CHECK_FALSE(is_interval_graph(make_cycle(6)));
}

TEST_CASE("both interval routes agree on every graph with n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const long top = 1l << (n * (n - 1) / 2);
    for (long mask = 0; mask < top; ++mask) {
      Graph g = from_mask(n, mask);
      CHECK(is_interval_graph(g) == has_interval_vertex_order(g));
    }
  }
}

TEST_CASE("interval supergraph enumeration") {
  CHECK(enumerate_interval_supergraphs(make_edgeless(3)).size() == 8);
  CHECK(enumerate_interval_supergraphs(make_edgeless(4)).size() == 61);

  const auto only_k4 = enumerate_interval_supergraphs(make_complete(4));
  REQUIRE(only_k4.size() == 1);
  CHECK(only_k4[0] == make_complete(4));

  // every reported supergraph contains g and is interval
  const auto supers = enumerate_interval_supergraphs(make_cycle(4));
  for (const auto& h : supers) {
    CHECK(is_interval_graph(h));
    for (auto [u, v] : make_cycle(4).edges()) CHECK(h.has_edge(u, v));
  }

  CHECK_THROWS_AS(enumerate_interval_supergraphs(make_edgeless(8)),
                  BudgetExceeded);
}

TEST_CASE("exact boxicity") {
  CHECK(exact_boxicity(make_cycle(4)).value == 2);
  CHECK(exact_boxicity(make_complete(5)).value == 0);
  CHECK(exact_boxicity(make_complete_minus_pm(2)).value == 2);
  CHECK(exact_boxicity(make_complete_minus_pm(3)).value == 3);
  CHECK(exact_boxicity(make_path(5)).value == 1);

  // the returned factors really are interval supergraphs intersecting to g
  for (const Graph& g : {make_cycle(4), make_complete_minus_pm(3), k23()}) {
    const auto cover = exact_boxicity(g);
    REQUIRE(cover.value >= 1);
    CHECK(static_cast<int>(cover.factors.size()) == cover.value);
    for (const auto& factor : cover.factors) CHECK(is_interval_graph(factor));
    CHECK(intersection(cover.factors) == g);
  }

  CHECK_THROWS_AS(exact_boxicity(make_path(9)), BudgetExceeded);
}

namespace {

// Independent reference for circular-arc recognition: search directly for a
// system of intervals / co-intervals on the grid [1, 2n] whose intersection
// graph is g, with vertex 0 pinned to an interval starting at 1.
bool line_form_circular_arc(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return true;
  const int grid = 2 * n;
  std::vector<CircularArc> arcs(n);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    auto fits = [&](const CircularArc& arc) {
      arcs[v] = arc;
      for (int u = 0; u < v; ++u)
        if (arcs_intersect(arcs[u], arcs[v]) != g.has_edge(u, v)) return false;
      return true;
    };
    if (v == 0) {
      for (int hi = 1; hi <= grid; ++hi)
        if (fits(CircularArc::interval(1, hi)) && place(1)) return true;
      return false;
    }
    for (int lo = 1; lo <= grid; ++lo)
      for (int hi = lo; hi <= grid; ++hi)
        if (fits(CircularArc::interval(lo, hi)) && place(v + 1)) return true;
    for (int j = 1; j <= grid; ++j)
      for (int k = j + 1; k <= grid; ++k)
        if (fits(CircularArc::co_interval(j, k)) && place(v + 1)) return true;
    return false;
  };
  return place(0);
}

}  // namespace

TEST_CASE("circular-arc recognition") {
  CHECK(is_circular_arc_graph(make_cycle(4)));
  CHECK(is_circular_arc_graph(make_cycle(6)));
  CHECK(is_circular_arc_graph(make_complete_minus_pm(3)));
  CHECK_FALSE(is_circular_arc_graph(c4_plus_k1()));
  CHECK_FALSE(is_circular_arc_graph(k23()));

  // endpoint-order backtracking agrees with the interval/co-interval
  // assignment search, exhaustively for n <= 4 and on the two smallest
  // non-circular-arc graphs
  for (int n = 0; n <= 4; ++n) {
    const long top = 1l << (n * (n - 1) / 2);
    for (long mask = 0; mask < top; ++mask) {
      Graph g = from_mask(n, mask);
      CHECK(is_circular_arc_graph(g) == line_form_circular_arc(g));
    }
  }
  CHECK_FALSE(line_form_circular_arc(c4_plus_k1()));
  CHECK_FALSE(line_form_circular_arc(k23()));

  // every interval graph is a circular-arc graph (n <= 5 exhaustively)
  for (int n = 0; n <= 5; ++n) {
    const long top = 1l << (n * (n - 1) / 2);
    for (long mask = 0; mask < top; ++mask) {
      Graph g = from_mask(n, mask);
      if (is_interval_graph(g)) CHECK(is_circular_arc_graph(g));
    }
  }
}

TEST_CASE("exact circular dimension") {
  CHECK(exact_circular_dimension(make_complete_minus_pm(3)).value == 1);
  CHECK(exact_circular_dimension(make_cycle(4)).value == 1);
  CHECK(exact_circular_dimension(make_complete(4)).value == 0);
  CHECK(exact_circular_dimension(c4_plus_k1()).value == 2);
  CHECK(exact_circular_dimension(k23()).value == 2);

  const auto cover = exact_circular_dimension(c4_plus_k1());
  CHECK(cover.factors.size() == 2);
  for (const auto& factor : cover.factors)
    CHECK(is_circular_arc_graph(factor));
  CHECK(intersection(cover.factors) == c4_plus_k1());

  CHECK_THROWS_AS(exact_circular_dimension(make_path(7)), BudgetExceeded);
}

TEST_CASE("oracle cross-consistency on every graph with n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const long top = 1l << (n * (n - 1) / 2);
    for (long mask = 0; mask < top; ++mask) {
      Graph g = from_mask(n, mask);
      const int box = exact_boxicity(g).value;
      const int cdim = exact_circular_dimension(g).value;
      CHECK(cdim <= box);
      CHECK(box <= (n + 1) / 2);
      CHECK((box == 1) == (!g.is_complete() && is_interval_graph(g)));
    }
  }
}

TEST_CASE("oracle values are invariant under relabeling") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 15; ++iter) {
    Graph g = make_gnp(5, 0.4, rng.next());
    const auto perm_order = random_order(5, rng).sequence();
    Graph h = relabel(g, perm_order);
    CHECK(exact_boxicity(g).value == exact_boxicity(h).value);
    CHECK(exact_circular_dimension(g).value ==
          exact_circular_dimension(h).value);
    CHECK(exact_chromatic_number(g) == exact_chromatic_number(h));
  }
}

TEST_CASE("exact chromatic number") {
  CHECK(exact_chromatic_number(make_cycle(5)) == 3);
  CHECK(exact_chromatic_number(make_complete(4)) == 4);
  CHECK(exact_chromatic_number(make_edgeless(6)) == 1);
  CHECK(exact_chromatic_number(Graph(0)) == 0);
  CHECK(exact_chromatic_number(make_complete_minus_pm(3)) == 3);
  // the weak conflict graph of P3 under the identity order is a triangle
  CHECK(exact_chromatic_number(make_complete(3)) == 3);
  CHECK_THROWS_AS(exact_chromatic_number(make_gnp(17, 0.5, 1)),
                  BudgetExceeded);
}

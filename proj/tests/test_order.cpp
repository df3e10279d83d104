#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/order.hpp"
#include "boxdim/prng.hpp"

using namespace boxdim;

TEST_CASE("linear order validation") {
  LinearOrder pi({2, 0, 1});
  CHECK(pi.vertex_at(0) == 2);
  CHECK(pi.position_of(2) == 0);
  CHECK(pi.position_of(1) == 2);
  CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearOrder({0, 3, 1}), std::invalid_argument);
  CHECK(LinearOrder::identity(0).n() == 0);
}

TEST_CASE("degeneracy order") {
  CHECK(degeneracy_order(make_path(4)).degeneracy == 1);
  CHECK(degeneracy_order(make_cycle(4)).degeneracy == 2);
  CHECK(degeneracy_order(make_complete(5)).degeneracy == 4);
  CHECK(degeneracy_order(make_edgeless(6)).degeneracy == 0);
  CHECK(degeneracy_order(Graph(0)).order.n() == 0);

  // every vertex has at most k earlier neighbors
  SplitMix64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Graph g = make_gnp(3 + static_cast<int>(rng.next_below(12)), 0.4, rng.next());
    const auto [order, k] = degeneracy_order(g);
    for (int v = 0; v < g.n(); ++v) {
      int earlier = 0;
      for (int u : g.neighbors(v))
        earlier += order.position_of(u) < order.position_of(v);
      CHECK(earlier <= k);
    }
  }
}

TEST_CASE("reachable sets: worked examples") {
  // radius 0 reaches only the vertex itself
  Graph g = make_cycle(5);
  for (int v = 0; v < 5; ++v) {
    CHECK(reachable_set(g, LinearOrder::identity(5), ReachMode::Weak, 0, v) ==
          std::vector<int>{v});
    CHECK(reachable_set(g, LinearOrder::identity(5), ReachMode::Strong, 0, v) ==
          std::vector<int>{v});
  }

  // P3 a--b--c with a=0, b=1, c=2; order (b,a,c)
  Graph p3 = make_path(3);
  LinearOrder pi({1, 0, 2});
  CHECK(reachable_set(p3, pi, ReachMode::Weak, 2, 2) == std::vector<int>{1, 2});

  // K3 under the identity: everything is strongly 2-reachable from the last
  CHECK(reachable_set(make_complete(3), LinearOrder::identity(3),
                      ReachMode::Strong, 2, 2) == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS(reachable_set(p3, pi, ReachMode::Weak, 2, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(reachable_set(p3, pi, ReachMode::Weak, -1, 0),
                  std::invalid_argument);
}

TEST_CASE("coloring number under a fixed order") {
  CHECK(coloring_number_under_order(make_edgeless(5), LinearOrder::identity(5),
                                    ReachMode::Weak, 2) == 1);
  CHECK(coloring_number_under_order(make_path(3), LinearOrder({1, 0, 2}),
                                    ReachMode::Weak, 2) == 2);
  // cycle 1-2-3-4-1 with order (1,3,2,4), zero-based
  CHECK(coloring_number_under_order(make_cycle(4), LinearOrder({0, 2, 1, 3}),
                                    ReachMode::Weak, 2) == 3);
}

TEST_CASE("exact coloring numbers on tiny graphs") {
  CHECK(exact_coloring_number(make_path(3), ReachMode::Weak, 2).value == 2);
  CHECK(exact_coloring_number(make_cycle(4), ReachMode::Weak, 2).value == 3);
  for (int r : {1, 2, 3})
    CHECK(exact_coloring_number(make_complete(5), ReachMode::Weak, r).value == 5);

  // the witness attains the reported value
  const auto result = exact_coloring_number(make_cycle(5), ReachMode::Weak, 2);
  CHECK(coloring_number_under_order(make_cycle(5), result.witness,
                                    ReachMode::Weak, 2) == result.value);

  CHECK_THROWS_AS(exact_coloring_number(make_complete(12), ReachMode::Weak, 2),
                  BudgetExceeded);
  try {
    exact_coloring_number(make_complete(12), ReachMode::Weak, 2);
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.best_upper().has_value());
    CHECK(*e.best_upper() == 12);  // K_12: every order reaches everything
  }
}

TEST_CASE("reachability properties on seeded random graphs") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng.next_below(7));
    Graph g = make_gnp(n, 0.5, rng.next());
    LinearOrder pi = random_order(n, rng);
    for (int v = 0; v < n; ++v) {
      std::vector<int> prev_weak, prev_strong;
      for (int r = 0; r <= 3; ++r) {
        const auto weak = reachable_set(g, pi, ReachMode::Weak, r, v);
        const auto strong = reachable_set(g, pi, ReachMode::Strong, r, v);
        // dynamic program agrees with brute-force path enumeration
        CHECK(weak == reachable_set_by_paths(g, pi, ReachMode::Weak, r, v));
        CHECK(strong == reachable_set_by_paths(g, pi, ReachMode::Strong, r, v));
        // strong subset of weak
        CHECK(std::includes(weak.begin(), weak.end(), strong.begin(),
                            strong.end()));
        // monotone in the radius
        CHECK(std::includes(weak.begin(), weak.end(), prev_weak.begin(),
                            prev_weak.end()));
        CHECK(std::includes(strong.begin(), strong.end(), prev_strong.begin(),
                            prev_strong.end()));
        prev_weak = weak;
        prev_strong = strong;
      }
    }
    // the last vertex weakly 1-reaches exactly itself and earlier neighbors
    if (n > 0) {
      const int last = pi.vertex_at(n - 1);
      CHECK(static_cast<int>(
                reachable_set(g, pi, ReachMode::Weak, 1, last).size()) ==
            1 + g.degree(last));
    }
  }
}

#include <doctest.h>

#include "redforge/errors.hpp"
#include "redforge/families.hpp"
#include "redforge/redtree.hpp"

using namespace redforge;

TEST_SUITE("redtree") {
  TEST_CASE("P3 order-O tree") {
    auto t = build_tree(path_graph(3), order_O_strategy());
    CHECK(t.size() == 4);
    CHECK(depth(t) == 1);
    CHECK(t.is_order_O());
    CHECK(t.is_complete());
    auto leaves = leaves_dfs(t);
    REQUIRE(leaves.size() == 3);
    CHECK(t.path(leaves[0]) == "L");
    CHECK(t.path(leaves[1]) == "M");
    CHECK(t.path(leaves[2]) == "R");
    auto full = full_dim_leaves_dfs(t);
    REQUIRE(full.size() == 2);
    CHECK(preceding_facets(t, full[0]).empty());
    auto pf = preceding_facets(t, full[1]);
    REQUIRE(pf.size() == 1);
    CHECK(t.path(pf[0]) == "M");
    CHECK_THROWS_AS(preceding_facets(t, leaves[1]), NotFullDim);
    CHECK(leaf_census(t) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}});
  }

  TEST_CASE("alternating roots are their own tree") {
    auto g = MultiGraph::root(3, {{1, 3}, {2, 3}});
    auto t = build_tree(g, order_O_strategy());
    CHECK(t.size() == 1);
    CHECK(depth(t) == 0);
    CHECK(leaves_dfs(t) == std::vector<NodeId>{0});
    CHECK(full_dim_leaves_dfs(t) == std::vector<NodeId>{0});
    CHECK(check_leaf_sum_identity(t).holds);
  }

  TEST_CASE("P4 order-O tree by hand") {
    // root 123; L: 134 at vertex 3; M: 134; R: 134 then 234 on its right child
    auto t = build_tree(path_graph(4), order_O_strategy());
    CHECK(t.size() == 16);
    CHECK(depth(t) == 3);
    CHECK(full_dim_leaves_dfs(t).size() == 5);
    std::vector<std::string> full_paths;
    for (NodeId l : full_dim_leaves_dfs(t)) full_paths.push_back(t.path(l));
    CHECK(full_paths == std::vector<std::string>{"LL", "LR", "RL", "RRL", "RRR"});
    auto rrr = *t.find("RRR");
    std::vector<std::string> pf;
    for (NodeId f : preceding_facets(t, rrr)) pf.push_back(t.path(f));
    CHECK(pf == std::vector<std::string>{"MR", "RRM"});
  }

  TEST_CASE("the (1,3),(2,3),(3,4),(3,5) star has six full-dimensional leaves and the leaf-sum identity") {
    auto t = build_tree(star_graph_35(), order_O_strategy());
    CHECK(full_dim_leaves_dfs(t).size() == 6);
    auto r = check_leaf_sum_identity(t);
    CHECK(r.holds);
    CHECK(r.scope_verified);
    CHECK(r.expansion_count == r.leaf_count);
  }

  TEST_CASE("preceding facets agree with the pairwise intersections on order-O trees") {
    for (const auto& g : connected_sweep(4, 4)) {
      auto t = build_tree(g, order_O_strategy());
      for (NodeId l : full_dim_leaves_dfs(t)) {
        std::vector<MultiGraph> a;
        for (NodeId f : preceding_facets(t, l)) {
          CHECK(t.is_leaf(f));
          a.push_back(t.graph(f));
        }
        auto b = facet_intersections(t, l);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("K4 has 10 full-dimensional leaves under any complete strategy") {
    auto k4 = complete_graph(4);
    auto base = leaf_census(build_tree(k4, order_O_strategy()));
    CHECK(base.at(6) == 10);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto t = build_tree(k4, random_strategy(seed));
      CHECK(t.is_complete());
      CHECK(leaf_census(t) == base);
    }
  }

  TEST_CASE("node budget fails loudly") {
    CHECK_THROWS_AS(build_tree(complete_graph(5), order_O_strategy(), 50), BudgetExceeded);
  }

  TEST_CASE("partial trees stop where the strategy says so") {
    auto t = build_tree(path_graph(5), truncated_strategy(order_O_strategy(), 1));
    CHECK(t.size() == 4);
    CHECK_FALSE(t.is_complete());
  }

  TEST_CASE("priority strategy reproduces the alternative P5 order") {
    auto t = build_tree(path_graph(5), priority_strategy({{1, 2, 3}, {3, 4, 5}}));
    CHECK(t.is_complete());
    CHECK_FALSE(t.is_order_O());
    CHECK(t.node(0).step->i() == 1);
  }

  TEST_CASE("replay scripts rebuild the identical tree") {
    for (const auto& g : {complete_graph(4), star_graph_35(), path_graph(5)}) {
      auto t = build_tree(g, random_strategy(7));
      ReplayScript s;
      for (NodeId v = 0; v < t.size(); ++v) {
        if (!t.is_leaf(v)) s.emplace(t.path(v), label_of(t.graph(v), *t.node(v).step));
      }
      auto u = build_tree(g, replay_strategy(s));
      REQUIRE(u.size() == t.size());
      for (NodeId v = 0; v < t.size(); ++v) CHECK(u.graph(v) == t.graph(v));
    }
  }

  TEST_CASE("step labels") {
    StepLabel l{{1, 2, 4}, 0, 1};
    CHECK(format_label(l) == "124#0.1");
    CHECK(parse_label("124#0.1") == l);
    CHECK(parse_label("134") == StepLabel{{1, 3, 4}, 0, 0});
    CHECK_THROWS_AS(parse_label("1x4"), ParseError);
  }
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "redforge/embed.hpp"
#include "redforge/errors.hpp"
#include "redforge/families.hpp"
#include "redforge/io.hpp"

using namespace redforge;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

ReductionTree k4_witness_tree() {
  auto [root, script] = replay_from_json(parse_json(read_file(REDFORGE_TEST_DATA "/k4_witness_replay.json")));
  return build_tree(root, replay_strategy(script));
}

}  // namespace

TEST_SUITE("embed") {
  TEST_CASE("b_H on P3") {
    auto t = build_tree(path_graph(3), order_O_strategy());
    auto m = build_bH_orderO(t, 0);
    REQUIRE(m.pairs.size() == 1);
    CHECK(t.path(m.pairs[0].source) == "M");
    CHECK(t.path(m.pairs[0].image) == "R");
    CHECK(m.pairs[0].witness.src == 2);
    CHECK(m.pairs[0].witness.dst == 3);
    auto s = search_bH(t, 0);
    REQUIRE(s);
    CHECK(s->pairs.size() == 1);
    CHECK(s->pairs[0].image == m.pairs[0].image);
    CHECK_THROWS_AS(build_bH_orderO(t, 1), ScopeError);
  }

  TEST_CASE("b_H of a depth-one partial tree maps G3 to G2 by the kept edge") {
    for (const auto& g : {path_graph(3), complete_graph(4), star_graph_35()}) {
      auto t = build_tree(g, truncated_strategy(order_O_strategy(), 1));
      auto s = search_bH(t, 0);
      REQUIRE(s);
      REQUIRE(s->pairs.size() == 1);
      const auto& step = *t.node(0).step;
      CHECK(s->pairs[0].source == t.child(0, Branch::M));
      CHECK(s->pairs[0].image == t.child(0, Branch::R));
      CHECK(s->pairs[0].witness == step.second);
    }
  }

  TEST_CASE("replayed and searched b_H agree on order-O trees") {
    for (const auto& g : connected_sweep(4, 4)) {
      auto t = build_tree(g, order_O_strategy());
      for (NodeId h = 0; h < t.size(); ++h) {
        if (t.is_leaf(h)) continue;
        auto a = build_bH_orderO(t, h);
        auto b = search_bH(t, h);
        REQUIRE(b);
        REQUIRE(a.pairs.size() == b->pairs.size());
        for (std::size_t k = 0; k < a.pairs.size(); ++k) {
          CHECK(a.pairs[k].source == b->pairs[k].source);
          CHECK(a.pairs[k].image == b->pairs[k].image);
          CHECK(a.pairs[k].witness == b->pairs[k].witness);
          // the gained edge descends from the second edge but not from both
          CHECK(is_derived_from(a.pairs[k].witness, t.node(h).step->second));
          CHECK_FALSE(is_derived_from_sum(a.pairs[k].witness, t.node(h).step->first, t.node(h).step->second));
        }
      }
    }
  }

  TEST_CASE("embeddability levels") {
    CHECK(check_embeddability(build_tree(path_graph(3), order_O_strategy())).level == EmbedLevel::ExtraStrong);
    auto k4 = check_embeddability(build_tree(complete_graph(4), order_O_strategy()), true);
    CHECK(k4.level == EmbedLevel::Strong);
    REQUIRE(k4.left_weak);
    CHECK(*k4.left_weak);
    CHECK(*k4.two_sided_weak);
    auto witness = check_embeddability(k4_witness_tree());
    CHECK_FALSE(witness.at_least(EmbedLevel::ExtraStrong));
    CHECK_FALSE(witness.failures.empty());
  }

  TEST_CASE("h polynomials of small trees") {
    auto p3 = build_tree(path_graph(3), order_O_strategy());
    CHECK(h_poly(p3, HMode::Refined) == P("1 + b1"));
    CHECK(h_poly(p3, HMode::RefinedT) == P("t + b1*t"));
    CHECK(h_poly(p3, HMode::Merged) == P("1 + b"));
    auto single = build_tree(MultiGraph::root(2, {{1, 2}}), order_O_strategy());
    CHECK(h_poly(single, HMode::Refined) == P("1"));
    CHECK_THROWS_AS(h_poly(k4_witness_tree(), HMode::Refined), ScopeError);
  }

  TEST_CASE("star tree: h(b) equals the shifted reduced form") {
    auto t = build_tree(star_graph_35(), order_O_strategy());
    auto q = specialize(specialize(reduced_form(t), Specialization::XToOne), Specialization::BetaShiftDown);
    CHECK(h_poly(t, HMode::Refined) == q);
    CHECK(check_qh_identity(t).status == CheckStatus::Pass);
    CHECK(check_qht_identity(t).status == CheckStatus::Pass);
    CHECK(check_theorem7(t).status == CheckStatus::Pass);
  }

  TEST_CASE("P4 order-O tree: refined h by hand against the shifted reduced form") {
    // full-dimensional leaves LL, LR, RL, RRL, RRR attach on {}, {LM}, {ML}, {RM}, {MR, RRM};
    // the Middle steps into LM, ML, MR, RM reduce at vertex 1, the one into RRM at vertex 2
    auto t = build_tree(path_graph(4), order_O_strategy());
    CHECK(h_poly(t, HMode::Refined) == P("1 + 3*b1 + b1*b2"));
    CHECK(specialize(specialize(reduced_form(t), Specialization::XToOne), Specialization::BetaShiftDown) ==
          P("1 + 2*b1 + b2 + b1^2"));
    CHECK(h_poly(t, HMode::Merged) == P("1 + 3*b + b^2"));
    auto qh = check_qh_identity(t);
    CHECK(qh.status == CheckStatus::Fail);
    CHECK(qh.detail.find("monomial") != std::string::npos);
  }

  TEST_CASE("h polynomials match the pairwise-intersection oracle") {
    for (const auto& g : connected_sweep(5, 5)) {
      auto t = build_tree(g, order_O_strategy());
      CHECK_MESSAGE(h_poly_unchecked(t, 0, HMode::Refined) == oracle::h_by_intersections(t, false), to_string(g));
      CHECK(h_poly_unchecked(t, 0, HMode::Merged) == oracle::h_by_intersections(t, true));
    }
  }

  TEST_CASE("merged h equals Q(beta - 1) and satisfies the recursion on order-O trees") {
    for (const auto& g : connected_sweep(5, 5)) {
      auto t = build_tree(g, order_O_strategy());
      auto q = specialize(specialize(specialize(reduced_form(t), Specialization::XToOne), Specialization::BetaMerge),
                          Specialization::BetaShiftDown);
      CHECK(h_poly_unchecked(t, 0, HMode::Merged) == q);
      CHECK(check_h_recursion(t, HMode::Merged).holds);
    }
  }

  TEST_CASE("balance and the component formula on P5") {
    auto t = build_tree(path_graph(5), order_O_strategy());
    const auto single = MultiGraph::root(5, {{1, 5}});
    int found = 0;
    for (NodeId l : leaves_dfs(t)) {
      if (t.graph(l).endpoints() != single.endpoints()) continue;
      ++found;
      CHECK(balance(t, l) == P("b1^3"));
      CHECK(component_formula(t, l) == P("b1^3"));
    }
    CHECK(found == 1);
    auto alt = build_tree(path_graph(5), priority_strategy({{1, 2, 3}, {3, 4, 5}}));
    found = 0;
    for (NodeId l : leaves_dfs(alt)) {
      if (alt.graph(l).endpoints() != single.endpoints()) continue;
      ++found;
      CHECK(balance(alt, l) == P("b1^2*b3"));
    }
    CHECK(found == 1);
    CHECK_THROWS_AS(component_formula(build_tree(complete_graph(3), order_O_strategy()), 1), ScopeError);
  }

  TEST_CASE("full-dimensional leaves have balance one") {
    auto t = build_tree(complete_graph(4), order_O_strategy());
    for (NodeId l : full_dim_leaves_dfs(t)) CHECK(balance(t, l) == P("1"));
  }

  TEST_CASE("weighted leaf sum hits every leaf once") {
    for (const auto& g : connected_sweep(4, 4)) {
      auto t = build_tree(g, order_O_strategy());
      auto r = check_weighted_leaf_sum(t);
      CHECK_MESSAGE(r.holds, to_string(g));
    }
    auto p3 = check_weighted_leaf_sum(build_tree(path_graph(3), order_O_strategy()));
    CHECK(p3.leaves_where_weight_is_balance == 3);
  }

  TEST_CASE("the positivity check refuses trees below extra-strong") {
    auto t = k4_witness_tree();
    auto r = check_theorem7(t);
    CHECK(r.status == CheckStatus::Scope);
    auto q = specialize(reduced_form(t), Specialization::XToOneCornerT, 4);
    CHECK_FALSE(check_c7(specialize(q, Specialization::BetaMerge)).holds);
  }
}

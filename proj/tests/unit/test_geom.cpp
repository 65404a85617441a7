#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "redforge/embed.hpp"
#include "redforge/errors.hpp"
#include "redforge/families.hpp"
#include "redforge/geom.hpp"
#include "redforge/lp.hpp"

using namespace redforge;

namespace {

oracle::Edges plain(const MultiGraph& g) {
  oracle::Edges out;
  for (auto [a, b] : g.endpoints()) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("route counts of small graphs") {
    CHECK(routes(MultiGraph::root(2, {{1, 2}})).size() == 3);
    CHECK(routes(MultiGraph::root(1, {})).size() == 1);
    // three trivial routes, two single edges, the whole path
    CHECK(routes(path_graph(3)).size() == 6);
    CHECK(routes(MultiGraph::root(2, {{1, 2}, {1, 2}})).size() == 4);
  }

  TEST_CASE("route labels") {
    std::vector<std::string> labels;
    for (const auto& x : routes(path_graph(3))) labels.push_back(route_label(x));
    CHECK(labels == std::vector<std::string>{"s1t", "s12t", "s123t", "s2t", "s23t", "s3t"});
  }

  TEST_CASE("root polytope vertices match subset enumeration") {
    for (const auto& g : connected_sweep(4, 4)) {
      auto layout = AugmentedLayout::of(g);
      auto mine = polytope_vertices(layout, g);
      auto want = oracle::routes_by_subsets(g.n(), plain(g));
      REQUIRE_MESSAGE(mine == want, to_string(g));
      CHECK(polytope_dim(mine) == oracle::affine_dim(want));
      auto d = check_dim_formula(layout, g);
      CHECK(d.holds);
      CHECK(d.dim == static_cast<int>(g.edge_count()) + g.n() - 1);
    }
  }

  TEST_CASE("edge routes unfold provenance") {
    auto g = path_graph(3);
    auto layout = AugmentedLayout::of(g);
    auto mid = reduce_branch(g, *next_reduction_O(g), Branch::M);
    const auto& e = mid.edges().front();
    auto v = edge_route(layout, e);
    CHECK(v == FlowVertex{1, 1, 1, 0, 0, 0, 0, 1});
    CHECK(vertex_label(layout, v) == "s123t");
    CHECK_THROWS_AS(edge_route(layout, ProvEdge{1, 3, {1}}), BadProvenance);
  }

  TEST_CASE("full-dimensional leaves are simplices covering the root polytope") {
    for (const auto& g : {path_graph(4), complete_graph(4), star_graph_35()}) {
      auto t = build_tree(g, order_O_strategy());
      auto layout = AugmentedLayout::of(g);
      const int d = static_cast<int>(g.edge_count()) + g.n() - 1;
      VertexSet covered;
      for (NodeId l : full_dim_leaves_dfs(t)) {
        auto v = leaf_vertices(t, l);
        CHECK(v.size() == static_cast<std::size_t>(d) + 1);
        CHECK(oracle::affine_dim(v) == d);
        covered.insert(v.begin(), v.end());
      }
      CHECK(covered == polytope_vertices(layout, g));
    }
  }

  TEST_CASE("triangulation on order-O trees") {
    for (const auto& g : {path_graph(3), path_graph(4), complete_graph(4), star_graph_35()}) {
      auto r = verify_triangulation(build_tree(g, order_O_strategy()));
      CHECK_MESSAGE(r.holds, r.witness);
      CHECK(r.scope_verified);
      CHECK(r.simplices);
      CHECK(r.reduction_lemma);
      const auto full = full_dim_leaves_dfs(build_tree(g, order_O_strategy())).size();
      CHECK(r.pairs_checked == full * (full - 1) / 2);
      for (const auto& c : r.certificates) {
        CHECK(c.ok());
        CHECK(c.certificate_verified);
      }
    }
  }

  TEST_CASE("face certificate rejects crossing segments") {
    // in the K3 flow polytope s12t + s23t = s123t + s2t
    auto g = complete_graph(3);
    auto layout = AugmentedLayout::of(g);
    std::map<std::string, FlowVertex> by_label;
    for (const auto& v : polytope_vertices(layout, g)) by_label[vertex_label(layout, v)] = v;
    REQUIRE(by_label.size() == 7);
    auto crossing = certify_face(layout, {by_label["s12t"], by_label["s23t"]}, {by_label["s123t"], by_label["s2t"]});
    CHECK(crossing.certificate_verified);
    CHECK_FALSE(crossing.is_face);
    CHECK(crossing.shared_vertices == 0);
    auto touching = certify_face(layout, {by_label["s12t"], by_label["s23t"]}, {by_label["s12t"], by_label["s3t"]});
    CHECK(touching.certificate_verified);
    CHECK(touching.is_face);
    CHECK(touching.shared_vertices == 1);
  }

  TEST_CASE("shelling of P4 attaches on 0, 1, 1, 1, 2 facets") {
    auto t = build_tree(path_graph(4), order_O_strategy());
    auto s = verify_shelling(t);
    CHECK_MESSAGE(s.holds, s.witness);
    CHECK(s.attachment_facets == std::vector<std::size_t>{0, 1, 1, 1, 2});
    CHECK(s.h_vector == std::vector<long long>{1, 3, 1});
    CHECK(s.matches_preceding_facets);
    CHECK(h_from_shelling(s) == parse_polynomial("1 + 3*b + b^2"));
    CHECK(h_from_shelling(s) == h_poly(t, HMode::Merged));
  }

  TEST_CASE("exact LP") {
    // max x1 + x2 with x1 + x2 + s = 1
    LinearProgram lp{{{1, 1, 1}}, {1}, {1, 1, 0}};
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(verify_optimality(lp, sol));
    auto broken = sol;
    broken.value = Rational(1, 2);
    CHECK_FALSE(verify_optimality(lp, broken));

    LinearProgram infeasible{{{1, 1}}, {-1}, {1, 0}};
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);
    LinearProgram unbounded{{{1, -1}}, {0}, {1, 0}};
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);

    // max 2x + 3y, x + y + s1 = 4, x + 3y + s2 = 6: optimum at x = 3, y = 1
    LinearProgram two{{{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {2, 3, 0, 0}};
    auto t = solve_lp(two);
    REQUIRE(t.status == LpStatus::Optimal);
    CHECK(t.value == 9);
    CHECK(t.x[0] == 3);
    CHECK(t.x[1] == 1);
    CHECK(verify_optimality(two, t));
  }

  TEST_CASE("rational rank") {
    std::vector<std::vector<Rational>> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, Rational(1, 3)}};
    CHECK(rank(rows) == 2);
  }
}

#include <doctest.h>

#include <random>

#include "redforge/cvector.hpp"
#include "redforge/embed.hpp"
#include "redforge/families.hpp"
#include "redforge/geom.hpp"
#include "redforge/io.hpp"

using namespace redforge;

namespace {

// connected multigraphs beyond the exhaustive sweep, drawn with a fixed seed
std::vector<MultiGraph> random_graphs(std::size_t count, int max_n, int max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MultiGraph> out;
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, max_m)(rng);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int k = 0; k < m; ++k) {
      Vertex a = std::uniform_int_distribution<Vertex>(1, n - 1)(rng);
      Vertex b = std::uniform_int_distribution<Vertex>(a + 1, n)(rng);
      e.emplace_back(a, b);
    }
    auto g = MultiGraph::root(n, e);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<MultiGraph> corpus() {
  auto g = connected_sweep(4, 4);
  auto r = random_graphs(40, 6, 6, 2024);
  g.insert(g.end(), r.begin(), r.end());
  return g;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("complete trees alternate exactly at the leaves") {
    for (const auto& g : corpus()) {
      for (const auto& t : {build_tree(g, order_O_strategy()), build_tree(g, random_strategy(11))}) {
        for (NodeId v = 0; v < t.size(); ++v) CHECK(t.is_leaf(v) == is_alternating_graph(t.graph(v)));
        auto all = leaves_dfs(t);
        auto full = full_dim_leaves_dfs(t);
        CHECK(std::includes(all.begin(), all.end(), full.begin(), full.end()));
      }
    }
  }

  TEST_CASE("order O is a function of the graph") {
    for (const auto& g : corpus()) {
      auto copy = parse_graph(graph_to_json(g).dump());
      CHECK(next_reduction_O(g) == next_reduction_O(copy));
      if (auto p = next_reduction_O(g)) CHECK(p->first.dst == p->second.src);
    }
  }

  TEST_CASE("random strategies are reproducible from the seed") {
    for (const auto& g : random_graphs(10, 5, 6, 7)) {
      auto a = build_tree(g, random_strategy(99));
      auto b = build_tree(g, random_strategy(99));
      CHECK(script_of(a) == script_of(b));
    }
  }

  TEST_CASE("order-O reduced forms shift to nonnegative polynomials") {
    for (const auto& g : corpus()) {
      auto t = build_tree(g, order_O_strategy());
      auto q = specialize(specialize(reduced_form(t), Specialization::XToOne), Specialization::BetaShiftDown);
      for (const auto& [m, c] : q.terms()) CHECK(c > 0);
    }
  }

  TEST_CASE("h at beta = 1 counts full-dimensional leaves") {
    for (const auto& g : corpus()) {
      auto t = build_tree(g, order_O_strategy());
      auto h = h_poly_unchecked(t, 0, HMode::Merged);
      BigInt at_one = 0;
      for (const auto& [m, c] : h.terms()) at_one += c;
      CHECK(at_one == BigInt(full_dim_leaves_dfs(t).size()));
    }
  }

  TEST_CASE("order-O trees are at least strong and the levels nest") {
    for (const auto& g : corpus()) {
      auto t = build_tree(g, order_O_strategy());
      auto v = check_embeddability(t, true);
      CHECK_MESSAGE(v.at_least(EmbedLevel::Strong), to_string(g));
      CHECK(*v.two_sided_weak);
      for (NodeId h = 0; h < t.size(); ++h) {
        if (t.is_leaf(h)) continue;
        auto m = search_bH(t, h);
        REQUIRE(m);
        for (const auto& p : m->pairs) {
          CHECK(t.graph(p.image).edge_count() == t.graph(p.source).edge_count() + 1);
          CHECK(edge_difference(t.graph(p.image), t.graph(p.source)) == std::vector<ProvEdge>{p.witness});
        }
      }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto t = build_tree(complete_graph(4), random_strategy(seed));
      auto v = check_embeddability(t);
      if (v.at_least(EmbedLevel::Weak)) {
        for (NodeId h = 0; h < t.size(); ++h) CHECK((t.is_leaf(h) || search_bH(t, h).has_value()));
      }
      CHECK((check_theorem7(t).status == CheckStatus::Scope) == !v.at_least(EmbedLevel::ExtraStrong));
    }
  }

  TEST_CASE("path-graph leaves with n - 2 edges: facet weight, balance and component formula agree") {
    for (int n = 3; n <= 6; ++n) {
      auto t = build_tree(path_graph(n), order_O_strategy());
      std::size_t seen = 0;
      for (NodeId l : leaves_dfs(t)) {
        if (t.graph(l).edge_count() + 2 != static_cast<std::size_t>(n)) continue;
        ++seen;
        CHECK(component_formula(t, l) == balance(t, l));
        CHECK(facet_weight(t, l) == balance(t, l));
      }
      CHECK(seen > 0);
    }
  }

  TEST_CASE("leaf vertex sets meet along graph intersections") {
    for (const auto& g : random_graphs(12, 5, 5, 31)) {
      auto t = build_tree(g, order_O_strategy());
      auto layout = AugmentedLayout::of(g);
      auto leaves = leaves_dfs(t);
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        auto vi = leaf_vertices(t, leaves[i]);
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          auto vj = leaf_vertices(t, leaves[j]);
          VertexSet cap;
          std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::inserter(cap, cap.end()));
          CHECK(cap == polytope_vertices(layout, graph_intersection(t.graph(leaves[i]), t.graph(leaves[j]))));
        }
      }
    }
  }

  TEST_CASE("c-vector forms are independent at every order-O leaf") {
    for (const auto& g : corpus()) {
      auto t = build_tree(g, order_O_strategy());
      for (NodeId l : leaves_dfs(t)) CHECK(cvector_forms_independent(cvector_of(t, l)));
    }
  }

  TEST_CASE("replay round trips through JSON text") {
    for (const auto& g : random_graphs(15, 5, 6, 5)) {
      auto t = build_tree(g, random_strategy(3));
      auto [root, script] = replay_from_json(parse_json(replay_to_json(t).dump()));
      auto u = build_tree(root, replay_strategy(script));
      CHECK(tree_to_json(u)["root"] == tree_to_json(t)["root"]);
      CHECK(reduced_form(u) == reduced_form(t));
    }
  }
}

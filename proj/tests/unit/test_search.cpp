#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "redforge/errors.hpp"
#include "redforge/families.hpp"
#include "redforge/io.hpp"
#include "redforge/search.hpp"

using namespace redforge;

namespace {

const char* kWitnessQ = "t^4 + b*(-t^2 + 4t^3 + 2t^4) + b^2*(t^2 + 2t^3 + t^4)";

oracle::Edges plain(const MultiGraph& g) {
  oracle::Edges out;
  for (auto [a, b] : g.endpoints()) out.emplace_back(a, b);
  return out;
}

// number of complete reduction trees: sum over pairs of the product over the three children
long long count_trees(oracle::Edges e) {
  std::sort(e.begin(), e.end());
  long long total = 0;
  bool any = false;
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = 0; y < e.size(); ++y) {
      if (x == y || e[x].second != e[y].first) continue;
      any = true;
      oracle::Edges rest;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k != x && k != y) rest.push_back(e[k]);
      }
      const oracle::Edge ik{e[x].first, e[y].second};
      auto g1 = rest, g2 = rest, g3 = rest;
      g1.push_back(e[x]);
      g1.push_back(ik);
      g2.push_back(e[y]);
      g2.push_back(ik);
      g3.push_back(ik);
      total += count_trees(g1) * count_trees(g2) * count_trees(g3);
    }
  }
  return any ? total : 1;
}

std::set<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_string(p));
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("K4 exact polynomial target") {
    SearchConfig cfg;
    cfg.root = complete_graph(4);
    cfg.target = SearchTarget::Polynomial;
    cfg.target_polynomial = parse_polynomial(kWitnessQ);
    auto r = search_c7(cfg);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(r.witness_q == *cfg.target_polynomial);
    auto t = build_tree(cfg.root, replay_strategy(*r.witness));
    CHECK(t.is_complete());
    CHECK(merged_shifted_q(t) == *cfg.target_polynomial);
    CHECK(violates_c7(r.witness_q));
    REQUIRE(r.witness_level);
    CHECK(*r.witness_level != EmbedLevel::ExtraStrong);
  }

  TEST_CASE("K4 first violation") {
    SearchConfig cfg;
    cfg.root = complete_graph(4);
    auto r = search_c7(cfg);
    REQUIRE(r.outcome == SearchOutcome::Found);
    auto t = build_tree(cfg.root, replay_strategy(*r.witness));
    CHECK(merged_shifted_q(t) == r.witness_q);
    CHECK_FALSE(check_c7(r.witness_q).holds);
  }

  TEST_CASE("threads and the cache do not change the witness") {
    SearchConfig cfg;
    cfg.root = complete_graph(4);
    cfg.target = SearchTarget::Polynomial;
    cfg.target_polynomial = parse_polynomial(kWitnessQ);
    auto serial = search_c7(cfg);
    cfg.jobs = 2;
    auto parallel = search_c7(cfg);
    REQUIRE(parallel.outcome == SearchOutcome::Found);
    CHECK(*parallel.witness == *serial.witness);
  }

  TEST_CASE("order O on K4 is a single tree without violation") {
    SearchConfig cfg;
    cfg.root = complete_graph(4);
    cfg.space = SearchSpace::OrderO;
    auto r = search_c7(cfg);
    CHECK(r.outcome == SearchOutcome::NotFound);
    CHECK(r.trees_examined == 1);
  }

  TEST_CASE("random space and budgets") {
    SearchConfig cfg;
    cfg.root = path_graph(4);
    cfg.space = SearchSpace::Random;
    cfg.samples = 5;
    auto r = search_c7(cfg);
    CHECK(r.outcome == SearchOutcome::NotFound);
    CHECK(r.trees_examined == 5);

    SearchConfig tight;
    tight.root = complete_graph(4);
    tight.budget = 10;
    CHECK(search_c7(tight).outcome == SearchOutcome::BudgetExhausted);

    SearchConfig missing;
    missing.root = path_graph(3);
    missing.target = SearchTarget::Polynomial;
    CHECK_THROWS_AS(search_c7(missing), Error);
  }

  TEST_CASE("embeddability targets enumerate whole trees") {
    SearchConfig cfg;
    cfg.root = complete_graph(4);
    cfg.target = SearchTarget::NotExtraStrong;
    auto r = search_c7(cfg);
    REQUIRE(r.outcome == SearchOutcome::Found);
    auto t = build_tree(cfg.root, replay_strategy(*r.witness));
    CHECK_FALSE(check_embeddability(t).at_least(EmbedLevel::ExtraStrong));

    SearchConfig p4;
    p4.root = path_graph(4);
    p4.target = SearchTarget::NotWeak;
    CHECK(search_c7(p4).outcome == SearchOutcome::NotFound);
  }

  TEST_CASE("achievable polynomials match the unmemoized recursion") {
    std::vector<MultiGraph> graphs = connected_sweep(4, 4);
    graphs.push_back(path_graph(5));
    graphs.push_back(star_graph_35());
    for (const auto& g : graphs) {
      auto mine = achievable_q(g);
      std::vector<Polynomial> want;
      for (const auto& q : oracle::achievable_merged(g.n(), plain(g))) want.push_back(oracle::to_polynomial(q));
      CHECK_MESSAGE(as_strings(mine) == as_strings(want), to_string(g));
      CHECK(mine.size() == as_strings(mine).size());
      CHECK(as_strings(achievable_q(g, false)) == as_strings(mine));
    }
  }

  TEST_CASE("order-O trees of path graphs satisfy the positivity statement") {
    for (int n = 2; n <= 7; ++n) {
      SearchConfig cfg;
      cfg.root = path_graph(n);
      cfg.space = SearchSpace::OrderO;
      CHECK(search_c7(cfg).outcome == SearchOutcome::NotFound);
    }
  }

  TEST_CASE("other complete trees of P5 can violate it") {
    // t - b + 7bt + b^2 + 5b^2t + b^3t: the coefficient of b without t is negative
    auto target = parse_polynomial("t - b + 7*b*t + b^2 + 5*b^2*t + b^3*t");
    bool found = false;
    for (const auto& q : achievable_q(path_graph(5))) found |= specialize(q, Specialization::BetaShiftDown) == target;
    CHECK(found);
    SearchConfig cfg;
    cfg.root = path_graph(5);
    auto r = search_c7(cfg);
    REQUIRE(r.outcome == SearchOutcome::Found);
    auto t = build_tree(cfg.root, replay_strategy(*r.witness));
    CHECK_FALSE(t.is_order_O());
    CHECK(violates_c7(merged_shifted_q(t)));
    REQUIRE(r.witness_level);
    CHECK(*r.witness_level != EmbedLevel::ExtraStrong);
  }

  TEST_CASE("tree enumeration visits every complete tree once") {
    for (const auto& g : {path_graph(3), path_graph(4), complete_graph(3), star_graph_35()}) {
      std::set<std::string> seen;
      auto n = enumerate_complete_trees(
          g,
          [&](const ReductionTree& t) {
            CHECK(t.is_complete());
            seen.insert(replay_to_json(t).dump());
            return false;
          },
          1'000'000);
      CHECK(static_cast<long long>(n) == count_trees(plain(g)));
      CHECK(seen.size() == n);
    }
    CHECK_THROWS_AS(enumerate_complete_trees(complete_graph(4), [](const ReductionTree&) { return false; }, 3),
                    BudgetExceeded);
  }
}

#include "redforge/embed.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "redforge/errors.hpp"

namespace redforge {

namespace {

NodeId target_child(const ReductionTree& t, NodeId h, Side side) {
  return t.child(h, side == Side::Right ? Branch::R : Branch::L);
}

// E(big) = E(small) + e with e not in E(small); returns e.
std::optional<ProvEdge> one_extra_edge(const MultiGraph& small, const MultiGraph& big) {
  if (big.edge_count() != small.edge_count() + 1 || !is_edge_subset(small, big)) return std::nullopt;
  auto diff = edge_difference(big, small);
  if (diff.size() != 1 || small.contains(diff.front())) return std::nullopt;
  return diff.front();
}

bool is_b_star(const ProvEdge& e, const EdgePair& h) {
  return is_derived_from(e, h.second) && !is_derived_from_sum(e, h.first, h.second);
}

std::multiset<MultiGraph> facet_graphs(const ReductionTree& t, NodeId subtree, NodeId leaf) {
  std::multiset<MultiGraph> out;
  for (NodeId f : preceding_facets(t, subtree, leaf)) out.insert(t.graph(f));
  return out;
}

}  // namespace

std::optional<NodeId> BHMap::image_of(NodeId source) const {
  for (const auto& p : pairs) {
    if (p.source == source) return p.image;
  }
  return std::nullopt;
}

std::optional<NodeId> BHMap::preimage_of(NodeId image) const {
  for (const auto& p : pairs) {
    if (p.image == image) return p.source;
  }
  return std::nullopt;
}

BHMap build_bH_orderO(const ReductionTree& t, NodeId h) {
  if (!t.is_order_O()) throw ScopeError("b_H replay needs an order-O tree");
  if (t.is_leaf(h)) throw ScopeError("b_H is defined at non-leaf nodes only");
  const EdgePair hstep = *t.node(h).step;
  const NodeId mid = t.child(h, Branch::M);
  const NodeId right = t.child(h, Branch::R);
  const std::size_t prefix = t.node(mid).depth;

  BHMap map{h, Side::Right, {}};
  for (NodeId leaf : full_dim_leaves_dfs(t, mid)) {
    auto all = t.path_steps(leaf);
    std::vector<ReductionStep> steps(all.begin() + static_cast<std::ptrdiff_t>(prefix), all.end());
    std::size_t next = 0;
    NodeId cur = right;
    while (!t.is_leaf(cur)) {
      const EdgePair& p = *t.node(cur).step;
      Branch b;
      if (next < steps.size() && steps[next].pair == p) {
        b = steps[next++].branch;
      } else {
        bool first = is_b_star(p.first, hstep);
        bool second = is_b_star(p.second, hstep);
        if (first == second) {
          throw Error("b_H replay at " + t.path(cur) + ": reduction " + to_string(p) +
                      " neither matches the Middle path nor involves exactly one b*-edge");
        }
        b = first ? Branch::R : Branch::L;
      }
      cur = t.child(cur, b);
    }
    auto e = one_extra_edge(t.graph(leaf), t.graph(cur));
    if (!e) {
      throw Error("b_H replay maps " + t.path(leaf) + " to " + t.path(cur) + ", which is not one edge larger");
    }
    map.pairs.push_back(BHPair{leaf, cur, *e});
  }
  return map;
}

BHSearch search_bH_detailed(const ReductionTree& t, NodeId h, Side side) {
  BHSearch out;
  if (t.is_leaf(h)) {
    out.map = BHMap{h, side, {}};
    return out;
  }
  const auto sources = full_dim_leaves_dfs(t, t.child(h, Branch::M));
  const auto targets = full_dim_leaves_dfs(t, target_child(t, h, side));

  std::vector<std::vector<std::pair<NodeId, ProvEdge>>> related(sources.size());
  std::map<NodeId, std::vector<NodeId>> preimages;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (NodeId tau : targets) {
      if (auto e = one_extra_edge(t.graph(sources[s]), t.graph(tau))) {
        related[s].emplace_back(tau, *e);
        preimages[tau].push_back(sources[s]);
      }
    }
  }
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (related[s].empty()) {
      out.failed_clause = "weak: no one-edge extension of a Middle leaf";
      out.witness_leaves = {sources[s]};
      return out;
    }
  }
  for (const auto& [tau, pre] : preimages) {
    if (pre.size() > 1) {
      out.failed_clause = "weak: target leaf has several preimages";
      out.witness_leaves = {tau};
      out.witness_leaves.insert(out.witness_leaves.end(), pre.begin(), pre.end());
      return out;
    }
  }
  BHMap map{h, side, {}};
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (related[s].size() > 1) {
      out.failed_clause = "weak: eligible target leaf outside the image";
      out.witness_leaves = {sources[s]};
      for (const auto& [tau, e] : related[s]) out.witness_leaves.push_back(tau);
      return out;
    }
    map.pairs.push_back(BHPair{sources[s], related[s].front().first, related[s].front().second});
  }
  out.map = std::move(map);
  return out;
}

std::optional<BHMap> search_bH(const ReductionTree& t, NodeId h, Side side) {
  return search_bH_detailed(t, h, side).map;
}

std::string to_string(EmbedLevel level) {
  switch (level) {
    case EmbedLevel::None: return "none";
    case EmbedLevel::Weak: return "weak";
    case EmbedLevel::Strong: return "strong";
    case EmbedLevel::ExtraStrong: return "extra-strong";
  }
  return "?";
}

std::size_t corner_edge_count(const MultiGraph& g) { return g.count_endpoints(1, g.n()); }

EmbedVerdict check_embeddability(const ReductionTree& t, bool include_left) {
  EmbedVerdict v;
  std::vector<BHMap> maps;
  std::vector<EmbedFailure> weak_failures;
  for (NodeId h = 0; h < t.size(); ++h) {
    if (t.is_leaf(h)) continue;
    auto r = search_bH_detailed(t, h, Side::Right);
    if (r.map) {
      maps.push_back(std::move(*r.map));
    } else {
      weak_failures.push_back(EmbedFailure{h, t.path(h), r.failed_clause, r.witness_leaves});
    }
  }
  if (include_left) {
    bool left = true;
    for (NodeId h = 0; h < t.size() && left; ++h) {
      if (!t.is_leaf(h) && !search_bH(t, h, Side::Left)) left = false;
    }
    v.left_weak = left;
    v.two_sided_weak = left && weak_failures.empty();
  }
  if (!weak_failures.empty()) {
    v.failures = std::move(weak_failures);
    return v;
  }
  v.level = EmbedLevel::Weak;

  std::vector<EmbedFailure> strong_failures;
  for (const auto& map : maps) {
    const NodeId mid = t.child(map.node, Branch::M);
    const NodeId right = t.child(map.node, Branch::R);
    for (const auto& p : map.pairs) {
      std::multiset<MultiGraph> shifted;
      for (const auto& z : facet_graphs(t, mid, p.source)) shifted.insert(z.with(p.witness));
      auto actual = facet_graphs(t, right, p.image);
      if (shifted == actual) continue;
      bool first = std::includes(actual.begin(), actual.end(), shifted.begin(), shifted.end());
      strong_failures.push_back(EmbedFailure{
          map.node, t.path(map.node),
          first ? "strong: extra preceding facet of the image" : "strong: shifted facet is not a preceding facet of the image",
          {p.source, p.image}});
    }
  }
  if (!strong_failures.empty()) {
    v.failures = std::move(strong_failures);
    return v;
  }
  v.level = EmbedLevel::Strong;

  std::vector<EmbedFailure> extra_failures;
  for (const auto& map : maps) {
    for (const auto& p : map.pairs) {
      if (corner_edge_count(t.graph(p.source)) != corner_edge_count(t.graph(p.image))) {
        extra_failures.push_back(EmbedFailure{map.node, t.path(map.node), "extra-strong: (1,n) edge count changes",
                                              {p.source, p.image}});
      }
    }
  }
  if (!extra_failures.empty()) {
    v.failures = std::move(extra_failures);
    return v;
  }
  v.level = EmbedLevel::ExtraStrong;
  return v;
}

Polynomial facet_weight(const ReductionTree& t, NodeId facet, NodeId from) {
  std::optional<int> beta;
  std::size_t middles = 0;
  for (NodeId cur = facet; cur != from; cur = *t.node(cur).parent) {
    if (!t.node(cur).parent) throw Error("facet is not below the given node");
    if (t.node(cur).branch == Branch::M) {
      ++middles;
      beta = t.node(*t.node(cur).parent).step->i();
    }
  }
  if (middles != 1) {
    throw Error("facet " + t.path(facet) + " has " + std::to_string(middles) + " Middle steps; weight undefined");
  }
  return Polynomial::variable(Var::beta(*beta));
}

Polynomial h_poly_unchecked(const ReductionTree& t, NodeId subtree, HMode mode) {
  Polynomial h;
  const int n = t.root_graph().n();
  for (NodeId leaf : full_dim_leaves_dfs(t, subtree)) {
    Polynomial p = Polynomial::constant(1);
    for (NodeId f : preceding_facets(t, subtree, leaf)) {
      p *= mode == HMode::Merged ? Polynomial::variable(Var::beta_merged()) : facet_weight(t, f, subtree);
    }
    if (mode == HMode::RefinedT) {
      p *= Polynomial::variable(Var::t()).pow(static_cast<unsigned>(t.graph(leaf).count_endpoints(1, n)));
    }
    h += p;
  }
  return h;
}

Polynomial h_poly(const ReductionTree& t, HMode mode) {
  auto v = check_embeddability(t);
  if (!v.at_least(EmbedLevel::Strong)) {
    std::string msg = "h-polynomial needs the strong embeddable property (level " + to_string(v.level) + ")";
    if (!v.failures.empty()) {
      msg += "; node '" + v.failures.front().node_path + "': " + v.failures.front().clause;
    }
    throw ScopeError(msg);
  }
  return h_poly_unchecked(t, t.root(), mode);
}

RecursionCheck check_h_recursion(const ReductionTree& t, HMode mode) {
  RecursionCheck out;
  std::vector<Polynomial> h(t.size());
  // children have larger ids, so a reverse sweep sees them first
  for (NodeId v = t.size(); v-- > 0;) {
    h[v] = h_poly_unchecked(t, v, mode);
    if (t.is_leaf(v) || !out.holds) continue;
    Polynomial beta = mode == HMode::Merged ? Polynomial::variable(Var::beta_merged())
                                            : Polynomial::variable(Var::beta(t.node(v).step->i()));
    Polynomial rhs = h[t.child(v, Branch::L)] + h[t.child(v, Branch::R)] +
                     (beta - Polynomial::constant(1)) * h[t.child(v, Branch::M)];
    if (rhs != h[v]) {
      out.holds = false;
      out.failing_node = v;
    }
  }
  return out;
}

Polynomial balance(const ReductionTree& t, NodeId leaf) { return middle_weight(t, leaf, t.root()); }

bool is_path_graph(const MultiGraph& g) {
  if (g.edge_count() != static_cast<std::size_t>(std::max(g.n() - 1, 0))) return false;
  auto ends = g.endpoints();
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i] != std::make_pair(static_cast<Vertex>(i + 1), static_cast<Vertex>(i + 2))) return false;
  }
  return true;
}

Polynomial component_formula(const MultiGraph& leaf) {
  const int n = leaf.n();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : leaf.edges()) parent[find(e.src)] = find(e.dst);
  std::map<int, std::pair<int, int>> span;  // component -> [min, max]
  for (int v = 1; v <= n; ++v) {
    auto [it, fresh] = span.try_emplace(find(v), v, v);
    if (!fresh) {
      it->second.first = std::min(it->second.first, v);
      it->second.second = std::max(it->second.second, v);
    }
  }
  Monomial m;
  for (const auto& [root, range] : span) {
    const ProvEdge* best = nullptr;
    for (const auto& e : leaf.edges()) {
      if (find(e.src) == root) continue;
      if (!(e.src < range.first && range.second < e.dst)) continue;
      if (!best || e.dst - e.src < best->dst - best->src ||
          (e.dst - e.src == best->dst - best->src && e.src < best->src)) {
        best = &e;
      }
    }
    if (best) m = m * Monomial::of(Var::beta(best->src));
  }
  return Polynomial::term(m, 1);
}

Polynomial component_formula(const ReductionTree& t, NodeId leaf) {
  if (!is_path_graph(t.root_graph())) throw ScopeError("component formula applies to path-graph roots");
  return component_formula(t.graph(leaf));
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Scope: return "scope";
  }
  return "?";
}

Polynomial specialized_reduced_form(const ReductionTree& t, bool with_t) {
  return specialize(reduced_form(t), with_t ? Specialization::XToOneCornerT : Specialization::XToOne,
                    t.root_graph().n());
}

namespace {

std::string first_difference(const Polynomial& a, const Polynomial& b) {
  Polynomial d = a - b;
  if (d.is_zero()) return {};
  const auto& [m, c] = *d.terms().rbegin();
  Polynomial mono = Polynomial::term(m, 1);
  return "monomial " + to_string(mono) + ": lhs " + a.coefficient(m).str() + ", rhs " + b.coefficient(m).str();
}

IdentityCheck identity_check(const ReductionTree& t, EmbedLevel needed, bool with_t) {
  IdentityCheck out;
  auto v = check_embeddability(t);
  out.lhs = specialize(specialized_reduced_form(t, with_t), Specialization::BetaShiftDown);
  if (!v.at_least(needed)) {
    out.status = CheckStatus::Scope;
    out.detail = "tree is " + to_string(v.level) + ", identity needs " + to_string(needed);
    return out;
  }
  out.rhs = h_poly_unchecked(t, t.root(), with_t ? HMode::RefinedT : HMode::Refined);
  out.detail = first_difference(out.lhs, out.rhs);
  out.status = out.detail.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

}  // namespace

IdentityCheck check_qh_identity(const ReductionTree& t) { return identity_check(t, EmbedLevel::Strong, false); }

IdentityCheck check_qht_identity(const ReductionTree& t) { return identity_check(t, EmbedLevel::ExtraStrong, true); }

Theorem7Check check_theorem7(const ReductionTree& t) {
  Theorem7Check out;
  out.verdict = check_c7(specialized_reduced_form(t, true));
  auto v = check_embeddability(t);
  if (!v.at_least(EmbedLevel::ExtraStrong)) {
    out.status = CheckStatus::Scope;
    out.detail = "tree is " + to_string(v.level) + ", nonnegativity needs extra-strong";
    return out;
  }
  out.status = out.verdict.holds ? CheckStatus::Pass : CheckStatus::Fail;
  if (!out.verdict.holds) {
    const auto& w = out.verdict.violations.front();
    out.detail = "negative coefficient " + w.coefficient.str() + " at t^" + std::to_string(w.t_degree);
  }
  return out;
}

WeightedFormalSum weighted_formal_leaf_sum(const ReductionTree& t) {
  std::map<MultiGraph, NodeId> leaf_of;
  for (NodeId l : leaves_dfs(t)) leaf_of.try_emplace(t.graph(l), l);
  WeightedFormalSum sum;
  for (NodeId f : full_dim_leaves_dfs(t)) {
    std::vector<std::pair<MultiGraph, Polynomial>> terms{{t.graph(f), Polynomial::constant(1)}};
    for (const auto& q : facet_intersections(t, f)) {
      auto it = leaf_of.find(q);
      if (it == leaf_of.end()) throw Error("facet intersection " + to_string(q) + " is not a leaf");
      Polynomial w = facet_weight(t, it->second);
      std::vector<std::pair<MultiGraph, Polynomial>> next;
      next.reserve(terms.size() * 2);
      for (const auto& [g, p] : terms) {
        next.emplace_back(g, p);
        next.emplace_back(graph_intersection(g, q), p * w);
      }
      terms = std::move(next);
    }
    for (auto& [g, p] : terms) sum[g] += p;
  }
  return sum;
}

WeightedLeafSumCheck check_weighted_leaf_sum(const ReductionTree& t) {
  WeightedLeafSumCheck out;
  WeightedFormalSum sum;
  try {
    sum = weighted_formal_leaf_sum(t);
  } catch (const Error&) {
    out.holds = false;
    return out;
  }
  std::set<MultiGraph> leaves;
  for (NodeId l : leaves_dfs(t)) {
    leaves.insert(t.graph(l));
    Polynomial b = balance(t, l);
    out.total_balance += b;
    ++out.leaf_count;
    auto it = sum.find(t.graph(l));
    if (it != sum.end() && it->second == b) ++out.leaves_where_weight_is_balance;
  }
  for (const auto& [g, p] : sum) {
    out.total_weight += p;
    const bool monomial = p.terms().size() == 1 && p.terms().begin()->second == 1;
    if ((!leaves.contains(g) || !monomial) && out.holds) {
      out.holds = false;
      out.witness = g;
    }
  }
  for (const auto& g : leaves) {
    if (!sum.contains(g) && out.holds) {
      out.holds = false;
      out.witness = g;
    }
  }
  if (leaves.size() != out.leaf_count) out.holds = false;
  return out;
}

}  // namespace redforge

#include "redforge/redtree.hpp"

#include <algorithm>
#include <charconv>

#include "redforge/errors.hpp"

namespace redforge {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_path(std::string_view path) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : path) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ path.size();
}

bool pair_present(const MultiGraph& g, const EdgePair& p) {
  return p.first.dst == p.second.src && p.first.src < p.first.dst && p.second.src < p.second.dst &&
         g.contains(p.first) && g.contains(p.second);
}

}  // namespace

Strategy order_O_strategy() {
  return Strategy{"O", [](const MultiGraph& g, std::string_view) { return next_reduction_O(g); }};
}

Strategy first_pair_strategy() {
  return Strategy{"first", [](const MultiGraph& g, std::string_view) -> std::optional<EdgePair> {
                    auto pairs = reducible_pairs(g);
                    if (pairs.empty()) return std::nullopt;
                    return pairs.front();
                  }};
}

Strategy random_strategy(std::uint64_t seed) {
  return Strategy{"random:" + std::to_string(seed),
                  [seed](const MultiGraph& g, std::string_view path) -> std::optional<EdgePair> {
                    auto pairs = reducible_pairs(g);
                    if (pairs.empty()) return std::nullopt;
                    std::uint64_t r = splitmix64(splitmix64(seed) ^ hash_path(path));
                    return pairs[r % pairs.size()];
                  }};
}

Strategy priority_strategy(std::vector<Triple> triples) {
  std::string name = "priority";
  for (const auto& t : triples) name += ":" + std::to_string(t.i) + std::to_string(t.j) + std::to_string(t.k);
  return Strategy{name, [triples = std::move(triples)](const MultiGraph& g, std::string_view) -> std::optional<EdgePair> {
                    for (const auto& t : triples) {
                      auto a = edge_by_copy(g, t.i, t.j, 0);
                      auto b = edge_by_copy(g, t.j, t.k, 0);
                      if (a && b) return EdgePair{*a, *b};
                    }
                    return next_reduction_O(g);
                  }};
}

Strategy replay_strategy(ReplayScript script) {
  return Strategy{"replay", [script = std::move(script)](const MultiGraph& g, std::string_view path) -> std::optional<EdgePair> {
                    auto it = script.find(path);
                    if (it == script.end()) return std::nullopt;
                    return resolve_label(g, it->second);
                  }};
}

Strategy truncated_strategy(Strategy inner, std::size_t max_depth) {
  std::string name = inner.name + "@" + std::to_string(max_depth);
  return Strategy{name, [inner = std::move(inner), max_depth](const MultiGraph& g, std::string_view path) -> std::optional<EdgePair> {
                    if (path.size() >= max_depth) return std::nullopt;
                    return inner.choose(g, path);
                  }};
}

EdgePair resolve_label(const MultiGraph& g, const StepLabel& label) {
  auto a = edge_by_copy(g, label.triple.i, label.triple.j, label.first_copy);
  auto b = edge_by_copy(g, label.triple.j, label.triple.k, label.second_copy);
  if (!a || !b) throw EdgeAbsent("replay step " + format_label(label) + " does not match graph " + to_string(g));
  return EdgePair{*a, *b};
}

StepLabel label_of(const MultiGraph& g, const EdgePair& pair) {
  auto c1 = copy_index(g, pair.first);
  auto c2 = copy_index(g, pair.second);
  if (!c1 || !c2) throw EdgeAbsent("pair " + to_string(pair) + " not in graph");
  return StepLabel{Triple{pair.i(), pair.j(), pair.k()}, *c1, *c2};
}

std::string format_label(const StepLabel& label) {
  std::string s = std::to_string(label.triple.i) + std::to_string(label.triple.j) + std::to_string(label.triple.k);
  // multi-digit vertices are separated by commas
  if (label.triple.k > 9) {
    s = std::to_string(label.triple.i) + "," + std::to_string(label.triple.j) + "," + std::to_string(label.triple.k);
  }
  if (label.first_copy != 0 || label.second_copy != 0) {
    s += "#" + std::to_string(label.first_copy) + "." + std::to_string(label.second_copy);
  }
  return s;
}

StepLabel parse_label(std::string_view text) {
  StepLabel label;
  std::string_view body = text;
  if (auto hash = text.find('#'); hash != std::string_view::npos) {
    body = text.substr(0, hash);
    auto copies = text.substr(hash + 1);
    auto dot = copies.find('.');
    if (dot == std::string_view::npos) throw ParseError("bad copy suffix in label '" + std::string(text) + "'");
    auto parse_size = [&](std::string_view s) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad copy index in '" + std::string(text) + "'");
      return v;
    };
    label.first_copy = parse_size(copies.substr(0, dot));
    label.second_copy = parse_size(copies.substr(dot + 1));
  }
  std::vector<int> parts;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || piece.empty()) throw ParseError("bad label '" + std::string(text) + "'");
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : body) {
      if (c < '1' || c > '9') throw ParseError("bad label '" + std::string(text) + "'");
      parts.push_back(c - '0');
    }
  }
  if (parts.size() != 3 || !(parts[0] < parts[1] && parts[1] < parts[2])) {
    throw ParseError("label '" + std::string(text) + "' is not i<j<k");
  }
  label.triple = Triple{parts[0], parts[1], parts[2]};
  return label;
}

NodeId ReductionTree::child(NodeId v, Branch b) const {
  const auto& n = nodes_.at(v);
  if (!n.step) throw Error("node " + std::to_string(v) + " is a leaf");
  return n.children[static_cast<std::size_t>(b)];
}

std::string ReductionTree::path(NodeId v) const {
  std::string p;
  for (NodeId cur = v; nodes_.at(cur).parent; cur = *nodes_[cur].parent) p.push_back(branch_char(nodes_[cur].branch));
  std::reverse(p.begin(), p.end());
  return p;
}

std::optional<NodeId> ReductionTree::find(std::string_view p) const {
  NodeId cur = 0;
  for (char c : p) {
    if (is_leaf(cur)) return std::nullopt;
    cur = child(cur, branch_from_char(c));
  }
  return cur;
}

std::vector<ReductionStep> ReductionTree::path_steps(NodeId v) const {
  std::vector<ReductionStep> steps;
  for (NodeId cur = v; nodes_.at(cur).parent; cur = *nodes_[cur].parent) {
    steps.push_back(ReductionStep{*nodes_[*nodes_[cur].parent].step, nodes_[cur].branch});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

NodeId ReductionTree::lowest_common_ancestor(NodeId a, NodeId b) const {
  while (nodes_.at(a).depth > nodes_.at(b).depth) a = *nodes_[a].parent;
  while (nodes_.at(b).depth > nodes_.at(a).depth) b = *nodes_[b].parent;
  while (a != b) {
    a = *nodes_[a].parent;
    b = *nodes_[b].parent;
  }
  return a;
}

bool ReductionTree::is_complete() const {
  for (const auto& n : nodes_) {
    if (!n.step && !is_alternating_graph(n.graph)) return false;
  }
  return true;
}

namespace {

struct Builder {
  const Strategy& strategy;
  std::size_t budget;
  std::vector<TreeNode>& nodes;
  std::string path;

  NodeId expand(MultiGraph g, std::optional<NodeId> parent, Branch branch, std::size_t depth) {
    if (nodes.size() >= budget) {
      throw BudgetExceeded("node budget of " + std::to_string(budget) + " exhausted");
    }
    NodeId id = nodes.size();
    nodes.push_back(TreeNode{std::move(g), std::nullopt, {}, parent, branch, depth, 0});
    auto pair = strategy.choose(nodes[id].graph, path);
    if (pair) {
      if (!pair_present(nodes[id].graph, *pair)) {
        throw Error("strategy '" + strategy.name + "' chose an irreducible pair " + to_string(*pair) + " in " +
                    to_string(nodes[id].graph));
      }
      ReductionResult kids = reduce(nodes[id].graph, pair->first, pair->second);
      nodes[id].step = *pair;
      std::array<NodeId, 3> children{};
      for (Branch b : {Branch::L, Branch::M, Branch::R}) {
        path.push_back(branch_char(b));
        children[static_cast<std::size_t>(b)] = expand(kids.child(b), id, b, depth + 1);
        path.pop_back();
      }
      nodes[id].children = children;
    }
    nodes[id].subtree_end = nodes.size();
    return id;
  }
};

}  // namespace

ReductionTree build_tree(const MultiGraph& g, const Strategy& s, std::size_t node_budget) {
  ReductionTree t;
  t.strategy_name_ = s.name;
  Builder builder{s, node_budget, t.nodes_, {}};
  builder.expand(g, std::nullopt, Branch::L, 0);
  for (const auto& n : t.nodes_) {
    if (n.step && next_reduction_O(n.graph) != n.step) {
      t.order_O_ = false;
      break;
    }
  }
  return t;
}

std::vector<NodeId> leaves_dfs(const ReductionTree& t, NodeId subtree) {
  std::vector<NodeId> out;
  for (NodeId v = subtree; v < t.node(subtree).subtree_end; ++v) {
    if (t.is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> leaves_dfs(const ReductionTree& t) { return leaves_dfs(t, t.root()); }

std::vector<NodeId> full_dim_leaves_dfs(const ReductionTree& t, NodeId subtree) {
  std::vector<NodeId> out;
  const std::size_t m = t.graph(subtree).edge_count();
  for (NodeId v : leaves_dfs(t, subtree)) {
    if (t.graph(v).edge_count() == m) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> full_dim_leaves_dfs(const ReductionTree& t) { return full_dim_leaves_dfs(t, t.root()); }

std::size_t depth(const ReductionTree& t) {
  std::size_t d = 0;
  for (NodeId v = 0; v < t.size(); ++v) d = std::max(d, t.node(v).depth);
  return d;
}

std::map<std::size_t, std::size_t> leaf_census(const ReductionTree& t) {
  std::map<std::size_t, std::size_t> census;
  for (NodeId v : leaves_dfs(t)) ++census[t.graph(v).edge_count()];
  return census;
}

std::size_t middle_steps(const ReductionTree& t, NodeId v) {
  std::size_t count = 0;
  for (NodeId cur = v; t.node(cur).parent; cur = *t.node(cur).parent) {
    if (t.node(cur).branch == Branch::M) ++count;
  }
  return count;
}

std::vector<NodeId> preceding_facets(const ReductionTree& t, NodeId subtree, NodeId leaf) {
  if (!t.in_subtree(subtree, leaf) || !t.is_leaf(leaf)) throw Error("node is not a leaf of the subtree");
  const MultiGraph& lg = t.graph(leaf);
  if (lg.edge_count() != t.graph(subtree).edge_count()) {
    throw NotFullDim("leaf " + t.path(leaf) + " is not full-dimensional");
  }
  std::vector<NodeId> out;
  for (NodeId h = subtree; h < leaf; ++h) {
    if (!t.is_leaf(h)) continue;
    const MultiGraph& hg = t.graph(h);
    if (hg.edge_count() + 1 != lg.edge_count() || !is_edge_subset(hg, lg)) continue;
    NodeId lca = t.lowest_common_ancestor(h, leaf);
    // first down step from the common ancestor towards h must be a Middle step
    NodeId cur = h;
    while (*t.node(cur).parent != lca) cur = *t.node(cur).parent;
    if (t.node(cur).branch == Branch::M) out.push_back(h);
  }
  return out;
}

std::vector<NodeId> preceding_facets(const ReductionTree& t, NodeId leaf) {
  return preceding_facets(t, t.root(), leaf);
}

std::vector<MultiGraph> facet_intersections(const ReductionTree& t, NodeId full_dim_leaf) {
  const MultiGraph& fi = t.graph(full_dim_leaf);
  if (!t.is_leaf(full_dim_leaf) || fi.edge_count() != t.root_graph().edge_count()) {
    throw NotFullDim("node " + t.path(full_dim_leaf) + " is not a full-dimensional leaf");
  }
  std::vector<MultiGraph> out;
  for (NodeId j : full_dim_leaves_dfs(t)) {
    if (j >= full_dim_leaf) break;
    MultiGraph common = graph_intersection(fi, t.graph(j));
    if (common.edge_count() + 1 == fi.edge_count()) out.push_back(std::move(common));
  }
  return out;
}

FormalSum formal_leaf_sum(const ReductionTree& t) {
  FormalSum sum;
  for (NodeId f : full_dim_leaves_dfs(t)) {
    const MultiGraph& fg = t.graph(f);
    std::vector<MultiGraph> qs = facet_intersections(t, f);
    const std::size_t terms = std::size_t{1} << qs.size();
    for (std::size_t mask = 0; mask < terms; ++mask) {
      MultiGraph term = fg;
      for (std::size_t j = 0; j < qs.size(); ++j) {
        if (mask & (std::size_t{1} << j)) term = graph_intersection(term, qs[j]);
      }
      ++sum[term];
    }
  }
  return sum;
}

FormalSum leaf_multiset(const ReductionTree& t) {
  FormalSum sum;
  for (NodeId v : leaves_dfs(t)) ++sum[t.graph(v)];
  return sum;
}

LeafSumCheck check_leaf_sum_identity(const ReductionTree& t) {
  LeafSumCheck result;
  result.scope_verified = t.is_order_O();
  FormalSum expanded = formal_leaf_sum(t);
  FormalSum leaves = leaf_multiset(t);
  for (const auto& [g, c] : expanded) result.expansion_count += c;
  for (const auto& [g, c] : leaves) result.leaf_count += c;
  auto e = expanded.begin();
  auto l = leaves.begin();
  while (e != expanded.end() || l != leaves.end()) {
    if (l == leaves.end() || (e != expanded.end() && e->first < l->first)) {
      result.holds = false;
      result.witness = e->first;
      break;
    }
    if (e == expanded.end() || l->first < e->first) {
      result.holds = false;
      result.witness = l->first;
      break;
    }
    if (e->second != l->second) {
      result.holds = false;
      result.witness = e->first;
      break;
    }
    ++e;
    ++l;
  }
  return result;
}

}  // namespace redforge

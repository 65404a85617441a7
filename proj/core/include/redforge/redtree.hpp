#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redforge/multigraph.hpp"

namespace redforge {

using NodeId = std::size_t;

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/**
 * A deterministic choice of the next reduction at a node, given the node's
 * graph and its branch path from the root ("" for the root, then one of
 * L/M/R per step). Returning nullopt stops the expansion there.
 */
struct Strategy {
  std::string name;
  std::function<std::optional<EdgePair>(const MultiGraph&, std::string_view path)> choose;
};

Strategy order_O_strategy();
/// Lexicographically first composable pair in edge order.
Strategy first_pair_strategy();
/// Uniform choice among composable pairs, seeded by (seed, path).
Strategy random_strategy(std::uint64_t seed);

/// Endpoint triple (i,j,k) naming the reduction of (i,j),(j,k).
struct Triple {
  Vertex i = 0, j = 0, k = 0;
  auto operator<=>(const Triple&) const = default;
};

/// Reduces the first listed triple whose edges are present; falls back to order O.
Strategy priority_strategy(std::vector<Triple> triples);

/// A reduction named by endpoints plus copy indices among parallel edges.
struct StepLabel {
  Triple triple;
  std::size_t first_copy = 0;
  std::size_t second_copy = 0;
  auto operator<=>(const StepLabel&) const = default;
};

/// Node path -> step label; nodes without an entry are leaves.
using ReplayScript = std::map<std::string, StepLabel, std::less<>>;

Strategy replay_strategy(ReplayScript script);
/// Stops `inner` at the given depth, producing a partial tree.
Strategy truncated_strategy(Strategy inner, std::size_t max_depth);

EdgePair resolve_label(const MultiGraph& g, const StepLabel& label);
StepLabel label_of(const MultiGraph& g, const EdgePair& pair);
/// "ijk" with copy suffix "#c1.c2" when either copy index is nonzero.
std::string format_label(const StepLabel& label);
StepLabel parse_label(std::string_view text);

struct TreeNode {
  MultiGraph graph;
  std::optional<EdgePair> step;           // reduction performed at this node
  std::array<NodeId, 3> children{};       // L, M, R; valid iff step
  std::optional<NodeId> parent;
  Branch branch = Branch::L;              // branch taken from the parent
  std::size_t depth = 0;
  NodeId subtree_end = 0;                 // one past the last node of the subtree
};

/**
 * A (possibly partial) reduction tree. Nodes are stored in depth-first
 * preorder with children visited L, M, R, so the subtree of node v is the
 * id range [v, subtree_end(v)) and leaves appear in DFS order by id.
 */
class ReductionTree {
 public:
  const MultiGraph& root_graph() const { return nodes_.front().graph; }
  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode& node(NodeId v) const { return nodes_.at(v); }
  const MultiGraph& graph(NodeId v) const { return nodes_.at(v).graph; }
  bool is_leaf(NodeId v) const { return !nodes_.at(v).step.has_value(); }
  NodeId child(NodeId v, Branch b) const;
  bool in_subtree(NodeId sub, NodeId v) const { return v >= sub && v < nodes_.at(sub).subtree_end; }
  const std::string& strategy_name() const { return strategy_name_; }

  /// Branch letters from the root to v.
  std::string path(NodeId v) const;
  std::optional<NodeId> find(std::string_view path) const;
  /// Reductions (with branches) on the root -> v path.
  std::vector<ReductionStep> path_steps(NodeId v) const;
  NodeId lowest_common_ancestor(NodeId a, NodeId b) const;

  /// Every internal node reduces the pair the canonical order selects.
  bool is_order_O() const { return order_O_; }
  /// Every leaf is alternating.
  bool is_complete() const;

 private:
  friend ReductionTree build_tree(const MultiGraph&, const Strategy&, std::size_t);
  std::vector<TreeNode> nodes_;
  std::string strategy_name_;
  bool order_O_ = true;
};

/// Expands the tree in DFS order. Throws BudgetExceeded past `node_budget` nodes
/// and Error when the strategy returns a pair that is not reducible.
ReductionTree build_tree(const MultiGraph& g, const Strategy& s, std::size_t node_budget = kDefaultNodeBudget);

std::vector<NodeId> leaves_dfs(const ReductionTree& t);
std::vector<NodeId> leaves_dfs(const ReductionTree& t, NodeId subtree);
/// Leaves with as many edges as the (sub)tree root.
std::vector<NodeId> full_dim_leaves_dfs(const ReductionTree& t);
std::vector<NodeId> full_dim_leaves_dfs(const ReductionTree& t, NodeId subtree);

std::size_t depth(const ReductionTree& t);

/// Number of leaves per edge count.
std::map<std::size_t, std::size_t> leaf_census(const ReductionTree& t);

/// Number of Middle steps on the root -> v path.
std::size_t middle_steps(const ReductionTree& t, NodeId v);

/**
 * Preceding facets of the full-dimensional leaf `leaf` within the subtree
 * rooted at `subtree`: earlier leaves with one edge fewer, contained in the
 * leaf, and reached from it by going up and then first down a Middle child.
 * Throws NotFullDim.
 */
std::vector<NodeId> preceding_facets(const ReductionTree& t, NodeId leaf);
std::vector<NodeId> preceding_facets(const ReductionTree& t, NodeId subtree, NodeId leaf);

/// The multiset {F_i ∩ F_j : j < i, one edge fewer than F_i} over full-dimensional
/// leaves F in DFS order, computed by pairwise intersection.
std::vector<MultiGraph> facet_intersections(const ReductionTree& t, NodeId full_dim_leaf);

/// Integer-weighted multiset of graphs.
using FormalSum = std::map<MultiGraph, long long>;

/// Expands the sum over full-dimensional leaves of the product of (F_i + Q) over
/// the facet intersections Q of F_i, products read as graph intersection.
FormalSum formal_leaf_sum(const ReductionTree& t);
FormalSum leaf_multiset(const ReductionTree& t);

struct LeafSumCheck {
  bool holds = true;
  bool scope_verified = true;              // tree is order O
  std::optional<MultiGraph> witness;       // graph whose multiplicities differ
  long long expansion_count = 0;
  long long leaf_count = 0;
};

LeafSumCheck check_leaf_sum_identity(const ReductionTree& t);

}  // namespace redforge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redforge/poly.hpp"
#include "redforge/redtree.hpp"

namespace redforge {

/// Which child plays the role of the target of b_H: the right child G2 or, for
/// the mirrored property, the left child G1.
enum class Side { Right, Left };

struct BHPair {
  NodeId source = 0;  // full-dimensional leaf of the Middle subtree
  NodeId image = 0;   // full-dimensional leaf of the target subtree
  ProvEdge witness;   // E(image) = E(source) + witness
};

struct BHMap {
  NodeId node = 0;
  Side side = Side::Right;
  std::vector<BHPair> pairs;  // ordered by source

  std::optional<NodeId> image_of(NodeId source) const;
  std::optional<NodeId> preimage_of(NodeId image) const;
};

/**
 * Builds b_H for a non-leaf node of an order-O tree by replaying the path to
 * each Middle-subtree leaf from the right child: matching reductions copy the
 * branch, other reductions drop the edge derived from the second edge of H.
 * Throws ScopeError if the tree is not order O or H is a leaf.
 */
BHMap build_bH_orderO(const ReductionTree& t, NodeId h);

struct BHSearch {
  std::optional<BHMap> map;
  std::string failed_clause;           // empty on success
  std::vector<NodeId> witness_leaves;
};

/// Brute-force b_H by the one-extra-edge relation; succeeds iff every clause of
/// the weak embeddable property holds at H.
BHSearch search_bH_detailed(const ReductionTree& t, NodeId h, Side side = Side::Right);
std::optional<BHMap> search_bH(const ReductionTree& t, NodeId h, Side side = Side::Right);

enum class EmbedLevel { None = 0, Weak = 1, Strong = 2, ExtraStrong = 3 };

std::string to_string(EmbedLevel level);

struct EmbedFailure {
  NodeId node = 0;
  std::string node_path;
  std::string clause;
  std::vector<NodeId> witness_leaves;
};

struct EmbedVerdict {
  EmbedLevel level = EmbedLevel::None;
  std::vector<EmbedFailure> failures;  // failures of the first level not reached
  std::optional<bool> left_weak;       // set when requested
  std::optional<bool> two_sided_weak;

  bool at_least(EmbedLevel l) const { return static_cast<int>(level) >= static_cast<int>(l); }
};

EmbedVerdict check_embeddability(const ReductionTree& t, bool include_left = false);

/// Number of (1, n) edges of a graph, n its vertex count.
std::size_t corner_edge_count(const MultiGraph& g);

/// β_a of the unique Middle step between `from` and the facet leaf; throws
/// Error when the path has no or several Middle steps.
Polynomial facet_weight(const ReductionTree& t, NodeId facet, NodeId from = 0);

enum class HMode { Refined, Merged, RefinedT };

/// h-polynomial; requires the strong embeddable property (ScopeError otherwise).
Polynomial h_poly(const ReductionTree& t, HMode mode);
/// h-polynomial of the subtree rooted at `subtree`, without the scope check.
Polynomial h_poly_unchecked(const ReductionTree& t, NodeId subtree, HMode mode);

/// Checks h(T) = h(T_L) + h(T_R) + (β_i - 1) h(T_M) at every internal node.
struct RecursionCheck {
  bool holds = true;
  std::optional<NodeId> failing_node;
};
RecursionCheck check_h_recursion(const ReductionTree& t, HMode mode = HMode::Refined);

/// Product of β_i over every Middle step on the root -> leaf path.
Polynomial balance(const ReductionTree& t, NodeId leaf);

/**
 * Π β_i^{f(i)} where f(i) counts the components C of the leaf for which the
 * shortest edge e with every vertex of C strictly between its endpoints (and
 * C not containing e) starts at i. Throws ScopeError off path-graph roots.
 */
Polynomial component_formula(const ReductionTree& t, NodeId leaf);
Polynomial component_formula(const MultiGraph& leaf);

bool is_path_graph(const MultiGraph& g);

enum class CheckStatus { Pass, Fail, Scope };
std::string to_string(CheckStatus s);

struct IdentityCheck {
  CheckStatus status = CheckStatus::Pass;
  Polynomial lhs;  // shifted reduced form
  Polynomial rhs;  // h-polynomial
  std::string detail;
};

IdentityCheck check_qh_identity(const ReductionTree& t);
IdentityCheck check_qht_identity(const ReductionTree& t);

struct Theorem7Check {
  CheckStatus status = CheckStatus::Pass;
  C7Verdict verdict;
  std::string detail;
};

Theorem7Check check_theorem7(const ReductionTree& t);

/// Reduced form specialized at x = 1 (except x_1n = t when `with_t`).
Polynomial specialized_reduced_form(const ReductionTree& t, bool with_t);

/// Σ_i Π_j (F_i + w(Q_j) Q_j) expanded; each graph maps to its total weight.
using WeightedFormalSum = std::map<MultiGraph, Polynomial>;
WeightedFormalSum weighted_formal_leaf_sum(const ReductionTree& t);

struct WeightedLeafSumCheck {
  bool holds = true;
  std::optional<MultiGraph> witness;
  Polynomial total_weight;       // Σ of expansion weights
  Polynomial total_balance;      // Σ_L balance(L)
  std::size_t leaves_where_weight_is_balance = 0;
  std::size_t leaf_count = 0;
};

/// The weighted expansion hits every leaf exactly once, each with a single
/// monomial weight. Where that weight is the balance is counted, not required.
WeightedLeafSumCheck check_weighted_leaf_sum(const ReductionTree& t);

}  // namespace redforge

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace redforge {

using Vertex = int;
/// Index of an edge of the root graph after canonical sorting.
using EdgeId = int;

/**
 * An edge (src, dst), src < dst, that remembers which root edges it is a
 * formal sum of. The provenance is a sorted multiset of root edge ids.
 * Two edges are the same edge iff endpoints and provenance agree.
 */
struct ProvEdge {
  Vertex src = 0;
  Vertex dst = 0;
  std::vector<EdgeId> provenance;

  auto operator<=>(const ProvEdge&) const = default;
  bool operator==(const ProvEdge&) const = default;
};

enum class Branch : std::uint8_t { L, M, R };

char branch_char(Branch b);
Branch branch_from_char(char c);

/// A pair of edges (i,j), (j,k) with i < j < k on which a reduction acts.
struct EdgePair {
  ProvEdge first;
  ProvEdge second;

  Vertex i() const { return first.src; }
  Vertex j() const { return first.dst; }
  Vertex k() const { return second.dst; }

  auto operator<=>(const EdgePair&) const = default;
  bool operator==(const EdgePair&) const = default;
};

/// A reduction pair together with the branch taken.
struct ReductionStep {
  EdgePair pair;
  Branch branch = Branch::L;

  bool operator==(const ReductionStep&) const = default;
};

/**
 * A loopless multigraph on the vertex set [n] whose edges carry provenance.
 *
 * Edges are kept sorted by (src, dst, provenance) so that every traversal is
 * reproducible. Every graph also carries a fingerprint of the root graph its
 * provenance ids refer to; graphs from different roots are never compared.
 */
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Builds a graph from already-annotated edges. Rejects loops, reversed and
  /// out-of-range endpoints, and empty provenance.
  MultiGraph(int n, std::vector<ProvEdge> edges, std::uint64_t root_fingerprint);

  /// Builds a root graph: endpoints are sorted canonically and edge number k
  /// in that order receives provenance {k}.
  static MultiGraph root(int n, std::span<const std::pair<Vertex, Vertex>> endpoints);
  static MultiGraph root(int n, std::initializer_list<std::pair<Vertex, Vertex>> endpoints);

  int n() const { return n_; }
  std::span<const ProvEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint64_t root_fingerprint() const { return fingerprint_; }

  std::size_t multiplicity(const ProvEdge& e) const;
  bool contains(const ProvEdge& e) const { return multiplicity(e) > 0; }

  /// Number of edges with the given endpoints, counted with multiplicity.
  std::size_t count_endpoints(Vertex src, Vertex dst) const;

  /// Endpoint pairs in edge order (provenance forgotten).
  std::vector<std::pair<Vertex, Vertex>> endpoints() const;

  /// Copy of this graph with one copy of `e` removed. Throws EdgeAbsent.
  MultiGraph without(const ProvEdge& e) const;
  /// Copy of this graph with `e` added.
  MultiGraph with(ProvEdge e) const;

  bool operator==(const MultiGraph&) const = default;
  auto operator<=>(const MultiGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<ProvEdge> edges_;
  std::uint64_t fingerprint_ = 0;
};

/// Fingerprint of a root graph given by its sorted endpoint list.
std::uint64_t root_fingerprint(int n, std::span<const std::pair<Vertex, Vertex>> sorted_endpoints);

struct ReductionResult {
  MultiGraph left;    // G1: drops the second edge
  MultiGraph right;   // G2: drops the first edge
  MultiGraph middle;  // G3: drops both

  const MultiGraph& child(Branch b) const;
};

/**
 * Performs the reduction on edges a = (i,j) and b = (j,k).
 * Each child gains the edge (i,k) whose provenance is provenance(a) + provenance(b).
 * Throws NotComposable or EdgeAbsent when the precondition fails.
 */
ReductionResult reduce(const MultiGraph& g, const ProvEdge& a, const ProvEdge& b);
MultiGraph reduce_branch(const MultiGraph& g, const EdgePair& pair, Branch branch);

/// The edge (i,k) produced by reducing `pair`.
ProvEdge merged_edge(const EdgePair& pair);

bool is_alternating(const MultiGraph& g, Vertex v);
bool is_alternating_graph(const MultiGraph& g);

/// Smallest nonalternating vertex, if any.
std::optional<Vertex> first_nonalternating(const MultiGraph& g);

/**
 * The reduction chosen by the canonical order: at the smallest nonalternating
 * vertex v, the incoming edge with minimal source and the outgoing edge with
 * maximal target. Parallel copies are broken by the smallest provenance.
 */
std::optional<EdgePair> next_reduction_O(const MultiGraph& g);

/// Every composable pair of edges, in edge order; parallel copies are listed.
std::vector<EdgePair> reducible_pairs(const MultiGraph& g);

/// Provenance-aware multiset intersection. Throws RootMismatch.
MultiGraph graph_intersection(const MultiGraph& a, const MultiGraph& b);

/// Provenance-aware multiset containment E(sub) ⊆ E(super).
bool is_edge_subset(const MultiGraph& sub, const MultiGraph& super);

/// Edges of `super` not in `sub` (multiset difference).
std::vector<ProvEdge> edge_difference(const MultiGraph& super, const MultiGraph& sub);

bool is_derived_from(const ProvEdge& e, EdgeId b);
bool is_derived_from_sum(const ProvEdge& e, EdgeId a, EdgeId b);
/// e is a sum containing every root edge that `b` is a sum of.
bool is_derived_from(const ProvEdge& e, const ProvEdge& b);
bool is_derived_from_sum(const ProvEdge& e, const ProvEdge& a, const ProvEdge& b);

/// Multiset union of two sorted provenance lists.
std::vector<EdgeId> provenance_union(std::span<const EdgeId> a, std::span<const EdgeId> b);
/// Sorted multiset containment.
bool provenance_contains(std::span<const EdgeId> super, std::span<const EdgeId> sub);

std::string to_string(const ProvEdge& e);
std::string to_string(const MultiGraph& g);
std::string to_string(const EdgePair& p);

/// Position of `e` among the edges of `g` with the same endpoints.
std::optional<std::size_t> copy_index(const MultiGraph& g, const ProvEdge& e);
/// The `copy`-th edge of `g` with the given endpoints.
std::optional<ProvEdge> edge_by_copy(const MultiGraph& g, Vertex src, Vertex dst, std::size_t copy);

}  // namespace redforge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redforge/geom.hpp"

namespace redforge {

/// Integer linear combination of the base variables (one per augmented root edge).
using LinearForm = std::vector<BigInt>;

std::string to_string(const LinearForm& f);

/**
 * Coordinates of a node's augmented graph as linear forms in the base
 * variables, plus the linear conditions (each form = 0) imposed on the way.
 * Graph-edge slots are keyed by edge identity; source and sink slots by vertex.
 */
struct CVector {
  std::size_t base_count = 0;
  std::vector<std::pair<ProvEdge, LinearForm>> edges;  // sorted by edge
  std::vector<LinearForm> source;                      // (s, i), i = 1..n
  std::vector<LinearForm> sink;                        // (i, t)
  std::vector<LinearForm> constraints;

  /// Form of an edge slot; the zero form when the edge is absent.
  LinearForm slot(const ProvEdge& e) const;
  bool has(const ProvEdge& e) const;
};

CVector cvector_init(const MultiGraph& root);
/// Applies one reduction; throws SlotMismatch when an edge of the pair has no slot.
CVector cvector_propagate(const CVector& c, const EdgePair& pair, Branch branch);
/// Initial vector pushed along the root -> v path.
CVector cvector_of(const ReductionTree& t, NodeId v);
/// Imposes c1 = c2 slot by slot; the result keeps the slots of c1.
CVector cvector_intersect(const CVector& a, const CVector& b);
/// Sets every edge slot outside `keep` to zero, recording the conditions.
CVector cvector_restrict(const CVector& c, const MultiGraph& keep);

/// Same condition span and every slot equal modulo it.
bool cvector_equivalent(const CVector& a, const CVector& b);

/// Nonzero edge-slot forms are linearly independent modulo the conditions.
bool cvector_forms_independent(const CVector& c);

/// Inflow minus outflow of graph-edge slots at v, reduced modulo the conditions.
LinearForm net_flow(const CVector& c, Vertex v);
/// a - b lies in the span of c's conditions.
bool equal_modulo(const CVector& c, const LinearForm& a, const LinearForm& b);

/**
 * Position of the (copy+1)-st edge (u, v) in the coordinate scheme that lists
 * the edges of the complete graph on `vertex_count` vertices lexicographically
 * and repeats the list once per copy (1-based).
 */
std::size_t slot_index(int vertex_count, Vertex u, Vertex v, std::size_t copy);

struct CVectorReport {
  bool holds = true;
  bool scope_verified = true;     // tree is order O
  std::size_t leaves_checked = 0;
  std::size_t pairs_checked = 0;
  std::string witness;
};

/**
 * Every leaf has independent nonzero forms, and for every pair of
 * full-dimensional leaves the intersected c-vector equals the first leaf's
 * vector restricted to the graph intersection (and the c-vector of that
 * intersection when it is itself a leaf).
 */
CVectorReport check_cvectors(const ReductionTree& t);

}  // namespace redforge

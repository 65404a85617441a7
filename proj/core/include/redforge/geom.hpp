#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "redforge/lp.hpp"
#include "redforge/poly.hpp"
#include "redforge/redtree.hpp"

namespace redforge {

/**
 * Coordinates of the augmented root graph: the m root edges by id, then the
 * source edges (s,1)..(s,n), then the sink edges (1,t)..(n,t).
 */
struct AugmentedLayout {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> root_edges;

  static AugmentedLayout of(const MultiGraph& root);
  std::size_t edge_count() const { return root_edges.size(); }
  std::size_t dim() const { return root_edges.size() + 2 * static_cast<std::size_t>(n); }
  std::size_t source_slot(Vertex i) const { return root_edges.size() + static_cast<std::size_t>(i - 1); }
  std::size_t sink_slot(Vertex i) const { return root_edges.size() + static_cast<std::size_t>(n + i - 1); }
};

/// A maximal path s -> v_1 -> ... -> v_k -> t of the augmented graph.
struct Route {
  std::vector<Vertex> vertices;  // v_1..v_k
  std::vector<ProvEdge> edges;   // graph edges between consecutive vertices

  auto operator<=>(const Route&) const = default;
};

std::string route_label(const Route& r);

/// All routes of the augmented graph, ordered by vertex sequence then edges.
std::vector<Route> routes(const MultiGraph& g);

/// 0/1 vector over the augmented root edges.
using FlowVertex = std::vector<std::uint8_t>;
using VertexSet = std::set<FlowVertex>;

/// Unit flow of a route of g, its edges unfolded into root edges by provenance.
FlowVertex route_vertex(const AugmentedLayout& layout, const Route& r);

/// The route (s, src), provenance edges in path order, (dst, t). Throws BadProvenance.
FlowVertex edge_route(const AugmentedLayout& layout, const ProvEdge& e);

/// Images of the edges of g.
VertexSet edge_routes(const AugmentedLayout& layout, const MultiGraph& g);

/// Vertices of the flow polytope of the augmented g, in root coordinates.
VertexSet polytope_vertices(const AugmentedLayout& layout, const MultiGraph& g);
VertexSet leaf_vertices(const ReductionTree& t, NodeId h);

std::string vertex_label(const AugmentedLayout& layout, const FlowVertex& v);

/// Affine dimension; -1 for the empty set.
int polytope_dim(const VertexSet& vertices);

struct DimCheck {
  bool holds = true;
  int dim = 0;
  int expected = 0;             // |E| + n - 1
  std::size_t vertex_count = 0;
  bool simplex = false;         // vertex_count == dim + 1
};

DimCheck check_dim_formula(const AugmentedLayout& layout, const MultiGraph& g);
DimCheck check_dim_formula(const ReductionTree& t, NodeId h);

struct FaceCertificate {
  NodeId first = 0;
  NodeId second = 0;
  std::size_t shared_vertices = 0;
  bool coordinates_match = true;   // shared vertices = vertices of the graph intersection
  LpSolution lp;
  bool certificate_verified = false;
  bool is_face = false;            // optimum 0 and certificate verified

  bool ok() const { return coordinates_match && is_face; }
};

/// Certifies conv(Va) ∩ conv(Vb) = conv(Va ∩ Vb) by maximizing the barycentric
/// mass outside the shared vertices over points of both hulls.
FaceCertificate certify_face(const AugmentedLayout& layout, const VertexSet& a, const VertexSet& b);

struct TriangulationReport {
  bool holds = true;
  bool scope_verified = true;       // tree is order O
  std::size_t pairs_checked = 0;
  bool simplices = true;            // each full-dimensional leaf is a simplex of the right dimension
  bool reduction_lemma = true;      // V(G) = V(G1) ∪ V(G2), V(G1) ∩ V(G2) = V(G3) at every internal node
  bool subsets = true;              // G1∩G2 ⊆ G1∩G3 implies vertex containment
  std::vector<FaceCertificate> certificates;
  std::string witness;
};

TriangulationReport verify_triangulation(const ReductionTree& t);

struct ShellingReport {
  bool holds = true;
  std::vector<std::size_t> attachment_facets;  // per full-dimensional leaf in DFS order
  std::vector<long long> h_vector;             // s_k = leaves attaching on k facets
  bool matches_preceding_facets = true;
  std::optional<std::size_t> failing_index;
  std::string witness;
};

ShellingReport verify_shelling(const ReductionTree& t);

/// Σ_k s_k β^k of a shelling report.
Polynomial h_from_shelling(const ShellingReport& r);

}  // namespace redforge

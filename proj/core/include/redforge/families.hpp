#pragma once

#include <vector>

#include "redforge/multigraph.hpp"

namespace redforge {

MultiGraph path_graph(int n);
MultiGraph complete_graph(int n);
/// ([5], {(1,3),(2,3),(3,4),(3,5)}).
MultiGraph star_graph_35();

/// Connected as an undirected multigraph (a single vertex counts).
bool is_connected(const MultiGraph& g);

/**
 * Every connected loopless multigraph on [n], 1 <= n <= max_vertices, with at
 * most max_edges edges; vertex labels matter, parallel edges allowed. Ordered
 * by n, then edge count, then endpoint list.
 */
std::vector<MultiGraph> connected_sweep(int max_vertices, int max_edges);

}  // namespace redforge

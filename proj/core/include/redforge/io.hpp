#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "redforge/embed.hpp"
#include "redforge/geom.hpp"
#include "redforge/redtree.hpp"

namespace redforge {

using Json = nlohmann::ordered_json;

/// {"n": int, "edges": [[i, j], ...]}; throws ParseError or InvalidGraph.
MultiGraph graph_from_json(const Json& j);
MultiGraph parse_graph(std::string_view text);
Json graph_to_json(const MultiGraph& g, bool with_provenance = false);

/// [{"coeff", "beta": {"i": e}, "t": e, "x": {"i,j": e}}, ...] in monomial order;
/// coefficients beyond 64 bits are decimal strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// Nested nodes {path, branch, graph, step: {i, j, k, label}, children: [L, M, R]}.
Json tree_to_json(const ReductionTree& t);
/// Leaves in DFS order with index, path, edge count and balance.
Json leaves_to_json(const ReductionTree& t);
Json census_to_json(const std::map<std::size_t, std::size_t>& census);

Json verdict_to_json(const ReductionTree& t, const EmbedVerdict& v);
Json certificate_to_json(const ReductionTree& t, const FaceCertificate& c);

/// Step labels by node path, e.g. {"": "124", "L": "134#0.1"}.
ReplayScript script_of(const ReductionTree& t);
Json replay_to_json(const ReductionTree& t);
/// Returns the root graph and the script.
std::pair<MultiGraph, ReplayScript> replay_from_json(const Json& j);

/// One "path ijkX" line per reduction, X the branch taken below.
std::string replay_lines(const ReductionTree& t);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);
Json parse_json(std::string_view text);

}  // namespace redforge

#include "redforge/multigraph.hpp"

#include <algorithm>
#include <sstream>

#include "redforge/errors.hpp"

namespace redforge {

char branch_char(Branch b) {
  switch (b) {
    case Branch::L: return 'L';
    case Branch::M: return 'M';
    case Branch::R: return 'R';
  }
  return '?';
}

Branch branch_from_char(char c) {
  switch (c) {
    case 'L': return Branch::L;
    case 'M': return Branch::M;
    case 'R': return Branch::R;
    default: throw ParseError(std::string("bad branch letter '") + c + "'");
  }
}

std::uint64_t root_fingerprint(int n, std::span<const std::pair<Vertex, Vertex>> sorted_endpoints) {
  // FNV-1a over (n, endpoints)
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (const auto& [s, d] : sorted_endpoints) {
    mix(static_cast<std::uint64_t>(s));
    mix(static_cast<std::uint64_t>(d));
  }
  return h;
}

MultiGraph::MultiGraph(int n, std::vector<ProvEdge> edges, std::uint64_t fingerprint)
    : n_(n), edges_(std::move(edges)), fingerprint_(fingerprint) {
  if (n_ < 0) throw InvalidGraph("negative vertex count");
  for (auto& e : edges_) {
    if (e.src == e.dst) throw InvalidGraph("loop at vertex " + std::to_string(e.src));
    if (e.src > e.dst) throw InvalidGraph("edge " + to_string(e) + " is not oriented src < dst");
    if (e.src < 1 || e.dst > n_) throw InvalidGraph("edge " + to_string(e) + " outside [1," + std::to_string(n_) + "]");
    if (e.provenance.empty()) throw InvalidGraph("edge " + to_string(e) + " has empty provenance");
    std::sort(e.provenance.begin(), e.provenance.end());
  }
  std::sort(edges_.begin(), edges_.end());
}

MultiGraph MultiGraph::root(int n, std::span<const std::pair<Vertex, Vertex>> endpoints) {
  std::vector<std::pair<Vertex, Vertex>> sorted(endpoints.begin(), endpoints.end());
  for (const auto& [s, d] : sorted) {
    if (s == d) throw InvalidGraph("loop at vertex " + std::to_string(s));
    if (s > d) throw InvalidGraph("edge (" + std::to_string(s) + "," + std::to_string(d) + ") is not oriented src < dst");
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<ProvEdge> edges;
  edges.reserve(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    edges.push_back(ProvEdge{sorted[k].first, sorted[k].second, {static_cast<EdgeId>(k)}});
  }
  return MultiGraph(n, std::move(edges), redforge::root_fingerprint(n, sorted));
}

MultiGraph MultiGraph::root(int n, std::initializer_list<std::pair<Vertex, Vertex>> endpoints) {
  return root(n, std::span<const std::pair<Vertex, Vertex>>(endpoints.begin(), endpoints.size()));
}

std::size_t MultiGraph::multiplicity(const ProvEdge& e) const {
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t MultiGraph::count_endpoints(Vertex src, Vertex dst) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const ProvEdge& e) {
    return e.src == src && e.dst == dst;
  }));
}

std::vector<std::pair<Vertex, Vertex>> MultiGraph::endpoints() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.src, e.dst);
  return out;
}

MultiGraph MultiGraph::without(const ProvEdge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw EdgeAbsent("edge " + to_string(e) + " not in graph");
  MultiGraph out = *this;
  out.edges_.erase(out.edges_.begin() + (it - edges_.begin()));
  return out;
}

MultiGraph MultiGraph::with(ProvEdge e) const {
  if (e.src >= e.dst || e.src < 1 || e.dst > n_) throw InvalidGraph("cannot add edge " + to_string(e));
  std::sort(e.provenance.begin(), e.provenance.end());
  MultiGraph out = *this;
  auto it = std::upper_bound(out.edges_.begin(), out.edges_.end(), e);
  out.edges_.insert(it, std::move(e));
  return out;
}

const MultiGraph& ReductionResult::child(Branch b) const {
  switch (b) {
    case Branch::L: return left;
    case Branch::M: return middle;
    case Branch::R: return right;
  }
  return left;
}

std::vector<EdgeId> provenance_union(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  std::vector<EdgeId> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool provenance_contains(std::span<const EdgeId> super, std::span<const EdgeId> sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ProvEdge merged_edge(const EdgePair& pair) {
  return ProvEdge{pair.first.src, pair.second.dst, provenance_union(pair.first.provenance, pair.second.provenance)};
}

namespace {

void check_composable(const MultiGraph& g, const ProvEdge& a, const ProvEdge& b) {
  if (a.dst != b.src || !(a.src < a.dst && b.src < b.dst)) {
    throw NotComposable("edges " + to_string(a) + " and " + to_string(b) + " do not form a path i<j<k");
  }
  if (!g.contains(a)) throw EdgeAbsent("edge " + to_string(a) + " not in graph");
  if (!g.contains(b)) throw EdgeAbsent("edge " + to_string(b) + " not in graph");
}

}  // namespace

ReductionResult reduce(const MultiGraph& g, const ProvEdge& a, const ProvEdge& b) {
  check_composable(g, a, b);
  ProvEdge ik{a.src, b.dst, provenance_union(a.provenance, b.provenance)};
  MultiGraph without_a = g.without(a);
  MultiGraph without_b = g.without(b);
  MultiGraph without_both = without_a.without(b);
  return ReductionResult{without_b.with(ik), without_a.with(ik), without_both.with(ik)};
}

MultiGraph reduce_branch(const MultiGraph& g, const EdgePair& pair, Branch branch) {
  check_composable(g, pair.first, pair.second);
  ProvEdge ik = merged_edge(pair);
  switch (branch) {
    case Branch::L: return g.without(pair.second).with(std::move(ik));
    case Branch::R: return g.without(pair.first).with(std::move(ik));
    case Branch::M: return g.without(pair.first).without(pair.second).with(std::move(ik));
  }
  return g;
}

bool is_alternating(const MultiGraph& g, Vertex v) {
  bool incoming = false;
  bool outgoing = false;
  for (const auto& e : g.edges()) {
    if (e.dst == v) incoming = true;
    if (e.src == v) outgoing = true;
  }
  return !(incoming && outgoing);
}

std::optional<Vertex> first_nonalternating(const MultiGraph& g) {
  std::vector<std::uint8_t> in(g.n() + 1, 0), out(g.n() + 1, 0);
  for (const auto& e : g.edges()) {
    in[e.dst] = 1;
    out[e.src] = 1;
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (in[v] && out[v]) return v;
  }
  return std::nullopt;
}

bool is_alternating_graph(const MultiGraph& g) { return !first_nonalternating(g).has_value(); }

std::optional<EdgePair> next_reduction_O(const MultiGraph& g) {
  auto v = first_nonalternating(g);
  if (!v) return std::nullopt;
  // Edges are sorted by (src, dst, provenance): the first incoming edge seen has
  // the minimal source and, among its parallel copies, the smallest provenance.
  const ProvEdge* in = nullptr;
  const ProvEdge* out = nullptr;
  for (const auto& e : g.edges()) {
    if (e.dst == *v && in == nullptr) in = &e;
    if (e.src == *v && (out == nullptr || e.dst > out->dst)) out = &e;
  }
  return EdgePair{*in, *out};
}

std::vector<EdgePair> reducible_pairs(const MultiGraph& g) {
  std::vector<EdgePair> out;
  const auto edges = g.edges();
  for (std::size_t p = 0; p < edges.size(); ++p) {
    // skip identical parallel copies: reducing either gives the same children
    if (p > 0 && edges[p] == edges[p - 1]) continue;
    for (std::size_t q = 0; q < edges.size(); ++q) {
      if (q > 0 && edges[q] == edges[q - 1]) continue;
      if (edges[p].dst == edges[q].src) out.push_back(EdgePair{edges[p], edges[q]});
    }
  }
  return out;
}

MultiGraph graph_intersection(const MultiGraph& a, const MultiGraph& b) {
  if (a.n() != b.n() || a.root_fingerprint() != b.root_fingerprint()) {
    throw RootMismatch("graphs do not share a root");
  }
  std::vector<ProvEdge> common;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(common));
  return MultiGraph(a.n(), std::move(common), a.root_fingerprint());
}

bool is_edge_subset(const MultiGraph& sub, const MultiGraph& super) {
  return std::includes(super.edges().begin(), super.edges().end(), sub.edges().begin(), sub.edges().end());
}

std::vector<ProvEdge> edge_difference(const MultiGraph& super, const MultiGraph& sub) {
  std::vector<ProvEdge> out;
  std::set_difference(super.edges().begin(), super.edges().end(), sub.edges().begin(), sub.edges().end(),
                      std::back_inserter(out));
  return out;
}

bool is_derived_from(const ProvEdge& e, EdgeId b) {
  return std::binary_search(e.provenance.begin(), e.provenance.end(), b);
}

bool is_derived_from_sum(const ProvEdge& e, EdgeId a, EdgeId b) {
  std::vector<EdgeId> ab = a <= b ? std::vector<EdgeId>{a, b} : std::vector<EdgeId>{b, a};
  return provenance_contains(e.provenance, ab);
}

bool is_derived_from(const ProvEdge& e, const ProvEdge& b) { return provenance_contains(e.provenance, b.provenance); }

bool is_derived_from_sum(const ProvEdge& e, const ProvEdge& a, const ProvEdge& b) {
  return provenance_contains(e.provenance, provenance_union(a.provenance, b.provenance));
}

std::string to_string(const ProvEdge& e) {
  std::ostringstream os;
  os << '(' << e.src << ',' << e.dst << ")[";
  for (std::size_t k = 0; k < e.provenance.size(); ++k) os << (k ? "," : "") << e.provenance[k];
  os << ']';
  return os.str();
}

std::string to_string(const MultiGraph& g) {
  std::ostringstream os;
  os << "([" << g.n() << "], {";
  for (std::size_t k = 0; k < g.edge_count(); ++k) os << (k ? " " : "") << to_string(g.edges()[k]);
  os << "})";
  return os.str();
}

std::string to_string(const EdgePair& p) { return to_string(p.first) + "," + to_string(p.second); }

std::optional<std::size_t> copy_index(const MultiGraph& g, const ProvEdge& e) {
  std::size_t copy = 0;
  for (const auto& f : g.edges()) {
    if (f.src != e.src || f.dst != e.dst) continue;
    if (f == e) return copy;
    ++copy;
  }
  return std::nullopt;
}

std::optional<ProvEdge> edge_by_copy(const MultiGraph& g, Vertex src, Vertex dst, std::size_t copy) {
  std::size_t seen = 0;
  for (const auto& f : g.edges()) {
    if (f.src != src || f.dst != dst) continue;
    if (seen == copy) return f;
    ++seen;
  }
  return std::nullopt;
}

}  // namespace redforge

#include "redforge/geom.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "redforge/errors.hpp"

namespace redforge {

namespace {

std::string vertex_sequence(const std::vector<Vertex>& vs) {
  bool wide = std::any_of(vs.begin(), vs.end(), [](Vertex v) { return v > 9; });
  std::string s = "s";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (wide && i > 0) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "t";
}

// Root edge ids of e in path order from e.src to e.dst.
std::vector<EdgeId> chain(const AugmentedLayout& layout, const ProvEdge& e) {
  std::vector<EdgeId> ids(e.provenance.begin(), e.provenance.end());
  for (EdgeId id : ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= layout.edge_count()) {
      throw BadProvenance("provenance id " + std::to_string(id) + " outside the root of " + to_string(e));
    }
  }
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) { return layout.root_edges[a] < layout.root_edges[b]; });
  Vertex at = e.src;
  for (EdgeId id : ids) {
    if (layout.root_edges[id].first != at) {
      throw BadProvenance("provenance of " + to_string(e) + " does not form a path");
    }
    at = layout.root_edges[id].second;
  }
  if (at != e.dst) throw BadProvenance("provenance of " + to_string(e) + " does not end at its target");
  return ids;
}

}  // namespace

AugmentedLayout AugmentedLayout::of(const MultiGraph& root) { return AugmentedLayout{root.n(), root.endpoints()}; }

std::string route_label(const Route& r) { return vertex_sequence(r.vertices); }

std::vector<Route> routes(const MultiGraph& g) {
  std::vector<Route> out;
  Route cur;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    cur.vertices.push_back(v);
    out.push_back(cur);
    for (const auto& e : g.edges()) {
      if (e.src != v) continue;
      cur.edges.push_back(e);
      walk(e.dst);
      cur.edges.pop_back();
    }
    cur.vertices.pop_back();
  };
  for (Vertex v = 1; v <= g.n(); ++v) walk(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FlowVertex route_vertex(const AugmentedLayout& layout, const Route& r) {
  if (r.vertices.empty()) throw Error("empty route");
  FlowVertex v(layout.dim(), 0);
  auto mark = [&](std::size_t slot) {
    if (v[slot]) throw BadProvenance("route " + route_label(r) + " reuses a root edge");
    v[slot] = 1;
  };
  mark(layout.source_slot(r.vertices.front()));
  mark(layout.sink_slot(r.vertices.back()));
  for (const auto& e : r.edges) {
    for (EdgeId id : chain(layout, e)) mark(static_cast<std::size_t>(id));
  }
  return v;
}

FlowVertex edge_route(const AugmentedLayout& layout, const ProvEdge& e) {
  FlowVertex v(layout.dim(), 0);
  v[layout.source_slot(e.src)] = 1;
  v[layout.sink_slot(e.dst)] = 1;
  for (EdgeId id : chain(layout, e)) v[static_cast<std::size_t>(id)] = 1;
  return v;
}

VertexSet edge_routes(const AugmentedLayout& layout, const MultiGraph& g) {
  VertexSet out;
  for (const auto& e : g.edges()) out.insert(edge_route(layout, e));
  return out;
}

VertexSet polytope_vertices(const AugmentedLayout& layout, const MultiGraph& g) {
  VertexSet out;
  for (const auto& r : routes(g)) out.insert(route_vertex(layout, r));
  return out;
}

VertexSet leaf_vertices(const ReductionTree& t, NodeId h) {
  return polytope_vertices(AugmentedLayout::of(t.root_graph()), t.graph(h));
}

std::string vertex_label(const AugmentedLayout& layout, const FlowVertex& v) {
  std::vector<Vertex> seq;
  for (Vertex i = 1; i <= layout.n; ++i) {
    if (v.at(layout.source_slot(i))) seq.push_back(i);
  }
  if (seq.size() != 1) return "?";
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t id = 0; id < layout.edge_count(); ++id) {
      if (v[id] && layout.root_edges[id].first == seq.back()) {
        seq.push_back(layout.root_edges[id].second);
        moved = true;
        break;
      }
    }
  }
  return vertex_sequence(seq);
}

int polytope_dim(const VertexSet& vertices) {
  if (vertices.empty()) return -1;
  std::vector<FlowVertex> vs(vertices.begin(), vertices.end());
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < vs.size(); ++k) {
    std::vector<Rational> r(vs[k].size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(vs[k][i]) - static_cast<int>(vs[0][i]);
    rows.push_back(std::move(r));
  }
  return static_cast<int>(rank(std::move(rows)));
}

DimCheck check_dim_formula(const AugmentedLayout& layout, const MultiGraph& g) {
  DimCheck c;
  auto vs = polytope_vertices(layout, g);
  c.vertex_count = vs.size();
  c.dim = polytope_dim(vs);
  c.expected = static_cast<int>(g.edge_count()) + g.n() - 1;
  c.holds = c.dim == c.expected;
  c.simplex = static_cast<int>(c.vertex_count) == c.dim + 1;
  return c;
}

DimCheck check_dim_formula(const ReductionTree& t, NodeId h) {
  return check_dim_formula(AugmentedLayout::of(t.root_graph()), t.graph(h));
}

FaceCertificate certify_face(const AugmentedLayout& layout, const VertexSet& a, const VertexSet& b) {
  FaceCertificate cert;
  std::vector<FlowVertex> va(a.begin(), a.end());
  std::vector<FlowVertex> vb(b.begin(), b.end());
  for (const auto& v : va) cert.shared_vertices += b.count(v);

  const std::size_t n = va.size() + vb.size();
  LinearProgram lp;
  lp.c.assign(n, Rational(0));
  for (std::size_t k = 0; k < va.size(); ++k) lp.c[k] = b.count(va[k]) ? 0 : 1;
  for (std::size_t k = 0; k < vb.size(); ++k) lp.c[va.size() + k] = a.count(vb[k]) ? 0 : 1;

  std::vector<Rational> mass_a(n), mass_b(n);
  for (std::size_t k = 0; k < va.size(); ++k) mass_a[k] = 1;
  for (std::size_t k = 0; k < vb.size(); ++k) mass_b[va.size() + k] = 1;
  lp.A.push_back(std::move(mass_a));
  lp.b.push_back(1);
  lp.A.push_back(std::move(mass_b));
  lp.b.push_back(1);
  for (std::size_t d = 0; d < layout.dim(); ++d) {
    std::vector<Rational> row(n);
    for (std::size_t k = 0; k < va.size(); ++k) row[k] = va[k][d];
    for (std::size_t k = 0; k < vb.size(); ++k) row[va.size() + k] = -static_cast<int>(vb[k][d]);
    lp.A.push_back(std::move(row));
    lp.b.push_back(0);
  }
  cert.lp = solve_lp(lp);
  cert.certificate_verified = verify_optimality(lp, cert.lp);
  cert.is_face = cert.certificate_verified && cert.lp.value == 0;
  return cert;
}

TriangulationReport verify_triangulation(const ReductionTree& t) {
  TriangulationReport rep;
  rep.scope_verified = t.is_order_O();
  const auto layout = AugmentedLayout::of(t.root_graph());
  std::map<MultiGraph, VertexSet> memo;
  auto vertices_of = [&](const MultiGraph& g) -> const VertexSet& {
    auto it = memo.find(g);
    if (it == memo.end()) it = memo.emplace(g, polytope_vertices(layout, g)).first;
    return it->second;
  };
  auto fail = [&](bool& flag, std::string why) {
    flag = false;
    if (rep.witness.empty()) rep.witness = std::move(why);
  };

  const auto full = full_dim_leaves_dfs(t);
  for (NodeId f : full) {
    auto c = check_dim_formula(layout, t.graph(f));
    if (!c.holds || !c.simplex) fail(rep.simplices, "leaf " + t.path(f) + " is not a simplex of dimension |E|+n-1");
  }

  for (std::size_t i = 0; i < full.size(); ++i) {
    for (std::size_t j = i + 1; j < full.size(); ++j) {
      const auto& a = vertices_of(t.graph(full[i]));
      const auto& b = vertices_of(t.graph(full[j]));
      auto cert = certify_face(layout, a, b);
      cert.first = full[i];
      cert.second = full[j];
      VertexSet shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(shared, shared.end()));
      cert.coordinates_match = shared == vertices_of(graph_intersection(t.graph(full[i]), t.graph(full[j])));
      ++rep.pairs_checked;
      if (!cert.ok() && rep.witness.empty()) {
        rep.witness = "leaves " + t.path(full[i]) + " and " + t.path(full[j]) +
                      (cert.coordinates_match ? " meet outside a common face" : " share vertices not of their graph intersection");
      }
      rep.certificates.push_back(std::move(cert));
    }
  }

  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.is_leaf(v)) continue;
    const auto& all = vertices_of(t.graph(v));
    const auto& left = vertices_of(t.graph(t.child(v, Branch::L)));
    const auto& right = vertices_of(t.graph(t.child(v, Branch::R)));
    const auto& mid = vertices_of(t.graph(t.child(v, Branch::M)));
    VertexSet uni, cap;
    std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::inserter(uni, uni.end()));
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::inserter(cap, cap.end()));
    if (uni != all || cap != mid) fail(rep.reduction_lemma, "reduction at " + t.path(v) + " does not split the vertex set");
  }

  const auto leaves = leaves_dfs(t);
  for (std::size_t x = 0; x < leaves.size() && rep.subsets; ++x) {
    const auto& g1 = t.graph(leaves[x]);
    for (std::size_t y = 0; y < leaves.size() && rep.subsets; ++y) {
      if (y == x) continue;
      auto g12 = graph_intersection(g1, t.graph(leaves[y]));
      for (std::size_t z = 0; z < leaves.size(); ++z) {
        if (z == x || z == y) continue;
        auto g13 = graph_intersection(g1, t.graph(leaves[z]));
        if (!is_edge_subset(g12, g13)) continue;
        const auto& small = vertices_of(g12);
        const auto& big = vertices_of(g13);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
          fail(rep.subsets, "intersections at leaves " + t.path(leaves[x]) + "," + t.path(leaves[y]) + "," +
                                t.path(leaves[z]) + " break vertex containment");
          break;
        }
      }
    }
  }

  rep.holds = rep.simplices && rep.reduction_lemma && rep.subsets &&
              std::all_of(rep.certificates.begin(), rep.certificates.end(), [](const auto& c) { return c.ok(); });
  return rep;
}

ShellingReport verify_shelling(const ReductionTree& t) {
  ShellingReport rep;
  const auto layout = AugmentedLayout::of(t.root_graph());
  const auto full = full_dim_leaves_dfs(t);
  std::vector<VertexSet> vs;
  for (NodeId f : full) vs.push_back(polytope_vertices(layout, t.graph(f)));

  for (std::size_t i = 0; i < full.size(); ++i) {
    std::set<VertexSet> facets;
    std::vector<VertexSet> faces;
    for (std::size_t j = 0; j < i; ++j) {
      VertexSet cap;
      std::set_intersection(vs[i].begin(), vs[i].end(), vs[j].begin(), vs[j].end(), std::inserter(cap, cap.end()));
      if (cap.size() + 1 == vs[i].size()) facets.insert(cap);
      faces.push_back(std::move(cap));
    }
    auto fail = [&](std::string why) {
      if (!rep.holds) return;
      rep.holds = false;
      rep.failing_index = i;
      rep.witness = std::move(why);
    };
    if (i > 0 && facets.empty()) fail("leaf " + t.path(full[i]) + " attaches on no facet");
    for (const auto& face : faces) {
      bool covered = std::any_of(facets.begin(), facets.end(), [&](const VertexSet& f) {
        return std::includes(f.begin(), f.end(), face.begin(), face.end());
      });
      if (!covered) {
        fail("leaf " + t.path(full[i]) + " attaches on a face of dimension " + std::to_string(polytope_dim(face)) +
             " outside its attaching facets");
        break;
      }
    }
    std::multiset<VertexSet> from_tree;
    for (NodeId p : preceding_facets(t, full[i])) from_tree.insert(polytope_vertices(layout, t.graph(p)));
    if (from_tree != std::multiset<VertexSet>(facets.begin(), facets.end())) rep.matches_preceding_facets = false;

    rep.attachment_facets.push_back(facets.size());
    if (rep.h_vector.size() <= facets.size()) rep.h_vector.resize(facets.size() + 1, 0);
    ++rep.h_vector[facets.size()];
  }
  return rep;
}

Polynomial h_from_shelling(const ShellingReport& r) {
  Polynomial h;
  for (std::size_t k = 0; k < r.h_vector.size(); ++k) {
    h += Polynomial::constant(r.h_vector[k]) * Polynomial::variable(Var::beta_merged()).pow(static_cast<unsigned>(k));
  }
  return h;
}

}  // namespace redforge

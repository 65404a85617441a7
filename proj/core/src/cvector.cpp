#include "redforge/cvector.hpp"

#include <algorithm>
#include <map>

#include "redforge/errors.hpp"

namespace redforge {

namespace {

LinearForm unit(std::size_t size, std::size_t i) {
  LinearForm f(size, BigInt(0));
  f[i] = 1;
  return f;
}

LinearForm minus(const LinearForm& a, const LinearForm& b) {
  LinearForm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero(const LinearForm& f) {
  return std::all_of(f.begin(), f.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<std::vector<Rational>> as_rows(const std::vector<LinearForm>& forms) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    std::vector<Rational> r;
    r.reserve(f.size());
    for (const auto& x : f) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t form_rank(const std::vector<LinearForm>& forms) { return rank(as_rows(forms)); }

std::size_t find_slot(const CVector& c, const ProvEdge& e) {
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    if (c.edges[k].first == e) return k;
  }
  return c.edges.size();
}

void insert_sorted(CVector& c, ProvEdge e, LinearForm f) {
  auto it = std::upper_bound(c.edges.begin(), c.edges.end(), e,
                             [](const ProvEdge& key, const auto& slot) { return key < slot.first; });
  c.edges.emplace(it, std::move(e), std::move(f));
}

}  // namespace

std::string to_string(const LinearForm& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    BigInt mag = f[i] < 0 ? BigInt(-f[i]) : f[i];
    s += s.empty() ? (f[i] < 0 ? "-" : "") : (f[i] < 0 ? " - " : " + ");
    if (mag != 1) s += mag.str() + "*";
    s += "x" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

LinearForm CVector::slot(const ProvEdge& e) const {
  std::size_t k = find_slot(*this, e);
  return k == edges.size() ? LinearForm(base_count, BigInt(0)) : edges[k].second;
}

bool CVector::has(const ProvEdge& e) const { return find_slot(*this, e) != edges.size(); }

CVector cvector_init(const MultiGraph& root) {
  const auto layout = AugmentedLayout::of(root);
  CVector c;
  c.base_count = layout.dim();
  for (const auto& e : root.edges()) {
    if (e.provenance.size() != 1) throw SlotMismatch("c-vectors start from a root graph");
    c.edges.emplace_back(e, unit(c.base_count, static_cast<std::size_t>(e.provenance.front())));
  }
  for (Vertex i = 1; i <= root.n(); ++i) {
    c.source.push_back(unit(c.base_count, layout.source_slot(i)));
    c.sink.push_back(unit(c.base_count, layout.sink_slot(i)));
  }
  return c;
}

CVector cvector_propagate(const CVector& c, const EdgePair& pair, Branch branch) {
  std::size_t k1 = find_slot(c, pair.first);
  std::size_t k2 = find_slot(c, pair.second);
  if (k1 == c.edges.size() || k2 == c.edges.size()) {
    throw SlotMismatch("reduction " + to_string(pair) + " uses an edge without a slot");
  }
  const LinearForm c1 = c.edges[k1].second;
  const LinearForm c2 = c.edges[k2].second;
  CVector out = c;
  auto drop = [&](const ProvEdge& e) { out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(find_slot(out, e))); };
  switch (branch) {
    case Branch::L:
      out.edges[k1].second = minus(c1, c2);
      drop(pair.second);
      insert_sorted(out, merged_edge(pair), c2);
      break;
    case Branch::R:
      out.edges[k2].second = minus(c2, c1);
      drop(pair.first);
      insert_sorted(out, merged_edge(pair), c1);
      break;
    case Branch::M:
      drop(pair.first);
      drop(pair.second);
      insert_sorted(out, merged_edge(pair), c1);
      out.constraints.push_back(minus(c1, c2));
      break;
  }
  return out;
}

CVector cvector_of(const ReductionTree& t, NodeId v) {
  CVector c = cvector_init(t.root_graph());
  for (const auto& step : t.path_steps(v)) c = cvector_propagate(c, step.pair, step.branch);
  return c;
}

CVector cvector_intersect(const CVector& a, const CVector& b) {
  if (a.base_count != b.base_count) throw SlotMismatch("c-vectors over different base variables");
  CVector out = a;
  out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
  for (const auto& [e, f] : a.edges) out.constraints.push_back(minus(f, b.slot(e)));
  for (const auto& [e, f] : b.edges) {
    if (!a.has(e)) out.constraints.push_back(f);
  }
  for (std::size_t i = 0; i < a.source.size(); ++i) {
    out.constraints.push_back(minus(a.source[i], b.source[i]));
    out.constraints.push_back(minus(a.sink[i], b.sink[i]));
  }
  return out;
}

CVector cvector_restrict(const CVector& c, const MultiGraph& keep) {
  CVector out = c;
  out.edges.clear();
  MultiGraph remaining = keep;
  for (const auto& [e, f] : c.edges) {
    if (remaining.contains(e)) {
      out.edges.emplace_back(e, f);
      remaining = remaining.without(e);
    } else {
      out.constraints.push_back(f);
    }
  }
  return out;
}

bool equal_modulo(const CVector& c, const LinearForm& a, const LinearForm& b) {
  LinearForm d = minus(a, b);
  if (is_zero(d)) return true;
  auto with = c.constraints;
  with.push_back(std::move(d));
  return form_rank(with) == form_rank(c.constraints);
}

bool cvector_equivalent(const CVector& a, const CVector& b) {
  if (a.base_count != b.base_count) return false;
  const std::size_t ra = form_rank(a.constraints);
  if (ra != form_rank(b.constraints)) return false;
  auto both = a.constraints;
  both.insert(both.end(), b.constraints.begin(), b.constraints.end());
  if (form_rank(both) != ra) return false;
  for (const auto& [e, f] : a.edges) {
    if (!equal_modulo(a, f, b.slot(e))) return false;
  }
  for (const auto& [e, f] : b.edges) {
    if (!equal_modulo(a, a.slot(e), f)) return false;
  }
  for (std::size_t i = 0; i < a.source.size(); ++i) {
    if (!equal_modulo(a, a.source[i], b.source[i]) || !equal_modulo(a, a.sink[i], b.sink[i])) return false;
  }
  return true;
}

bool cvector_forms_independent(const CVector& c) {
  std::vector<LinearForm> forms;
  for (const auto& [e, f] : c.edges) {
    if (!is_zero(f)) forms.push_back(f);
  }
  const std::size_t base = form_rank(c.constraints);
  auto all = c.constraints;
  all.insert(all.end(), forms.begin(), forms.end());
  return form_rank(all) == base + forms.size();
}

LinearForm net_flow(const CVector& c, Vertex v) {
  LinearForm f(c.base_count, BigInt(0));
  for (const auto& [e, form] : c.edges) {
    if (e.dst == v) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += form[i];
    }
    if (e.src == v) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] -= form[i];
    }
  }
  return f;
}

std::size_t slot_index(int vertex_count, Vertex u, Vertex v, std::size_t copy) {
  if (u < 1 || v <= u || v > vertex_count) throw SlotMismatch("edge outside the complete graph");
  const auto N = static_cast<std::size_t>(vertex_count);
  const std::size_t pairs = N * (N - 1) / 2;
  std::size_t b = 0;
  for (Vertex a = 1; a < u; ++a) b += N - static_cast<std::size_t>(a);
  b += static_cast<std::size_t>(v - u);
  return copy * pairs + b;
}

CVectorReport check_cvectors(const ReductionTree& t) {
  CVectorReport r;
  r.scope_verified = t.is_order_O();
  std::map<NodeId, CVector> cache;
  std::map<MultiGraph, NodeId> leaf_of;
  for (NodeId l : leaves_dfs(t)) {
    cache.emplace(l, cvector_of(t, l));
    leaf_of.emplace(t.graph(l), l);
    ++r.leaves_checked;
    if (r.holds && !cvector_forms_independent(cache.at(l))) {
      r.holds = false;
      r.witness = "dependent forms at leaf '" + t.path(l) + "'";
    }
  }
  const auto full = full_dim_leaves_dfs(t);
  for (std::size_t i = 0; i < full.size() && r.holds; ++i) {
    for (std::size_t j = i + 1; j < full.size() && r.holds; ++j) {
      ++r.pairs_checked;
      const auto& a = cache.at(full[i]);
      const auto meet = graph_intersection(t.graph(full[i]), t.graph(full[j]));
      const auto glued = cvector_intersect(a, cache.at(full[j]));
      bool ok = cvector_equivalent(glued, cvector_restrict(a, meet));
      if (auto it = leaf_of.find(meet); ok && it != leaf_of.end()) ok = cvector_equivalent(glued, cache.at(it->second));
      if (!ok) {
        r.holds = false;
        r.witness = "leaves '" + t.path(full[i]) + "' and '" + t.path(full[j]) + "'";
      }
    }
  }
  return r;
}

}  // namespace redforge

#pragma once

// Slow, direct re-implementations used as independent references in tests.
// They share no code with the library beyond converting results to its types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "redforge/geom.hpp"
#include "redforge/poly.hpp"
#include "redforge/redtree.hpp"

namespace oracle {

using Edge = std::pair<int, int>;
using Edges = std::vector<Edge>;  // kept sorted

/// β-index multiset and t degree of one term of Q(𝔟, t) at x = 1.
using TermKey = std::pair<std::vector<int>, int>;
using TermCounts = std::map<TermKey, long long>;

/// Order O on endpoint multisets: smallest vertex with an edge in and an edge
/// out, incoming edge with the smallest source, outgoing with the largest target.
inline bool next_O(const Edges& e, int n, Edge& in, Edge& out) {
  for (int v = 1; v <= n; ++v) {
    int a = 0, b = 0;
    for (auto [x, y] : e) {
      if (y == v && (a == 0 || x < a)) a = x;
      if (x == v && y > b) b = y;
    }
    if (a != 0 && b != 0) {
      in = {a, v};
      out = {v, b};
      return true;
    }
  }
  return false;
}

/// Reduced form by repeated substitution x_ij x_jk -> x_ik x_ij + x_jk x_ik + β_i x_ik,
/// always rewriting the pair order O picks, specialized at x = 1 except x_1n = t.
inline TermCounts reduced_form_O(int n, Edges edges) {
  std::sort(edges.begin(), edges.end());
  struct Work {
    Edges e;
    std::vector<int> betas;
  };
  TermCounts out;
  std::vector<Work> stack{{edges, {}}};
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    Edge in, o;
    if (!next_O(w.e, n, in, o)) {
      int t = 0;
      for (auto e : w.e) t += (e == Edge{1, n}) ? 1 : 0;
      auto b = w.betas;
      std::sort(b.begin(), b.end());
      ++out[{b, n >= 2 ? t : 0}];
      continue;
    }
    Edges rest = w.e;
    rest.erase(std::find(rest.begin(), rest.end(), in));
    rest.erase(std::find(rest.begin(), rest.end(), o));
    const Edge ik{in.first, o.second};
    auto make = [&](std::vector<Edge> add, bool middle) {
      Work x{rest, w.betas};
      for (auto e : add) x.e.push_back(e);
      std::sort(x.e.begin(), x.e.end());
      if (middle) x.betas.push_back(in.first);
      stack.push_back(std::move(x));
    };
    make({ik, in}, false);
    make({o, ik}, false);
    make({ik}, true);
  }
  return out;
}

inline redforge::Polynomial to_polynomial(const TermCounts& c, bool merge_beta, bool with_t) {
  using namespace redforge;
  Polynomial p;
  for (const auto& [key, count] : c) {
    Monomial m;
    for (int b : key.first) m = m * Monomial::of(Var::beta(merge_beta ? 0 : b));
    if (with_t && key.second > 0) m = m * Monomial::of(Var::t(), static_cast<unsigned>(key.second));
    p += Polynomial::term(m, count);
  }
  return p;
}

/// Routes by subset enumeration: every edge subset of the augmented graph that
/// forms a single s -> t path. Returns 0/1 vectors in the library's coordinate
/// layout for a root graph (root edges by sorted position, then (s,i), then (i,t)).
inline std::set<std::vector<std::uint8_t>> routes_by_subsets(int n, Edges root_edges) {
  std::sort(root_edges.begin(), root_edges.end());
  struct Arc {
    int from, to;  // 0 = s, n + 1 = t
  };
  std::vector<Arc> arcs;
  for (auto [a, b] : root_edges) arcs.push_back({a, b});
  for (int i = 1; i <= n; ++i) arcs.push_back({0, i});
  for (int i = 1; i <= n; ++i) arcs.push_back({i, n + 1});
  std::set<std::vector<std::uint8_t>> out;
  const auto total = static_cast<std::uint32_t>(arcs.size());
  for (std::uint32_t mask = 1; mask < (1U << total); ++mask) {
    std::vector<int> indeg(static_cast<std::size_t>(n + 2)), outdeg(static_cast<std::size_t>(n + 2));
    for (std::uint32_t k = 0; k < total; ++k) {
      if (mask & (1U << k)) {
        ++outdeg[static_cast<std::size_t>(arcs[k].from)];
        ++indeg[static_cast<std::size_t>(arcs[k].to)];
      }
    }
    bool ok = outdeg[0] == 1 && indeg[0] == 0 && indeg[static_cast<std::size_t>(n + 1)] == 1 &&
              outdeg[static_cast<std::size_t>(n + 1)] == 0;
    for (int v = 1; v <= n && ok; ++v) {
      ok = indeg[static_cast<std::size_t>(v)] == outdeg[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] <= 1;
    }
    if (!ok) continue;
    // edges point upward, so degree conditions leave no cycles: walk from s
    int at = 0, used = 0;
    while (at != n + 1) {
      int next = -1;
      for (std::uint32_t k = 0; k < total; ++k) {
        if ((mask & (1U << k)) && arcs[k].from == at) next = arcs[k].to;
      }
      at = next;
      ++used;
    }
    if (used != std::popcount(mask)) continue;
    std::vector<std::uint8_t> v(total);
    for (std::uint32_t k = 0; k < total; ++k) v[k] = (mask & (1U << k)) ? 1 : 0;
    out.insert(v);
  }
  return out;
}

/// Rank of integer rows by fraction-free elimination in 128-bit integers.
inline int integer_rank(std::vector<std::vector<__int128>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const __int128 f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * p[c] - p[k] * f;
      __int128 g = 0;
      for (auto x : rows[r]) {
        __int128 a = x < 0 ? -x : x, b = g;
        while (b != 0) {
          const __int128 tmp = a % b;
          a = b;
          b = tmp;
        }
        g = a;
      }
      if (g > 1) {
        for (auto& x : rows[r]) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

/// Affine dimension of a finite point set.
inline int affine_dim(const std::set<std::vector<std::uint8_t>>& pts) {
  if (pts.empty()) return -1;
  const auto& base = *pts.begin();
  std::vector<std::vector<__int128>> rows;
  for (const auto& p : pts) {
    std::vector<__int128> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<__int128>(p[i]) - base[i];
    rows.push_back(std::move(r));
  }
  return integer_rank(std::move(rows));
}

/// Multiset intersection of edge lists compared by endpoints and provenance.
inline std::vector<redforge::ProvEdge> intersect(std::vector<redforge::ProvEdge> a, std::vector<redforge::ProvEdge> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<redforge::ProvEdge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/**
 * h(𝔟) by the pairwise description of the attaching facets: for each
 * full-dimensional leaf F_i (DFS order) the intersections F_i ∩ F_j, j < i,
 * with one edge fewer; each weighted by β of the single Middle step on the
 * path to the leaf with that edge set (merged to β when asked).
 */
inline redforge::Polynomial h_by_intersections(const redforge::ReductionTree& t, bool merge_beta) {
  using namespace redforge;
  std::vector<NodeId> full;
  const std::size_t m = t.root_graph().edge_count();
  std::map<std::vector<ProvEdge>, NodeId> leaf_by_edges;
  for (NodeId v = 0; v < t.size(); ++v) {
    if (!t.is_leaf(v)) continue;
    auto e = t.graph(v).edges();
    std::vector<ProvEdge> key(e.begin(), e.end());
    std::sort(key.begin(), key.end());
    leaf_by_edges.emplace(key, v);
    if (e.size() == m) full.push_back(v);
  }
  Polynomial h;
  for (std::size_t i = 0; i < full.size(); ++i) {
    Polynomial term = Polynomial::constant(1);
    auto ei = t.graph(full[i]).edges();
    for (std::size_t j = 0; j < i; ++j) {
      auto ej = t.graph(full[j]).edges();
      auto meet = intersect({ei.begin(), ei.end()}, {ej.begin(), ej.end()});
      if (meet.size() + 1 != m) continue;
      int beta = -1;
      if (auto it = leaf_by_edges.find(meet); it != leaf_by_edges.end()) {
        int middles = 0;
        for (NodeId v = it->second; v != t.root(); v = *t.node(v).parent) {
          if (t.node(v).branch == Branch::M) {
            ++middles;
            beta = t.node(*t.node(v).parent).step->i();
          }
        }
        if (middles != 1) beta = -1;
      }
      if (beta < 0) return Polynomial::constant(-1);  // not expressible; callers compare and fail
      term *= Polynomial::variable(Var::beta(merge_beta ? 0 : beta));
    }
    h += term;
  }
  return h;
}

/// All Q(β, t) values (merged β) over complete reduction trees, by direct
/// recursion over endpoint multisets without memoization.
using MergedQ = std::map<std::pair<int, int>, long long>;  // (β degree, t degree) -> coefficient

inline std::set<MergedQ> achievable_merged(int n, Edges e) {
  std::sort(e.begin(), e.end());
  std::set<std::pair<Edge, Edge>> pairs;
  for (auto a : e) {
    for (auto b : e) {
      if (a.second == b.first) pairs.insert({a, b});
    }
  }
  if (pairs.empty()) {
    int t = 0;
    for (auto x : e) t += (x == Edge{1, n}) ? 1 : 0;
    return {MergedQ{{{0, t}, 1}}};
  }
  std::set<MergedQ> out;
  for (auto [a, b] : pairs) {
    Edges rest = e;
    rest.erase(std::find(rest.begin(), rest.end(), a));
    rest.erase(std::find(rest.begin(), rest.end(), b));
    const Edge ik{a.first, b.second};
    Edges g1 = rest, g2 = rest, g3 = rest;
    g1.push_back(a);
    g1.push_back(ik);
    g2.push_back(b);
    g2.push_back(ik);
    g3.push_back(ik);
    auto s1 = achievable_merged(n, g1), s2 = achievable_merged(n, g2), s3 = achievable_merged(n, g3);
    for (const auto& q1 : s1) {
      for (const auto& q2 : s2) {
        for (const auto& q3 : s3) {
          MergedQ q = q1;
          for (auto [k, c] : q2) q[k] += c;
          for (auto [k, c] : q3) q[{k.first + 1, k.second}] += c;
          out.insert(std::move(q));
        }
      }
    }
  }
  return out;
}

inline redforge::Polynomial to_polynomial(const MergedQ& q) {
  using namespace redforge;
  Polynomial p;
  for (auto [k, c] : q) {
    Monomial m;
    if (k.first > 0) m = m * Monomial::of(Var::beta(0), static_cast<unsigned>(k.first));
    if (k.second > 0) m = m * Monomial::of(Var::t(), static_cast<unsigned>(k.second));
    p += Polynomial::term(m, c);
  }
  return p;
}

}  // namespace oracle

#include "redforge/families.hpp"

#include <functional>
#include <numeric>

#include "redforge/errors.hpp"

namespace redforge {

MultiGraph path_graph(int n) {
  if (n < 1) throw InvalidGraph("path graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return MultiGraph::root(n, e);
}

MultiGraph complete_graph(int n) {
  if (n < 1) throw InvalidGraph("complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  }
  return MultiGraph::root(n, e);
}

MultiGraph star_graph_35() { return MultiGraph::root(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}); }

bool is_connected(const MultiGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = g.n();
  for (const auto& e : g.edges()) {
    int a = find(e.src), b = find(e.dst);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<MultiGraph> connected_sweep(int max_vertices, int max_edges) {
  std::vector<MultiGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    }
    for (int m = 0; m <= max_edges; ++m) {
      std::vector<std::pair<Vertex, Vertex>> chosen;
      std::function<void(std::size_t)> pick = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == m) {
          auto g = MultiGraph::root(n, chosen);
          if (is_connected(g)) out.push_back(std::move(g));
          return;
        }
        for (std::size_t s = from; s < slots.size(); ++s) {
          chosen.push_back(slots[s]);
          pick(s);
          chosen.pop_back();
        }
      };
      pick(0);
    }
  }
  return out;
}

}  // namespace redforge

#include "perim/link.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "perim/error.hpp"

namespace perim {

  LinkGraph link_graph(Complex2 const& x, int v) {
    if (v < 0 || v >= x.vertex_count()) {
      throw PreconditionError("link_graph: unknown vertex");
    }
    LinkGraph           g;
    std::map<int, int>  index;
    for (DirectedEdge d = 0; d < 2 * x.edge_count(); ++d) {
      if (x.source(d) == v) {
        index[d] = static_cast<int>(g.nodes.size());
        g.nodes.push_back(d);
      }
    }
    for (int c = 0; c < x.cell_count(); ++c) {
      auto const& b = x.boundary(c);
      for (std::size_t i = 0; i < b.size(); ++i) {
        DirectedEdge const in  = reverse(b[i]);
        DirectedEdge const out = b[(i + 1) % b.size()];
        if (x.source(out) == v) {
          g.edges.emplace_back(index.at(in), index.at(out));
        }
      }
    }
    return g;
  }

  Girth link_girth(LinkGraph const& g) {
    Girth      result;
    auto const n = static_cast<int>(g.nodes.size());
    std::vector<std::vector<int>> adj(n);
    std::map<std::pair<int, int>, int> multiplicity;
    for (auto [a, b] : g.edges) {
      if (a == b) {
        result.multigraph = 1;
        continue;
      }
      if (++multiplicity[std::minmax(a, b)] == 2) {
        result.multigraph = std::min(result.multigraph, 2);
      }
    }
    for (auto const& [ab, count] : multiplicity) {
      adj[ab.first].push_back(ab.second);
      adj[ab.second].push_back(ab.first);
    }
    for (int root = 0; root < n; ++root) {
      std::vector<int> dist(n, -1);
      std::vector<int> parent(n, -1);
      std::queue<int>  queue;
      dist[root] = 0;
      queue.push(root);
      while (!queue.empty()) {
        int const u = queue.front();
        queue.pop();
        for (int w : adj[u]) {
          if (dist[w] < 0) {
            dist[w]   = dist[u] + 1;
            parent[w] = u;
            queue.push(w);
          } else if (parent[u] != w) {
            result.simple = std::min(result.simple, dist[u] + dist[w] + 1);
          }
        }
      }
    }
    result.multigraph = std::min(result.multigraph, result.simple);
    return result;
  }

  Girth link_girth(Complex2 const& x, int v) {
    return link_girth(link_graph(x, v));
  }

}  // namespace perim

#ifndef PERIM_LINK_HPP_
#define PERIM_LINK_HPP_

#include <utility>
#include <vector>

#include "perim/complex.hpp"

namespace perim {

  // The link of a vertex: a node per edge-end at v, named by the directed
  // edge leaving v through it, and a link edge per 2-cell corner at v.
  struct LinkGraph {
    std::vector<DirectedEdge>        nodes;
    std::vector<std::pair<int, int>> edges;  // indices into nodes
  };

  LinkGraph link_graph(Complex2 const& x, int v);

  struct Girth {
    // Shortest cycle with parallel link edges counted as 2-cycles.
    int multigraph = infinity;
    // Shortest cycle of length at least 3 after merging parallel edges.
    int simple = infinity;
  };

  Girth link_girth(LinkGraph const& g);

  // Girth of the link of v.
  Girth link_girth(Complex2 const& x, int v);

}  // namespace perim

#endif  // PERIM_LINK_HPP_

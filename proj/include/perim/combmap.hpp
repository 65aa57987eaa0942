#ifndef PERIM_COMBMAP_HPP_
#define PERIM_COMBMAP_HPP_

#include <memory>
#include <vector>

#include "perim/complex.hpp"

namespace perim {

  // Image of a domain 2-cell S: position j of S goes to position
  // offset + j of the target (reflected: offset - j, traversed backwards).
  struct CellImage {
    int  cell;
    int  offset;
    bool reflected;
    friend bool operator==(CellImage const&, CellImage const&) = default;
  };

  // A combinatorial map from domain to *codomain.  edge_image holds the
  // directed image of each domain edge's forward orientation.  basepoint is
  // -1 for unbased maps; endpoint is the far end of a whisker, or -1.
  struct CombMap {
    Complex2                        domain;
    std::shared_ptr<Complex2 const> codomain;
    std::vector<int>                vertex_image;
    std::vector<DirectedEdge>       edge_image;
    std::vector<CellImage>          cell_image;
    int                             basepoint = -1;
    int                             endpoint  = -1;

    DirectedEdge image(DirectedEdge d) const {
      return edge_image[edge_of(d)] ^ (d & 1);
    }
    Complex2 const& target() const {
      return *codomain;
    }
  };

  // Checks endpoint and boundary compatibility; throws PreconditionError.
  void validate(CombMap const& m);

  // The boundary of domain cell s re-read so that entry p is the directed
  // domain edge lying over position p of the image cell, traversed in the
  // image cell's direction.
  std::vector<DirectedEdge> aligned_boundary(CombMap const& m, int s);

  // Identity map of a complex onto itself, based at vertex 0 when present.
  CombMap identity_map(std::shared_ptr<Complex2 const> x);

  // Appends a cell given by its aligned boundary over codomain cell r.
  int add_aligned_cell(CombMap& m, int r, std::vector<DirectedEdge> aligned);

}  // namespace perim

#endif  // PERIM_COMBMAP_HPP_

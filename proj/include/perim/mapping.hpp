#ifndef PERIM_MAPPING_HPP_
#define PERIM_MAPPING_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "perim/combmap.hpp"
#include "perim/word.hpp"

namespace perim {

  // A wedge of subdivided circles at the basepoint, circle i spelling
  // words[i], plus an arc from the basepoint to a fresh endpoint spelling
  // the whisker when one is given.  Empty words add nothing; an empty
  // whisker makes the endpoint the basepoint.  x must have one vertex.
  CombMap bouquet_map(std::shared_ptr<Complex2 const> x,
                      std::vector<Word> const&        words,
                      std::optional<Word> const&      whisker = std::nullopt);

  // Two distinct directed domain edges leaving one vertex with one image.
  struct FoldSite {
    int          vertex;
    DirectedEdge first;
    DirectedEdge second;
  };

  // The first fold site in (vertex, edge) order, if any.
  std::optional<FoldSite> find_fold(CombMap const& m);

  // Same as find_fold(m) being empty.  The witness, when wanted, is the
  // fold site.
  bool is_1_immersion(CombMap const& m, FoldSite* witness = nullptr);

  // Rebuilds m with vertices merged by vertex_rep and edges merged by
  // edge_rep.  vertex_rep[v] is a vertex with vertex_rep[vertex_rep[v]] ==
  // vertex_rep[v]; edge_rep[e] is the directed edge that forward(e) becomes,
  // which must be a representative edge in either orientation.  Surviving
  // elements keep their relative order.
  CombMap quotient(CombMap const&                   m,
                   std::vector<int> const&          vertex_rep,
                   std::vector<DirectedEdge> const& edge_rep);

  // Identifies the two edges of a fold site and their far endpoints, then
  // removes redundant cells.
  CombMap apply_fold(CombMap const& m, FoldSite const& site);

  // Folds the first available site; throws PreconditionError when m is
  // already a 1-immersion.
  CombMap apply_fold(CombMap const& m);

  // Folds until the map is a 1-immersion.  folds, when given, receives the
  // number of folds performed.
  CombMap fold_to_immersion(CombMap const& m, int* folds = nullptr);

  // Keeps the first of every set of domain cells with the same image cell
  // and the same aligned boundary.
  CombMap remove_redundant(CombMap const& m);

  // Every domain cell over a proper power has all its packet rotations.
  bool is_packed(CombMap const& m);

  // Adds the missing packet rotations.  added, when given, receives the
  // number of cells added.
  CombMap repair_packing(CombMap const& m, int* added = nullptr);

  // Directed domain edge leaving each vertex over each codomain directed
  // edge.  In a 1-immersion the choice is unique.
  class LiftIndex {
   public:
    explicit LiftIndex(CombMap const& m);
    // -1 when there is none.
    DirectedEdge out(int vertex, DirectedEdge image) const {
      return _out[static_cast<std::size_t>(vertex) * _stride + image];
    }

   private:
    std::size_t               _stride;
    std::vector<DirectedEdge> _out;
  };

  // The lift of a codomain path from a domain vertex, or nothing when it
  // leaves the domain.  Throws PreconditionError when the path does not
  // start at the image of start.
  std::optional<std::vector<DirectedEdge>> lift_path(
      CombMap const&                   m,
      std::vector<DirectedEdge> const& path,
      int                              start);

  // Vertex reached by a domain path, given its start.
  int path_end(Complex2 const& y, int start, std::vector<DirectedEdge> const& p);

  struct FiberProduct {
    CombMap to_codomain;  // the whole product over the common codomain
    CombMap to_a;         // projection onto the domain of a
    CombMap to_b;         // projection onto the domain of b
    CombMap based;        // component of the pair of basepoints
  };

  // Vertices and edges are pairs with one image; a 2-cell is a pair of
  // domain cells over one codomain cell, glued along their aligned
  // boundaries.  Relative rotations of proper powers come from packet
  // mates, so both maps should be packed.
  FiberProduct fiber_product(CombMap const& a, CombMap const& b);

  // The component of v, based at v; other elements are dropped.
  CombMap component_of(CombMap const& m, int v);

}  // namespace perim

#endif  // PERIM_MAPPING_HPP_

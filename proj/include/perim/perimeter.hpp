#ifndef PERIM_PERIMETER_HPP_
#define PERIM_PERIMETER_HPP_

#include <memory>
#include <span>
#include <vector>

#include "perim/combmap.hpp"
#include "perim/error.hpp"

namespace perim {

  // Nonnegative integer weight on every side of a fixed complex.  Every
  // 2-cell has positive total weight.  Edge perimeters and cell weights are
  // cached at construction.
  class Weighting {
   public:
    // side_weights[c][i] is the weight of side (c, i).  Throws
    // PreconditionError on a shape mismatch, a negative weight, or a cell
    // of weight 0.
    Weighting(std::shared_ptr<Complex2 const>  x,
              std::vector<std::vector<Weight>> side_weights);

    Complex2 const& complex() const noexcept {
      return *_x;
    }
    std::shared_ptr<Complex2 const> const& complex_ptr() const noexcept {
      return _x;
    }
    Weight side_weight(int cell, int position) const {
      return _sides.at(cell).at(position);
    }
    std::vector<std::vector<Weight>> const& side_weights() const noexcept {
      return _sides;
    }
    Weight edge_perimeter(int e) const {
      return _edge_perimeter.at(e);
    }
    Weight cell_weight(int c) const {
      return _cell_weight.at(c);
    }
    // Sum of edge perimeters along the cyclic boundary subpath of cell c
    // that starts at position start and has the given length (<= |dR|).
    Weight boundary_perimeter(int cell, int start, int length) const;

    friend bool operator==(Weighting const& a, Weighting const& b) {
      return a._sides == b._sides && *a._x == *b._x;
    }

   private:
    std::shared_ptr<Complex2 const>  _x;
    std::vector<std::vector<Weight>> _sides;
    std::vector<Weight>              _edge_perimeter;
    std::vector<Weight>              _cell_weight;
    std::vector<std::vector<Weight>> _prefix;  // doubled boundary prefix sums
  };

  // Every side weight 1.
  Weighting unit_weighting(std::shared_ptr<Complex2 const> x);

  // Every side lying over edge e gets per_edge[e].
  Weighting edge_weighting(std::shared_ptr<Complex2 const> x,
                           std::vector<Weight> const&      per_edge);

  Weight edge_perimeter(Weighting const& w, int e);
  Weight cell_weight(Weighting const& w, int c);

  // Thrown by map_perimeter_fast when the map is not a near-immersion.
  class NotNearImmersion : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  // Distinct domain sides at each domain edge have distinct images.
  bool is_near_immersion(CombMap const& m);

  // Sum over domain edges y of the weights of the sides of the codomain
  // that are missing at y.  A side (R, r) is present at y when some domain
  // cell over R has its position r on y.
  Weight map_perimeter(Weighting const& w, CombMap const& m);

  // Sum of P(image of y) over domain edges minus Wt(image of S) over domain
  // cells.  Throws NotNearImmersion when the shortcut does not apply.
  Weight map_perimeter_fast(Weighting const& w, CombMap const& m);

  // Sum of edge perimeters along a path, with multiplicity.
  Weight path_perimeter(Weighting const& w, std::span<DirectedEdge const> p);

  // Perimeter of the packet projection of cell c.
  Weight packet_perimeter(Weighting const& w, int c);

  struct SFormCheck {
    Weight packet;  // P of the packet
    Weight q;       // P(Q)
    Weight s;       // P(S), S the complement of Q in the boundary
    Weight n_wt;    // exponent times Wt(R)
  };

  // The four quantities of the identity P(packet) = P(Q) + P(S) - n Wt(R)
  // for Q the boundary subpath (start, length).  Throws std::logic_error if
  // the identity fails.
  SFormCheck sform_check(Weighting const& w, int c, int start, int length);

}  // namespace perim

#endif  // PERIM_PERIMETER_HPP_

#ifndef PERIM_COMPLEX_HPP_
#define PERIM_COMPLEX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "perim/presentation.hpp"

namespace perim {

  // A directed 1-cell: 2 * edge + (1 if traversed against its orientation).
  // Uses the encoding of Letter, so in a standard complex the directed edge
  // of a letter is the letter itself.
  using DirectedEdge = int;

  constexpr DirectedEdge forward(int edge) noexcept {
    return 2 * edge;
  }
  constexpr int edge_of(DirectedEdge d) noexcept {
    return d >> 1;
  }
  constexpr bool is_reversed(DirectedEdge d) noexcept {
    return (d & 1) != 0;
  }
  constexpr DirectedEdge reverse(DirectedEdge d) noexcept {
    return d ^ 1;
  }

  using Weight = std::int64_t;

  // Sentinel for unbounded counts (piece covers, girths).
  inline constexpr int infinity = 1 << 30;

  // A combinatorial 2-complex.  Every 2-cell boundary is a closed path
  // without backtracks (cyclically), and consecutive boundary edges chain.
  class Complex2 {
   public:
    struct Edge {
      int source;
      int target;
      friend bool operator==(Edge const&, Edge const&) = default;
    };

    int add_vertex();
    int add_edge(int source, int target, std::string label = {});
    // Validates the boundary; throws PreconditionError.
    int add_cell(std::vector<DirectedEdge> boundary);

    int vertex_count() const noexcept {
      return _vertices;
    }
    int edge_count() const noexcept {
      return static_cast<int>(_edges.size());
    }
    int cell_count() const noexcept {
      return static_cast<int>(_cells.size());
    }
    int boundary_length(int cell) const {
      return static_cast<int>(_cells.at(cell).size());
    }

    Edge const& edge(int e) const {
      return _edges.at(e);
    }
    int source(DirectedEdge d) const {
      Edge const& x = _edges.at(edge_of(d));
      return is_reversed(d) ? x.target : x.source;
    }
    int target(DirectedEdge d) const {
      return source(reverse(d));
    }
    std::vector<DirectedEdge> const& boundary(int cell) const {
      return _cells.at(cell);
    }
    std::string const& label(int e) const {
      return _labels.at(e);
    }
    // Label of a directed edge, with "^-1" when reversed.
    std::string label_of(DirectedEdge d) const;

    // Euler characteristic V - E + C.
    int euler_characteristic() const noexcept {
      return vertex_count() - edge_count() + cell_count();
    }

    friend bool operator==(Complex2 const&, Complex2 const&) = default;

   private:
    int                                    _vertices = 0;
    std::vector<Edge>                      _edges;
    std::vector<std::string>               _labels;
    std::vector<std::vector<DirectedEdge>> _cells;
  };

  // Checks that boundary is a closed immersed path in x.
  void check_boundary(Complex2 const& x, std::vector<DirectedEdge> const& b);

  // One vertex, edge g labelled by generator g, cell k bounded by relator k.
  Complex2 standard_complex(Presentation const& p);

  // A side: a 2-cell together with one boundary position.
  struct Side {
    int cell;
    int position;
    friend bool operator==(Side const&, Side const&) = default;
    friend auto operator<=>(Side const&, Side const&) = default;
  };

  // All sides whose boundary position traverses edge e, in (cell, position)
  // order.
  std::vector<Side> sides_at(Complex2 const& x, int e);

  // Sides of every edge at once, indexed by edge.
  std::vector<std::vector<Side>> side_table(Complex2 const& x);

  struct CellPeriod {
    int period_length;
    int exponent;
  };

  // The boundary equals W^exponent as a cyclic edge word, exponent maximal.
  CellPeriod cell_period(Complex2 const& x, int cell);

  // The boundary as a word of directed edges starting at position start.
  std::vector<DirectedEdge> boundary_path(Complex2 const& x,
                                          int             cell,
                                          int             start,
                                          int             length);

  // True iff some 2-cell boundary visits a vertex twice.
  bool has_nonsimple_attaching_cycle(Complex2 const& x);

}  // namespace perim

#endif  // PERIM_COMPLEX_HPP_

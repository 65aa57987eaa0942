#ifndef PERIM_PIECES_HPP_
#define PERIM_PIECES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "perim/complex.hpp"

namespace perim {

  // A reading of a cell boundary: from position `position`, forwards, or
  // backwards with every edge reversed.
  struct Occurrence {
    int  cell;
    int  position;
    bool reversed;
    friend bool operator==(Occurrence const&, Occurrence const&) = default;
  };

  // Two essentially distinct readings that agree for `length` >= 1 steps.
  struct PieceRecord {
    Occurrence a;
    Occurrence b;
    int        length;
  };

  struct PieceTable {
    // Every ordered pair of essentially distinct occurrences with a common
    // prefix, with its length capped at the shorter boundary.
    std::vector<PieceRecord> records;
    // longest_from[c][i]: longest piece read forwards from position i.
    std::vector<std::vector<int>> longest_from;
    // Longest piece inside each cell boundary.
    std::vector<int> max_piece;

    int max_piece_length() const;
  };

  // Readings related by a rotation through a multiple of the period, or
  // agreeing around the whole boundary of two equal-length cells, are not
  // essentially distinct.  Shifts inside a proper-power cell that are not
  // multiples of the period do count.
  PieceTable compute_pieces(Complex2 const& x);

  // Length of the common prefix of two readings, capped at the shorter
  // boundary; 0 when the pair is not essentially distinct.
  int piece_length(Complex2 const& x, Occurrence a, Occurrence b);

  // Fewest pieces whose concatenation is the subpath (start, length) of the
  // boundary of c; infinity when some edge lies in no piece.
  int min_piece_cover(PieceTable const& t, int cell, int start, int length);

  // Fewest pieces covering the whole boundary cycle, over all starting
  // points.
  int cyclic_piece_cover(PieceTable const& t, int cell);

  // alpha = num / den.
  struct Ratio {
    int num;
    int den;
  };

  struct SmallCancellationReport {
    int                      p;
    int                      q;
    std::optional<Ratio>     alpha;
    bool                     c_p       = true;
    std::optional<bool>      c_prime;  // set when alpha is given
    bool                     t_q       = true;
    std::vector<int>         cell_cover;    // cyclic_piece_cover per cell
    std::vector<int>         cell_max_piece;
    std::vector<int>         vertex_girth;  // simple link girth per vertex
    std::vector<std::string> witnesses;

    bool holds() const {
      return c_p && t_q && c_prime.value_or(true);
    }
  };

  // C(p): every boundary needs at least p pieces.  C'(alpha): every piece
  // in a boundary is shorter than alpha times its length.  T(q) is judged
  // by link girth: no link cycle of length 3 <= l < q.
  SmallCancellationReport check_small_cancellation(Complex2 const&      x,
                                                   PieceTable const&    t,
                                                   int                  p,
                                                   int                  q,
                                                   std::optional<Ratio> alpha);

  SmallCancellationReport check_small_cancellation(Complex2 const&      x,
                                                   int                  p,
                                                   int                  q,
                                                   std::optional<Ratio> alpha);

}  // namespace perim

#endif  // PERIM_PIECES_HPP_

#include "perim/pieces.hpp"

#include <algorithm>

#include "perim/error.hpp"
#include "perim/link.hpp"

namespace perim {

  namespace {
    int mod(int a, int n) {
      return ((a % n) + n) % n;
    }

    DirectedEdge read(Complex2 const& x, Occurrence o, int k) {
      auto const& b = x.boundary(o.cell);
      auto const  n = static_cast<int>(b.size());
      return o.reversed ? reverse(b[mod(o.position - k, n)])
                        : b[mod(o.position + k, n)];
    }
  }  // namespace

  int PieceTable::max_piece_length() const {
    int best = 0;
    for (int m : max_piece) {
      best = std::max(best, m);
    }
    return best;
  }

  int piece_length(Complex2 const& x, Occurrence a, Occurrence b) {
    int const la = x.boundary_length(a.cell);
    int const lb = x.boundary_length(b.cell);
    if (a.cell == b.cell && a.reversed == b.reversed) {
      int const per = cell_period(x, a.cell).period_length;
      if (mod(a.position - b.position, per) == 0) {
        return 0;
      }
    }
    int const cap = std::min(la, lb);
    int       k   = 0;
    while (k < cap && read(x, a, k) == read(x, b, k)) {
      ++k;
    }
    if (k == cap && la == lb) {
      return 0;  // the two boundaries agree all the way round
    }
    return k;
  }

  PieceTable compute_pieces(Complex2 const& x) {
    PieceTable              t;
    std::vector<Occurrence> occ;
    for (int c = 0; c < x.cell_count(); ++c) {
      t.longest_from.emplace_back(x.boundary_length(c), 0);
      for (int i = 0; i < x.boundary_length(c); ++i) {
        occ.push_back({c, i, false});
        occ.push_back({c, i, true});
      }
    }
    for (Occurrence const& a : occ) {
      for (Occurrence const& b : occ) {
        if (read(x, a, 0) != read(x, b, 0)) {
          continue;
        }
        int const len = piece_length(x, a, b);
        if (len == 0) {
          continue;
        }
        t.records.push_back({a, b, len});
        if (!a.reversed) {
          int& best = t.longest_from[a.cell][a.position];
          best      = std::max(best, len);
        }
      }
    }
    for (auto const& row : t.longest_from) {
      t.max_piece.push_back(row.empty() ? 0
                                        : *std::max_element(row.begin(),
                                                            row.end()));
    }
    return t;
  }

  int min_piece_cover(PieceTable const& t, int cell, int start, int length) {
    if (cell < 0 || cell >= static_cast<int>(t.longest_from.size())) {
      throw PreconditionError("min_piece_cover: unknown cell");
    }
    auto const& row = t.longest_from[cell];
    auto const  n   = static_cast<int>(row.size());
    if (length < 0 || length > n || start < 0 || start >= std::max(n, 1)) {
      throw PreconditionError("min_piece_cover: invalid subpath");
    }
    int count = 0;
    for (int done = 0; done < length; ++count) {
      int const step = row[(start + done) % n];
      if (step == 0) {
        return infinity;
      }
      done += step;
    }
    return count;
  }

  int cyclic_piece_cover(PieceTable const& t, int cell) {
    int const n    = static_cast<int>(t.longest_from.at(cell).size());
    int       best = infinity;
    for (int s = 0; s < n; ++s) {
      best = std::min(best, min_piece_cover(t, cell, s, n));
    }
    return best;
  }

  SmallCancellationReport check_small_cancellation(Complex2 const&      x,
                                                   PieceTable const&    t,
                                                   int                  p,
                                                   int                  q,
                                                   std::optional<Ratio> alpha) {
    if (p < 2 || q < 3) {
      throw PreconditionError("small cancellation needs p >= 2 and q >= 3");
    }
    if (alpha && (alpha->num <= 0 || alpha->den <= 0)) {
      throw PreconditionError("small cancellation ratio must be positive");
    }
    SmallCancellationReport r;
    r.p     = p;
    r.q     = q;
    r.alpha = alpha;
    if (alpha) {
      r.c_prime = true;
    }
    for (int c = 0; c < x.cell_count(); ++c) {
      int const cover = cyclic_piece_cover(t, c);
      int const piece = t.max_piece[c];
      r.cell_cover.push_back(cover);
      r.cell_max_piece.push_back(piece);
      if (cover < p) {
        r.c_p = false;
        r.witnesses.push_back("cell " + std::to_string(c) + " is a union of "
                              + std::to_string(cover) + " pieces");
      }
      if (alpha && static_cast<long long>(piece) * alpha->den
                       >= static_cast<long long>(alpha->num)
                              * x.boundary_length(c)) {
        r.c_prime = false;
        r.witnesses.push_back("cell " + std::to_string(c) + " has a piece of "
                              + "length " + std::to_string(piece) + " of "
                              + std::to_string(x.boundary_length(c)));
      }
    }
    for (int v = 0; v < x.vertex_count(); ++v) {
      int const g = link_girth(x, v).simple;
      r.vertex_girth.push_back(g);
      if (g < q) {
        r.t_q = false;
        r.witnesses.push_back("link of vertex " + std::to_string(v)
                              + " has a cycle of length "
                              + std::to_string(g));
      }
    }
    return r;
  }

  SmallCancellationReport check_small_cancellation(Complex2 const&      x,
                                                   int                  p,
                                                   int                  q,
                                                   std::optional<Ratio> alpha) {
    return check_small_cancellation(x, compute_pieces(x), p, q, alpha);
  }

}  // namespace perim

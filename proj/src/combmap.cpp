#include "perim/combmap.hpp"

#include <string>

#include "perim/error.hpp"

namespace perim {

  namespace {
    int mod(int a, int n) {
      return ((a % n) + n) % n;
    }
  }  // namespace

  void validate(CombMap const& m) {
    if (!m.codomain) {
      throw PreconditionError("map has no codomain");
    }
    Complex2 const& y = m.domain;
    Complex2 const& x = *m.codomain;
    if (static_cast<int>(m.vertex_image.size()) != y.vertex_count()
        || static_cast<int>(m.edge_image.size()) != y.edge_count()
        || static_cast<int>(m.cell_image.size()) != y.cell_count()) {
      throw PreconditionError("map tables do not match the domain");
    }
    for (int v : m.vertex_image) {
      if (v < 0 || v >= x.vertex_count()) {
        throw PreconditionError("vertex image out of range");
      }
    }
    for (int e = 0; e < y.edge_count(); ++e) {
      DirectedEdge const d = m.edge_image[e];
      if (d < 0 || edge_of(d) >= x.edge_count()) {
        throw PreconditionError("edge image out of range");
      }
      if (x.source(d) != m.vertex_image[y.edge(e).source]
          || x.target(d) != m.vertex_image[y.edge(e).target]) {
        throw PreconditionError("edge " + std::to_string(e)
                                + " is not endpoint compatible");
      }
    }
    for (int s = 0; s < y.cell_count(); ++s) {
      CellImage const& ci = m.cell_image[s];
      if (ci.cell < 0 || ci.cell >= x.cell_count()) {
        throw PreconditionError("cell image out of range");
      }
      auto const& r = x.boundary(ci.cell);
      auto const& b = y.boundary(s);
      if (r.size() != b.size()) {
        throw PreconditionError("cell " + std::to_string(s)
                                + " has the wrong boundary length");
      }
      auto const n = static_cast<int>(b.size());
      for (int j = 0; j < n; ++j) {
        DirectedEdge const want = ci.reflected
                                      ? reverse(r[mod(ci.offset - j, n)])
                                      : r[mod(ci.offset + j, n)];
        if (m.image(b[j]) != want) {
          throw PreconditionError("cell " + std::to_string(s)
                                  + " is not boundary compatible");
        }
      }
    }
    if (m.basepoint >= y.vertex_count() || m.endpoint >= y.vertex_count()) {
      throw PreconditionError("marked vertex out of range");
    }
  }

  std::vector<DirectedEdge> aligned_boundary(CombMap const& m, int s) {
    CellImage const& ci = m.cell_image[s];
    auto const&      b  = m.domain.boundary(s);
    auto const       n  = static_cast<int>(b.size());
    std::vector<DirectedEdge> c(n);
    for (int p = 0; p < n; ++p) {
      c[p] = ci.reflected ? reverse(b[mod(ci.offset - p, n)])
                          : b[mod(p - ci.offset, n)];
    }
    return c;
  }

  CombMap identity_map(std::shared_ptr<Complex2 const> x) {
    CombMap m;
    m.domain   = *x;
    m.codomain = x;
    for (int v = 0; v < x->vertex_count(); ++v) {
      m.vertex_image.push_back(v);
    }
    for (int e = 0; e < x->edge_count(); ++e) {
      m.edge_image.push_back(forward(e));
    }
    for (int c = 0; c < x->cell_count(); ++c) {
      m.cell_image.push_back({c, 0, false});
    }
    m.basepoint = x->vertex_count() > 0 ? 0 : -1;
    return m;
  }

  int add_aligned_cell(CombMap& m, int r, std::vector<DirectedEdge> aligned) {
    int const s = m.domain.add_cell(std::move(aligned));
    m.cell_image.push_back({r, 0, false});
    return s;
  }

}  // namespace perim

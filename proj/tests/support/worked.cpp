#include "worked.hpp"

namespace worked {

  using perim::forward;
  using perim::reverse;

  std::shared_ptr<perim::Complex2 const> z3_complex() {
    perim::Presentation p{{"a", "b", "c"}, {}};
    p.relators = {perim::parse_word(p, "a b a^-1 b^-1"),
                  perim::parse_word(p, "a c a^-1 c^-1"),
                  perim::parse_word(p, "b c b^-1 c^-1")};
    return std::make_shared<perim::Complex2 const>(perim::standard_complex(p));
  }

  perim::CombMap open_box(std::shared_ptr<perim::Complex2 const> z3) {
    perim::CombMap m;
    m.codomain = z3;
    auto vertex = [](int x, int y, int z) { return x + 2 * y + 4 * z; };
    for (int v = 0; v < 8; ++v) {
      m.domain.add_vertex();
      m.vertex_image.push_back(0);
    }
    int a[2][2], b[2][2], c[2][2];  // indexed by the two fixed coordinates
    for (int s = 0; s < 2; ++s) {
      for (int t = 0; t < 2; ++t) {
        a[s][t] = m.domain.add_edge(vertex(0, s, t), vertex(1, s, t));
        m.edge_image.push_back(forward(0));
        b[s][t] = m.domain.add_edge(vertex(s, 0, t), vertex(s, 1, t));
        m.edge_image.push_back(forward(1));
        c[s][t] = m.domain.add_edge(vertex(s, t, 0), vertex(s, t, 1));
        m.edge_image.push_back(forward(2));
      }
    }
    // bottom: a b a^-1 b^-1 from the origin
    m.domain.add_cell({forward(a[0][0]), forward(b[1][0]),
                       reverse(forward(a[1][0])), reverse(forward(b[0][0]))});
    m.cell_image.push_back({0, 0, false});
    for (int y = 0; y < 2; ++y) {
      m.domain.add_cell({forward(a[y][0]), forward(c[1][y]),
                         reverse(forward(a[y][1])), reverse(forward(c[0][y]))});
      m.cell_image.push_back({1, 0, false});
    }
    for (int x = 0; x < 2; ++x) {
      m.domain.add_cell({forward(b[x][0]), forward(c[x][1]),
                         reverse(forward(b[x][1])), reverse(forward(c[x][0]))});
      m.cell_image.push_back({2, 0, false});
    }
    m.basepoint = 0;
    perim::validate(m);
    return m;
  }

  TwoSquares two_squares() {
    perim::Complex2 x;
    for (int v = 0; v < 6; ++v) {
      x.add_vertex();
    }
    int const shared = x.add_edge(0, 1, "x");
    int const e1     = x.add_edge(1, 2, "e1");
    int const e2     = x.add_edge(2, 3, "e2");
    int const e3     = x.add_edge(3, 0, "e3");
    int const f1     = x.add_edge(1, 4, "f1");
    int const f2     = x.add_edge(4, 5, "f2");
    int const f3     = x.add_edge(5, 0, "f3");
    x.add_cell({forward(shared), forward(e1), forward(e2), forward(e3)});
    x.add_cell({forward(shared), forward(f1), forward(f2), forward(f3)});
    auto const ptr = std::make_shared<perim::Complex2 const>(std::move(x));

    TwoSquares out{ptr, perim::identity_map(ptr), {}};
    perim::CombMap& psi = out.folded;
    psi.domain          = *ptr;
    psi.codomain        = ptr;
    psi.vertex_image    = {0, 1, 2, 3, 2, 3};
    psi.edge_image      = {forward(shared), forward(e1), forward(e2),
                           forward(e3), forward(e1), forward(e2), forward(e3)};
    psi.cell_image      = {{0, 0, false}, {0, 0, false}};
    psi.basepoint       = 0;
    perim::validate(psi);
    return out;
  }

  perim::CombMap boundary_circle(std::shared_ptr<perim::Complex2 const> x,
                                 int                                    c) {
    perim::CombMap m;
    m.codomain  = x;
    auto const& r = x->boundary(c);
    int const   n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i) {
      m.domain.add_vertex();
      m.vertex_image.push_back(x->source(r[i]));
    }
    for (int i = 0; i < n; ++i) {
      m.domain.add_edge(i, (i + 1) % n);
      m.edge_image.push_back(r[i]);
    }
    m.basepoint = 0;
    perim::validate(m);
    return m;
  }

}  // namespace worked

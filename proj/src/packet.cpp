#include "perim/packet.hpp"

#include "perim/error.hpp"

namespace perim {

  Packet build_packet(std::shared_ptr<Complex2 const> x, int cell) {
    if (cell < 0 || cell >= x->cell_count()) {
      throw PreconditionError("build_packet: unknown cell");
    }
    auto const& b   = x->boundary(cell);
    auto const  len = static_cast<int>(b.size());
    auto const  per = cell_period(*x, cell);

    Packet result{CombMap{}, {}, per.period_length, per.exponent};
    CombMap& m = result.projection;
    m.codomain = x;
    for (int i = 0; i < len; ++i) {
      m.domain.add_vertex();
      m.vertex_image.push_back(x->source(b[i]));
    }
    for (int i = 0; i < len; ++i) {
      m.domain.add_edge(i, (i + 1) % len, x->label(edge_of(b[i])));
      m.edge_image.push_back(b[i]);
    }
    for (int k = 0; k < per.exponent; ++k) {
      int const off = k * per.period_length;
      std::vector<DirectedEdge> boundary(len);
      for (int j = 0; j < len; ++j) {
        boundary[j] = forward((off + j) % len);
      }
      m.domain.add_cell(std::move(boundary));
      // position j of this copy of the cell is glued to circle edge off + j
      m.cell_image.push_back({cell, 0, false});
      result.cell_offsets.push_back(off);
    }
    m.basepoint = 0;
    validate(m);
    return result;
  }

}  // namespace perim

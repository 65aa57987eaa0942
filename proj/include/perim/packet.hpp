#ifndef PERIM_PACKET_HPP_
#define PERIM_PACKET_HPP_

#include <memory>
#include <vector>

#include "perim/combmap.hpp"

namespace perim {

  // The packet of a cell with boundary W^n: a circle of n|W| edges spelling
  // the boundary and n cells, the k-th read from offset k|W|.  projection
  // maps it onto the cell's boundary image.
  struct Packet {
    CombMap          projection;
    std::vector<int> cell_offsets;
    int              period_length;
    int              exponent;

    Complex2 const& complex() const noexcept {
      return projection.domain;
    }
  };

  Packet build_packet(std::shared_ptr<Complex2 const> x, int cell);

}  // namespace perim

#endif  // PERIM_PACKET_HPP_

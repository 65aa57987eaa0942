#include "perim/perimeter.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "perim/packet.hpp"

namespace perim {

  Weighting::Weighting(std::shared_ptr<Complex2 const>  x,
                       std::vector<std::vector<Weight>> side_weights)
      : _x(std::move(x)), _sides(std::move(side_weights)) {
    if (!_x) {
      throw PreconditionError("weighting without a complex");
    }
    if (static_cast<int>(_sides.size()) != _x->cell_count()) {
      throw PreconditionError("weighting: one weight list per 2-cell needed");
    }
    _edge_perimeter.assign(_x->edge_count(), 0);
    _cell_weight.assign(_x->cell_count(), 0);
    _prefix.resize(_x->cell_count());
    for (int c = 0; c < _x->cell_count(); ++c) {
      auto const& b = _x->boundary(c);
      if (_sides[c].size() != b.size()) {
        throw PreconditionError("weighting: cell " + std::to_string(c)
                                + " needs " + std::to_string(b.size())
                                + " side weights");
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (_sides[c][i] < 0) {
          throw PreconditionError("weighting: negative side weight");
        }
        _edge_perimeter[edge_of(b[i])] += _sides[c][i];
        _cell_weight[c] += _sides[c][i];
      }
      if (_cell_weight[c] <= 0) {
        throw PreconditionError("weighting: cell " + std::to_string(c)
                                + " has weight 0");
      }
    }
    for (int c = 0; c < _x->cell_count(); ++c) {
      auto const& b = _x->boundary(c);
      auto&       s = _prefix[c];
      s.assign(2 * b.size() + 1, 0);
      for (std::size_t i = 0; i < 2 * b.size(); ++i) {
        s[i + 1] = s[i] + _edge_perimeter[edge_of(b[i % b.size()])];
      }
    }
  }

  Weight Weighting::boundary_perimeter(int cell, int start, int length) const {
    auto const n = _x->boundary_length(cell);
    if (length < 0 || length > n) {
      throw PreconditionError("boundary_perimeter: length out of range");
    }
    int const s = ((start % n) + n) % n;
    return _prefix[cell][s + length] - _prefix[cell][s];
  }

  Weighting unit_weighting(std::shared_ptr<Complex2 const> x) {
    std::vector<std::vector<Weight>> sides;
    for (int c = 0; c < x->cell_count(); ++c) {
      sides.emplace_back(x->boundary_length(c), 1);
    }
    return Weighting(std::move(x), std::move(sides));
  }

  Weighting edge_weighting(std::shared_ptr<Complex2 const> x,
                           std::vector<Weight> const&      per_edge) {
    if (static_cast<int>(per_edge.size()) != x->edge_count()) {
      throw PreconditionError("edge_weighting: one weight per edge needed");
    }
    std::vector<std::vector<Weight>> sides;
    for (int c = 0; c < x->cell_count(); ++c) {
      std::vector<Weight> ws;
      for (DirectedEdge d : x->boundary(c)) {
        ws.push_back(per_edge[edge_of(d)]);
      }
      sides.push_back(std::move(ws));
    }
    return Weighting(std::move(x), std::move(sides));
  }

  Weight edge_perimeter(Weighting const& w, int e) {
    if (e < 0 || e >= w.complex().edge_count()) {
      throw PreconditionError("edge_perimeter: unknown edge");
    }
    return w.edge_perimeter(e);
  }

  Weight cell_weight(Weighting const& w, int c) {
    if (c < 0 || c >= w.complex().cell_count()) {
      throw PreconditionError("cell_weight: unknown cell");
    }
    return w.cell_weight(c);
  }

  namespace {
    void check_codomain(Weighting const& w, CombMap const& m) {
      if (m.codomain.get() != w.complex_ptr().get()
          && !(m.codomain && *m.codomain == w.complex())) {
        throw PreconditionError("map codomain does not carry the weighting");
      }
    }

    // (domain edge, codomain cell, position) for every domain side.
    std::vector<std::tuple<int, int, int>> domain_sides(CombMap const& m) {
      std::vector<std::tuple<int, int, int>> result;
      for (int s = 0; s < m.domain.cell_count(); ++s) {
        int const  r = m.cell_image[s].cell;
        auto const c = aligned_boundary(m, s);
        for (int p = 0; p < static_cast<int>(c.size()); ++p) {
          result.emplace_back(edge_of(c[p]), r, p);
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    Weight total_edge_perimeter(Weighting const& w, CombMap const& m) {
      Weight total = 0;
      for (DirectedEdge d : m.edge_image) {
        total += w.edge_perimeter(edge_of(d));
      }
      return total;
    }
  }  // namespace

  bool is_near_immersion(CombMap const& m) {
    auto const sides = domain_sides(m);
    return std::adjacent_find(sides.begin(), sides.end()) == sides.end();
  }

  Weight map_perimeter(Weighting const& w, CombMap const& m) {
    check_codomain(w, m);
    auto sides = domain_sides(m);
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
    Weight total = total_edge_perimeter(w, m);
    for (auto const& [y, r, p] : sides) {
      total -= w.side_weight(r, p);
    }
    return total;
  }

  Weight map_perimeter_fast(Weighting const& w, CombMap const& m) {
    check_codomain(w, m);
    if (!is_near_immersion(m)) {
      throw NotNearImmersion("map is not a near-immersion");
    }
    Weight total = total_edge_perimeter(w, m);
    for (auto const& ci : m.cell_image) {
      total -= w.cell_weight(ci.cell);
    }
    return total;
  }

  Weight path_perimeter(Weighting const& w, std::span<DirectedEdge const> p) {
    Weight total = 0;
    for (DirectedEdge d : p) {
      total += edge_perimeter(w, edge_of(d));
    }
    return total;
  }

  Weight packet_perimeter(Weighting const& w, int c) {
    return map_perimeter_fast(w, build_packet(w.complex_ptr(), c).projection);
  }

  SFormCheck sform_check(Weighting const& w, int c, int start, int length) {
    auto const n = w.complex().boundary_length(c);
    if (length < 0 || length > n) {
      throw PreconditionError("sform_check: subpath length out of range");
    }
    SFormCheck result;
    result.packet = packet_perimeter(w, c);
    result.q      = w.boundary_perimeter(c, start, length);
    result.s      = w.boundary_perimeter(c, start + length, n - length);
    result.n_wt   = cell_period(w.complex(), c).exponent * w.cell_weight(c);
    if (result.packet != result.q + result.s - result.n_wt) {
      throw std::logic_error("S-form identity failed");
    }
    return result;
  }

}  // namespace perim

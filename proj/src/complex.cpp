#include "perim/complex.hpp"

#include <algorithm>
#include <set>

#include "perim/error.hpp"

namespace perim {

  int Complex2::add_vertex() {
    return _vertices++;
  }

  int Complex2::add_edge(int source, int target, std::string label) {
    if (source < 0 || source >= _vertices || target < 0
        || target >= _vertices) {
      throw PreconditionError("add_edge: endpoint out of range");
    }
    _edges.push_back({source, target});
    if (label.empty()) {
      label = "e" + std::to_string(_edges.size() - 1);
    }
    _labels.push_back(std::move(label));
    return edge_count() - 1;
  }

  int Complex2::add_cell(std::vector<DirectedEdge> boundary) {
    check_boundary(*this, boundary);
    _cells.push_back(std::move(boundary));
    return cell_count() - 1;
  }

  std::string Complex2::label_of(DirectedEdge d) const {
    return is_reversed(d) ? label(edge_of(d)) + "^-1" : label(edge_of(d));
  }

  void check_boundary(Complex2 const& x, std::vector<DirectedEdge> const& b) {
    if (b.empty()) {
      throw PreconditionError("2-cell boundary is empty");
    }
    std::size_t const n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (b[i] < 0 || edge_of(b[i]) >= x.edge_count()) {
        throw PreconditionError("2-cell boundary uses an unknown edge");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      DirectedEdge const next = b[(i + 1) % n];
      if (x.target(b[i]) != x.source(next)) {
        throw PreconditionError("2-cell boundary does not chain at position "
                                + std::to_string(i));
      }
      if (next == reverse(b[i])) {
        throw PreconditionError("2-cell boundary backtracks at position "
                                + std::to_string(i));
      }
    }
  }

  Complex2 standard_complex(Presentation const& p) {
    validate(p);
    Complex2 x;
    x.add_vertex();
    for (auto const& name : p.generators) {
      x.add_edge(0, 0, name);
    }
    for (auto const& r : p.relators) {
      x.add_cell(r);
    }
    return x;
  }

  std::vector<Side> sides_at(Complex2 const& x, int e) {
    if (e < 0 || e >= x.edge_count()) {
      throw PreconditionError("sides_at: unknown edge");
    }
    std::vector<Side> result;
    for (int c = 0; c < x.cell_count(); ++c) {
      auto const& b = x.boundary(c);
      for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        if (edge_of(b[i]) == e) {
          result.push_back({c, i});
        }
      }
    }
    return result;
  }

  std::vector<std::vector<Side>> side_table(Complex2 const& x) {
    std::vector<std::vector<Side>> result(x.edge_count());
    for (int c = 0; c < x.cell_count(); ++c) {
      auto const& b = x.boundary(c);
      for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        result[edge_of(b[i])].push_back({c, i});
      }
    }
    return result;
  }

  CellPeriod cell_period(Complex2 const& x, int cell) {
    auto const& b = x.boundary(cell);
    auto const  p = static_cast<int>(cyclic_period(b));
    return {p, static_cast<int>(b.size()) / p};
  }

  std::vector<DirectedEdge> boundary_path(Complex2 const& x,
                                          int             cell,
                                          int             start,
                                          int             length) {
    auto const& b = x.boundary(cell);
    auto const  n = static_cast<int>(b.size());
    if (length < 0 || length > n) {
      throw PreconditionError("boundary_path: length out of range");
    }
    std::vector<DirectedEdge> result;
    result.reserve(length);
    int const s = ((start % n) + n) % n;
    for (int i = 0; i < length; ++i) {
      result.push_back(b[(s + i) % n]);
    }
    return result;
  }

  bool has_nonsimple_attaching_cycle(Complex2 const& x) {
    for (int c = 0; c < x.cell_count(); ++c) {
      std::set<int> seen;
      for (DirectedEdge d : x.boundary(c)) {
        if (!seen.insert(x.source(d)).second) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace perim

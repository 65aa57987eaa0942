#include "perim/mapping.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "perim/error.hpp"

namespace perim {

  namespace {
    bool same_codomain(CombMap const& a, CombMap const& b) {
      return a.codomain == b.codomain
             || (a.codomain && b.codomain && *a.codomain == *b.codomain);
    }
  }  // namespace

  CombMap bouquet_map(std::shared_ptr<Complex2 const> x,
                      std::vector<Word> const&        words,
                      std::optional<Word> const&      whisker) {
    if (x->vertex_count() != 1) {
      throw PreconditionError("bouquet_map needs a one-vertex complex");
    }
    CombMap m;
    m.codomain  = x;
    m.basepoint = m.domain.add_vertex();
    m.vertex_image.push_back(0);
    auto spell = [&](Word const& w, bool closed) {
      int at = m.basepoint;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || edge_of(w[i]) >= x->edge_count()) {
          throw PreconditionError("word uses an unknown generator");
        }
        int next = m.basepoint;
        if (!closed || i + 1 < w.size()) {
          next = m.domain.add_vertex();
          m.vertex_image.push_back(0);
        }
        m.domain.add_edge(at, next, x->label(edge_of(w[i])));
        m.edge_image.push_back(w[i]);
        at = next;
      }
      return at;
    };
    for (Word const& w : words) {
      spell(w, true);
    }
    if (whisker) {
      m.endpoint = spell(*whisker, false);
    }
    return m;
  }

  std::optional<FoldSite> find_fold(CombMap const& m) {
    Complex2 const&   y      = m.domain;
    std::size_t const stride = 2 * static_cast<std::size_t>(
                                       m.target().edge_count());
    std::vector<DirectedEdge> seen(y.vertex_count() * stride, -1);
    std::optional<FoldSite>   best;
    for (DirectedEdge d = 0; d < 2 * y.edge_count(); ++d) {
      int const v    = y.source(d);
      auto&     slot = seen[v * stride + m.image(d)];
      if (slot < 0) {
        slot = d;
      } else if (!best || v < best->vertex) {
        best = FoldSite{v, slot, d};
      }
    }
    return best;
  }

  bool is_1_immersion(CombMap const& m, FoldSite* witness) {
    auto const site = find_fold(m);
    if (site && witness != nullptr) {
      *witness = *site;
    }
    return !site;
  }

  CombMap quotient(CombMap const&                   m,
                   std::vector<int> const&          vertex_rep,
                   std::vector<DirectedEdge> const& edge_rep) {
    Complex2 const& y = m.domain;
    if (std::ssize(vertex_rep) != y.vertex_count()
        || std::ssize(edge_rep) != y.edge_count()) {
      throw PreconditionError("quotient: table sizes differ from the domain");
    }
    for (int v : vertex_rep) {
      if (v < 0 || v >= y.vertex_count() || vertex_rep[v] != v) {
        throw PreconditionError("quotient: vertex_rep is not a retraction");
      }
    }
    for (DirectedEdge d : edge_rep) {
      if (d < 0 || edge_of(d) >= y.edge_count()
          || edge_rep[edge_of(d)] != forward(edge_of(d))) {
        throw PreconditionError("quotient: edge_rep is not a retraction");
      }
    }
    std::vector<int> vnew(y.vertex_count(), -1);
    CombMap          q;
    q.codomain = m.codomain;
    for (int v = 0; v < y.vertex_count(); ++v) {
      if (vertex_rep[v] == v) {
        vnew[v] = q.domain.add_vertex();
        q.vertex_image.push_back(m.vertex_image[v]);
      }
    }
    for (int v = 0; v < y.vertex_count(); ++v) {
      vnew[v] = vnew[vertex_rep[v]];
    }
    std::vector<int> enew(y.edge_count(), -1);
    for (int e = 0; e < y.edge_count(); ++e) {
      if (edge_rep[e] == forward(e)) {
        auto const& edge = y.edge(e);
        enew[e] = q.domain.add_edge(
            vnew[edge.source], vnew[edge.target], y.label(e));
        q.edge_image.push_back(m.edge_image[e]);
      }
    }
    auto map_edge = [&](DirectedEdge d) {
      DirectedEdge const r = edge_rep[edge_of(d)] ^ (d & 1);
      return forward(enew[edge_of(r)]) ^ (r & 1);
    };
    for (int s = 0; s < y.cell_count(); ++s) {
      std::vector<DirectedEdge> b;
      for (DirectedEdge d : y.boundary(s)) {
        b.push_back(map_edge(d));
      }
      q.domain.add_cell(std::move(b));
      q.cell_image.push_back(m.cell_image[s]);
    }
    q.basepoint = m.basepoint < 0 ? -1 : vnew[m.basepoint];
    q.endpoint  = m.endpoint < 0 ? -1 : vnew[m.endpoint];
    return q;
  }

  CombMap apply_fold(CombMap const& m, FoldSite const& site) {
    Complex2 const& y = m.domain;
    if (site.first == site.second || y.source(site.first) != site.vertex
        || y.source(site.second) != site.vertex
        || m.image(site.first) != m.image(site.second)) {
      throw PreconditionError("not a fold site");
    }
    std::vector<int> vrep(y.vertex_count());
    for (int v = 0; v < y.vertex_count(); ++v) {
      vrep[v] = v;
    }
    int const u1 = y.target(site.first);
    int const u2 = y.target(site.second);
    int const lo = std::min(u1, u2);
    int const hi = std::max(u1, u2);
    vrep[hi]     = lo;

    std::vector<DirectedEdge> erep(y.edge_count());
    for (int e = 0; e < y.edge_count(); ++e) {
      erep[e] = forward(e);
    }
    // keep the lower edge; forward(drop) ^ s becomes keep-side ^ s
    DirectedEdge keep = site.first;
    DirectedEdge drop = site.second;
    if (edge_of(drop) < edge_of(keep)) {
      std::swap(keep, drop);
    }
    erep[edge_of(drop)] = keep ^ (drop & 1);
    return remove_redundant(quotient(m, vrep, erep));
  }

  CombMap apply_fold(CombMap const& m) {
    auto const site = find_fold(m);
    if (!site) {
      throw PreconditionError("no fold available");
    }
    return apply_fold(m, *site);
  }

  namespace {
    struct UnionFind {
      std::vector<int> parent;
      explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) {
          parent[i] = i;
        }
      }
      int find(int i) {
        while (parent[i] != i) {
          parent[i] = parent[parent[i]];
          i         = parent[i];
        }
        return i;
      }
    };
  }  // namespace

  // Stallings folding with union-find: each vertex class keeps one edge-end
  // per image, and merging two classes queues the clashes.  Orientation of
  // merged edges follows from their images, so edges need no sign.
  CombMap fold_to_immersion(CombMap const& m, int* folds) {
    Complex2 const& y = m.domain;
    UnionFind       vertices(y.vertex_count());
    UnionFind       edges(y.edge_count());
    std::vector<std::map<DirectedEdge, DirectedEdge>> ends(y.vertex_count());
    std::vector<std::pair<DirectedEdge, DirectedEdge>> pending;
    for (DirectedEdge d = 0; d < 2 * y.edge_count(); ++d) {
      auto [it, fresh] = ends[y.source(d)].emplace(m.image(d), d);
      if (!fresh) {
        pending.emplace_back(it->second, d);
      }
    }
    int count = 0;
    while (!pending.empty()) {
      auto const [d1, d2] = pending.back();
      pending.pop_back();
      int const e1 = edges.find(edge_of(d1));
      int const e2 = edges.find(edge_of(d2));
      if (e1 == e2) {
        continue;
      }
      edges.parent[std::max(e1, e2)] = std::min(e1, e2);
      ++count;
      int a = vertices.find(y.target(d1));
      int b = vertices.find(y.target(d2));
      if (a == b) {
        continue;
      }
      if (ends[a].size() < ends[b].size()) {
        std::swap(a, b);
      }
      vertices.parent[b] = a;
      for (auto const& [image, d] : ends[b]) {
        auto [it, fresh] = ends[a].emplace(image, d);
        if (!fresh) {
          pending.emplace_back(it->second, d);
        }
      }
      ends[b].clear();
    }
    if (folds != nullptr) {
      *folds = count;
    }
    if (count == 0) {
      return remove_redundant(m);
    }
    // the smallest member of a class represents it
    std::vector<int> vmin(y.vertex_count(), -1);
    std::vector<int> vrep(y.vertex_count());
    for (int v = 0; v < y.vertex_count(); ++v) {
      int& r = vmin[vertices.find(v)];
      if (r < 0) {
        r = v;
      }
      vrep[v] = r;
    }
    std::vector<int>          emin(y.edge_count(), -1);
    std::vector<DirectedEdge> erep(y.edge_count());
    for (int e = 0; e < y.edge_count(); ++e) {
      int& r = emin[edges.find(e)];
      if (r < 0) {
        r = e;
      }
      erep[e] = m.edge_image[e] == m.edge_image[r] ? forward(r)
                                                   : reverse(forward(r));
    }
    return remove_redundant(quotient(m, vrep, erep));
  }

  CombMap remove_redundant(CombMap const& m) {
    std::set<std::pair<int, std::vector<DirectedEdge>>> seen;
    std::vector<int>                                    keep;
    for (int s = 0; s < m.domain.cell_count(); ++s) {
      if (seen.emplace(m.cell_image[s].cell, aligned_boundary(m, s)).second) {
        keep.push_back(s);
      }
    }
    if (static_cast<int>(keep.size()) == m.domain.cell_count()) {
      return m;
    }
    CombMap q = m;
    q.domain  = Complex2{};
    for (int v = 0; v < m.domain.vertex_count(); ++v) {
      q.domain.add_vertex();
    }
    for (int e = 0; e < m.domain.edge_count(); ++e) {
      q.domain.add_edge(
          m.domain.edge(e).source, m.domain.edge(e).target, m.domain.label(e));
    }
    q.cell_image.clear();
    for (int s : keep) {
      q.domain.add_cell(m.domain.boundary(s));
      q.cell_image.push_back(m.cell_image[s]);
    }
    return q;
  }

  namespace {
    // Aligned boundaries of the packet mates of domain cell s, including s.
    std::vector<std::vector<DirectedEdge>> packet_mates(CombMap const& m,
                                                        int            s) {
      int const  r   = m.cell_image[s].cell;
      auto const per = cell_period(m.target(), r);
      auto const c   = aligned_boundary(m, s);
      auto const n   = static_cast<int>(c.size());
      std::vector<std::vector<DirectedEdge>> mates;
      for (int k = 0; k < per.exponent; ++k) {
        std::vector<DirectedEdge> ck(n);
        for (int p = 0; p < n; ++p) {
          ck[p] = c[(p + k * per.period_length) % n];
        }
        mates.push_back(std::move(ck));
      }
      return mates;
    }
  }  // namespace

  bool is_packed(CombMap const& m) {
    int added = 0;
    repair_packing(m, &added);
    return added == 0;
  }

  CombMap repair_packing(CombMap const& m, int* added) {
    std::set<std::pair<int, std::vector<DirectedEdge>>> present;
    for (int s = 0; s < m.domain.cell_count(); ++s) {
      present.emplace(m.cell_image[s].cell, aligned_boundary(m, s));
    }
    CombMap result = m;
    int     count  = 0;
    for (int s = 0; s < m.domain.cell_count(); ++s) {
      int const r = m.cell_image[s].cell;
      for (auto& ck : packet_mates(m, s)) {
        if (present.emplace(r, ck).second) {
          add_aligned_cell(result, r, std::move(ck));
          ++count;
        }
      }
    }
    if (added != nullptr) {
      *added = count;
    }
    return result;
  }

  LiftIndex::LiftIndex(CombMap const& m)
      : _stride(2 * static_cast<std::size_t>(m.target().edge_count())),
        _out(m.domain.vertex_count() * _stride, -1) {
    for (DirectedEdge d = 2 * m.domain.edge_count() - 1; d >= 0; --d) {
      _out[m.domain.source(d) * _stride + m.image(d)] = d;
    }
  }

  std::optional<std::vector<DirectedEdge>> lift_path(
      CombMap const&                   m,
      std::vector<DirectedEdge> const& path,
      int                              start) {
    if (start < 0 || start >= m.domain.vertex_count()) {
      throw PreconditionError("lift_path: unknown start vertex");
    }
    if (!path.empty() && m.target().source(path[0]) != m.vertex_image[start]) {
      throw PreconditionError("lift_path: start vertex has the wrong image");
    }
    LiftIndex const           index(m);
    std::vector<DirectedEdge> lifted;
    int                       at = start;
    for (DirectedEdge x : path) {
      DirectedEdge const d = index.out(at, x);
      if (d < 0) {
        return std::nullopt;
      }
      lifted.push_back(d);
      at = m.domain.target(d);
    }
    return lifted;
  }

  int path_end(Complex2 const& y, int start, std::vector<DirectedEdge> const& p) {
    return p.empty() ? start : y.target(p.back());
  }

  FiberProduct fiber_product(CombMap const& a, CombMap const& b) {
    if (!same_codomain(a, b)) {
      throw PreconditionError("fiber_product: codomains differ");
    }
    if (a.basepoint < 0 || b.basepoint < 0) {
      throw PreconditionError("fiber_product: both maps must be based");
    }
    Complex2 const& ya = a.domain;
    Complex2 const& yb = b.domain;
    auto const      pa = std::make_shared<Complex2 const>(ya);
    auto const      pb = std::make_shared<Complex2 const>(yb);

    FiberProduct f;
    f.to_codomain.codomain = a.codomain;
    f.to_a.codomain        = pa;
    f.to_b.codomain        = pb;
    Complex2& z            = f.to_codomain.domain;

    std::map<std::pair<int, int>, int> vertex_of;
    for (int u = 0; u < ya.vertex_count(); ++u) {
      for (int v = 0; v < yb.vertex_count(); ++v) {
        if (a.vertex_image[u] == b.vertex_image[v]) {
          vertex_of[{u, v}] = z.add_vertex();
          f.to_codomain.vertex_image.push_back(a.vertex_image[u]);
          f.to_a.vertex_image.push_back(u);
          f.to_b.vertex_image.push_back(v);
        }
      }
    }
    // B's directed edges by image, so pairing is linear in the output
    std::map<DirectedEdge, std::vector<DirectedEdge>> b_over;
    for (DirectedEdge d = 0; d < 2 * yb.edge_count(); ++d) {
      b_over[b.image(d)].push_back(d);
    }
    std::map<std::pair<int, int>, int> edge_of_pair;
    for (int e = 0; e < ya.edge_count(); ++e) {
      auto const it = b_over.find(a.edge_image[e]);
      if (it == b_over.end()) {
        continue;
      }
      for (DirectedEdge db : it->second) {
        int const s  = vertex_of.at({ya.edge(e).source, yb.source(db)});
        int const t  = vertex_of.at({ya.edge(e).target, yb.target(db)});
        int const pe = z.add_edge(s, t, ya.label(e));
        edge_of_pair[{e, edge_of(db)}] = pe;
        f.to_codomain.edge_image.push_back(a.edge_image[e]);
        f.to_a.edge_image.push_back(forward(e));
        f.to_b.edge_image.push_back(db);
      }
    }
    auto product_edge = [&](DirectedEdge da, DirectedEdge db) {
      return forward(edge_of_pair.at({edge_of(da), edge_of(db)})) ^ (da & 1);
    };
    for (int s = 0; s < ya.cell_count(); ++s) {
      int const  r  = a.cell_image[s].cell;
      auto const cs = aligned_boundary(a, s);
      for (int t = 0; t < yb.cell_count(); ++t) {
        if (b.cell_image[t].cell != r) {
          continue;
        }
        auto const                ct = aligned_boundary(b, t);
        std::vector<DirectedEdge> boundary;
        for (std::size_t p = 0; p < cs.size(); ++p) {
          boundary.push_back(product_edge(cs[p], ct[p]));
        }
        z.add_cell(std::move(boundary));
        f.to_codomain.cell_image.push_back({r, 0, false});
        for (auto [proj, m, cell] :
             {std::tuple{&f.to_a, &a, s}, std::tuple{&f.to_b, &b, t}}) {
          CellImage const& ci = m->cell_image[cell];
          proj->cell_image.push_back(ci.reflected
                                         ? CellImage{cell, ci.offset, true}
                                         : CellImage{cell, -ci.offset, false});
        }
      }
    }
    f.to_a.domain = z;
    f.to_b.domain = z;
    int const base = vertex_of.at({a.basepoint, b.basepoint});
    f.to_codomain.basepoint = f.to_a.basepoint = f.to_b.basepoint = base;
    f.based = component_of(f.to_codomain, base);
    return f;
  }

  CombMap component_of(CombMap const& m, int v) {
    Complex2 const& y = m.domain;
    std::vector<std::vector<DirectedEdge>> out(y.vertex_count());
    for (DirectedEdge d = 0; d < 2 * y.edge_count(); ++d) {
      out[y.source(d)].push_back(d);
    }
    std::vector<int> vnew(y.vertex_count(), -1);
    std::vector<int> order;
    std::queue<int>  queue;
    vnew[v] = 0;
    order.push_back(v);
    queue.push(v);
    while (!queue.empty()) {
      int const u = queue.front();
      queue.pop();
      for (DirectedEdge d : out[u]) {
        int const w = y.target(d);
        if (vnew[w] < 0) {
          vnew[w] = static_cast<int>(order.size());
          order.push_back(w);
          queue.push(w);
        }
      }
    }
    // keep original relative order of vertices
    std::sort(order.begin(), order.end());
    CombMap c;
    c.codomain = m.codomain;
    for (int u : order) {
      vnew[u] = c.domain.add_vertex();
      c.vertex_image.push_back(m.vertex_image[u]);
    }
    std::vector<int> enew(y.edge_count(), -1);
    for (int e = 0; e < y.edge_count(); ++e) {
      if (vnew[y.edge(e).source] >= 0) {
        enew[e] = c.domain.add_edge(
            vnew[y.edge(e).source], vnew[y.edge(e).target], y.label(e));
        c.edge_image.push_back(m.edge_image[e]);
      }
    }
    for (int s = 0; s < y.cell_count(); ++s) {
      auto const& b = y.boundary(s);
      if (enew[edge_of(b[0])] < 0) {
        continue;
      }
      std::vector<DirectedEdge> nb;
      for (DirectedEdge d : b) {
        nb.push_back(forward(enew[edge_of(d)]) ^ (d & 1));
      }
      c.domain.add_cell(std::move(nb));
      c.cell_image.push_back(m.cell_image[s]);
    }
    c.basepoint = vnew[v];
    c.endpoint  = m.endpoint >= 0 && vnew[m.endpoint] >= 0 ? vnew[m.endpoint]
                                                           : -1;
    return c;
  }

}  // namespace perim

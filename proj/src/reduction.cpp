#include "perim/reduction.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "perim/error.hpp"
#include "perim/mapping.hpp"

namespace perim {

  namespace {
    int mod(int a, int n) {
      return ((a % n) + n) % n;
    }

    Weight exponent_weight(Weighting const& w, int cell) {
      return cell_period(w.complex(), cell).exponent * w.cell_weight(cell);
    }
  }  // namespace

  std::vector<Candidate> enumerate_candidates(Weighting const& w, Mode mode) {
    std::vector<Candidate> result;
    Complex2 const&        x = w.complex();
    for (int c = 0; c < x.cell_count(); ++c) {
      int const    n     = x.boundary_length(c);
      Weight const bound = exponent_weight(w, c);
      for (int s = 0; s < n; ++s) {
        for (int len = 1; len <= n; ++len) {
          Weight const ps = w.boundary_perimeter(c, s + len, n - len);
          if (ps < bound || (mode == Mode::weak && ps == bound)) {
            result.push_back({c, s, len, ps < bound});
          }
        }
      }
    }
    return result;
  }

  CandidateTable::CandidateTable(Weighting const& w, Mode mode) : _mode(mode) {
    Complex2 const& x = w.complex();
    for (int c = 0; c < x.cell_count(); ++c) {
      int const n = x.boundary_length(c);
      _length.push_back(n);
      _grade.emplace_back(static_cast<std::size_t>(n) * (n + 1), 0);
    }
    for (Candidate const& q : enumerate_candidates(w, mode)) {
      _grade[q.cell][q.start * (_length[q.cell] + 1) + q.length] =
          q.strict ? 2 : 1;
    }
  }

  int CandidateTable::grade(int cell, int start, int length) const {
    return _grade.at(cell).at(mod(start, _length.at(cell))
                                  * (_length[cell] + 1)
                              + length);
  }

  namespace {
    // present[R][p * 2|E| + d]: some domain cell over R has d at position p.
    std::vector<std::vector<char>> present_table(CombMap const& m) {
      Complex2 const& x      = m.target();
      auto const      stride = 2 * static_cast<std::size_t>(
                                  m.domain.edge_count());
      std::vector<std::vector<char>> present(x.cell_count());
      for (int r = 0; r < x.cell_count(); ++r) {
        present[r].assign(x.boundary_length(r) * stride, 0);
      }
      for (int s = 0; s < m.domain.cell_count(); ++s) {
        int const  r = m.cell_image[s].cell;
        auto const c = aligned_boundary(m, s);
        for (std::size_t p = 0; p < c.size(); ++p) {
          present[r][p * stride + c[p]] = 1;
        }
      }
      return present;
    }
  }  // namespace

  std::optional<AttachmentSite> find_attachment(CombMap const&        m,
                                                CandidateTable const& table) {
    Complex2 const& x = m.target();
    Complex2 const& y = m.domain;
    LiftIndex const index(m);
    auto const      present = present_table(m);
    auto const      stride  = 2 * static_cast<std::size_t>(y.edge_count());
    bool const      weak    = table.mode() == Mode::weak;

    using Key = std::tuple<int, int, int, int, int>;  // rank, R, -|Q|, v, s
    std::optional<Key>            best_key;
    std::optional<AttachmentSite> best;
    std::vector<DirectedEdge>     lift;
    for (int r = 0; r < x.cell_count(); ++r) {
      auto const& b = x.boundary(r);
      int const   n = static_cast<int>(b.size());
      for (int v = 0; v < y.vertex_count(); ++v) {
        for (int s = 0; s < n; ++s) {
          if (m.vertex_image[v] != x.source(b[s])) {
            continue;
          }
          lift.clear();
          int at = v;
          while (static_cast<int>(lift.size()) < n) {
            DirectedEdge const d =
                index.out(at, b[(s + lift.size()) % n]);
            if (d < 0) {
              break;
            }
            lift.push_back(d);
            at = y.target(d);
          }
          auto const f = static_cast<int>(lift.size());
          if (f == 0) {
            continue;
          }
          bool const complete = f == n;
          // an incomplete Q must not extend backwards
          if (!complete && index.out(v, reverse(b[mod(s - 1, n)])) >= 0) {
            continue;
          }
          if (present[r][s * stride + lift[0]]) {
            continue;  // a packet lift already restricts to Q
          }
          int const grade = complete ? 2 : table.grade(r, s, f);
          if (grade == 0) {
            continue;
          }
          Key const key{weak && grade == 1 ? 0 : 1, r, -f, v, s};
          if (!best_key || key < *best_key) {
            best_key = key;
            best = AttachmentSite{{r, s, f, grade == 2}, v, lift, complete};
          }
        }
      }
      if (best_key && (!weak || std::get<0>(*best_key) == 0)) {
        break;  // no later cell can come first
      }
    }
    return best;
  }

  std::optional<AttachmentSite> find_attachment(CombMap const&   m,
                                                Weighting const& w,
                                                Mode             mode) {
    return find_attachment(m, CandidateTable(w, mode));
  }

  AttachResult attach_packet(CombMap const&        m,
                             Weighting const&      w,
                             AttachmentSite const& site) {
    Complex2 const& x = m.target();
    Candidate const q = site.candidate;
    if (q.cell < 0 || q.cell >= x.cell_count()) {
      throw PreconditionError("attach_packet: unknown cell");
    }
    auto const& b   = x.boundary(q.cell);
    int const   n   = static_cast<int>(b.size());
    auto const  per = cell_period(x, q.cell);
    if (static_cast<int>(site.lift.size()) != q.length || q.length < 1
        || q.length > n || site.complete != (q.length == n)) {
      throw PreconditionError("attach_packet: site does not match the map");
    }
    int at = site.start_vertex;
    for (int t = 0; t < q.length; ++t) {
      DirectedEdge const d = site.lift[t];
      if (edge_of(d) >= m.domain.edge_count() || m.domain.source(d) != at
          || m.image(d) != b[(q.start + t) % n]) {
        throw PreconditionError("attach_packet: site does not match the map");
      }
      at = m.domain.target(d);
    }
    int const end = at;
    for (int s = 0; s < m.domain.cell_count(); ++s) {
      if (m.cell_image[s].cell != q.cell) {
        continue;
      }
      auto const c       = aligned_boundary(m, s);
      bool       present = true;
      for (int t = 0; t < q.length && present; ++t) {
        present = c[(q.start + t) % n] == site.lift[t];
      }
      if (present) {
        throw PreconditionError("attach_packet: the packet already lifts there");
      }
    }

    AttachResult result{m, 0};
    CombMap&     y = result.map;
    std::vector<DirectedEdge> circle(site.lift);  // circle[t] over R[s + t]
    if (site.complete) {
      if (end != site.start_vertex) {
        std::vector<int> vrep(y.domain.vertex_count());
        for (int v = 0; v < y.domain.vertex_count(); ++v) {
          vrep[v] = v;
        }
        vrep[std::max(end, site.start_vertex)] =
            std::min(end, site.start_vertex);
        std::vector<DirectedEdge> erep(y.domain.edge_count());
        for (int e = 0; e < y.domain.edge_count(); ++e) {
          erep[e] = forward(e);
        }
        y = quotient(y, vrep, erep);
      }
    } else {
      // the complement S runs from the end of Q back to its start
      int from = end;
      for (int t = q.length; t < n; ++t) {
        int to = site.start_vertex;
        if (t + 1 < n) {
          to = y.domain.add_vertex();
          y.vertex_image.push_back(x.target(b[(q.start + t) % n]));
        }
        DirectedEdge const image = b[(q.start + t) % n];
        int const e = y.domain.add_edge(from, to, x.label(edge_of(image)));
        y.edge_image.push_back(image);
        circle.push_back(forward(e));
        from = to;
      }
    }

    std::set<std::tuple<int, int, int>> sides;  // (edge, R, p) present
    for (int s = 0; s < y.domain.cell_count(); ++s) {
      auto const c = aligned_boundary(y, s);
      for (int p = 0; p < static_cast<int>(c.size()); ++p) {
        sides.emplace(edge_of(c[p]), y.cell_image[s].cell, p);
      }
    }
    Weight gained = 0;
    for (int k = 0; k < per.exponent; ++k) {
      std::vector<DirectedEdge> c(n);
      for (int p = 0; p < n; ++p) {
        c[p] = circle[mod(k * per.period_length + p - q.start, n)];
        if (sides.emplace(edge_of(c[p]), q.cell, p).second) {
          gained += w.side_weight(q.cell, p);
        }
      }
      add_aligned_cell(y, q.cell, std::move(c));
    }
    y = remove_redundant(y);

    if (site.complete) {
      result.perimeter_change = -gained;
      if (-gained > -w.cell_weight(q.cell)) {
        throw std::logic_error("complete attachment dropped P by less than "
                               "the cell weight");
      }
    } else {
      Weight const packet =
          w.boundary_perimeter(q.cell, 0, n) - exponent_weight(w, q.cell);
      result.perimeter_change =
          packet - w.boundary_perimeter(q.cell, q.start, q.length);
      Weight const counted =
          w.boundary_perimeter(q.cell, q.start + q.length, n - q.length)
          - gained;
      if (counted != result.perimeter_change) {
        throw std::logic_error("incomplete attachment bookkeeping failed");
      }
    }
    return result;
  }

  std::string to_string(StepKind k) {
    switch (k) {
      case StepKind::fold: return "fold";
      case StepKind::attach_complete: return "attach-complete";
      case StepKind::attach_incomplete: return "attach-incomplete";
      case StepKind::repair: return "repair";
    }
    return "?";
  }

  std::string ReductionTrace::to_text() const {
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      out += "step=" + std::to_string(k + 1) + " kind="
             + perim::to_string(steps[k].kind)
             + " P=" + std::to_string(steps[k].perimeter)
             + " edges=" + std::to_string(steps[k].edges) + '\n';
    }
    return out;
  }

  ReduceResult reduce(CombMap const&       m,
                      Weighting const&     w,
                      ReduceOptions const& options) {
    if (options.mode == Mode::weak && !options.step_limit) {
      throw PreconditionError("weak reduction needs a step limit");
    }
    validate(m);
    CandidateTable const table(w, options.mode);
    ReduceResult         result{m, {}, false};
    CombMap&             y = result.map;
    Weight               p = map_perimeter(w, y);
    result.trace.initial_perimeter = p;
    result.trace.initial_edges     = y.domain.edge_count();
    result.trace.initial_euler     = y.domain.euler_characteristic();

    auto record = [&](StepKind kind, Weight delta, int cell) {
      p += delta;
      if (options.verify && map_perimeter(w, y) != p) {
        throw std::logic_error("tracked perimeter disagrees with the "
                               "definition");
      }
      result.trace.steps.push_back({kind,
                                    p,
                                    y.domain.edge_count(),
                                    y.domain.euler_characteristic(),
                                    delta,
                                    cell});
    };
    auto limit_reached = [&] {
      return options.step_limit
             && static_cast<int>(result.trace.steps.size())
                    >= *options.step_limit;
    };

    while (!limit_reached()) {
      if (auto site = find_fold(y)) {
        y = apply_fold(y, *site);
        Weight const now = map_perimeter(w, y);
        record(StepKind::fold, now - p, -1);
        continue;
      }
      int added = 0;
      CombMap repaired = repair_packing(y, &added);
      if (added > 0) {
        y = std::move(repaired);
        Weight const now = map_perimeter(w, y);
        record(StepKind::repair, now - p, -1);
        continue;
      }
      auto const site = find_attachment(y, table);
      if (!site) {
        return result;
      }
      auto attached = attach_packet(y, w, *site);
      y             = std::move(attached.map);
      record(site->complete ? StepKind::attach_complete
                            : StepKind::attach_incomplete,
             attached.perimeter_change,
             site->candidate.cell);
    }
    // the limit is exhausted only if more work remains
    result.exhausted = find_fold(y) || !is_packed(y)
                       || find_attachment(y, table).has_value();
    return result;
  }

  ExtractedPresentation extract_presentation(CombMap const& m) {
    Complex2 const& y = m.domain;
    ExtractedPresentation result;
    if (y.vertex_count() == 0) {
      return result;
    }
    int const base = m.basepoint >= 0 ? m.basepoint : 0;
    std::vector<std::vector<DirectedEdge>> out(y.vertex_count());
    for (DirectedEdge d = 0; d < 2 * y.edge_count(); ++d) {
      out[y.source(d)].push_back(d);
    }
    std::vector<char> tree(y.edge_count(), 0);
    std::vector<char> seen(y.vertex_count(), 0);
    // codomain word from the basepoint to each vertex along the tree
    std::vector<Word> to_vertex(y.vertex_count());
    std::queue<int>   queue;
    seen[base] = 1;
    queue.push(base);
    while (!queue.empty()) {
      int const u = queue.front();
      queue.pop();
      std::vector<DirectedEdge> ds = out[u];
      std::sort(ds.begin(), ds.end());
      for (DirectedEdge d : ds) {
        int const v = y.target(d);
        if (!seen[v]) {
          seen[v]           = 1;
          tree[edge_of(d)]  = 1;
          to_vertex[v]      = to_vertex[u];
          to_vertex[v].push_back(m.image(d));
          queue.push(v);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw PreconditionError("extract_presentation: domain is disconnected");
    }
    std::vector<int> generator(y.edge_count(), -1);
    for (int e = 0; e < y.edge_count(); ++e) {
      if (!tree[e]) {
        generator[e] = result.presentation.generator_count();
        result.presentation.generators.push_back(
            "x" + std::to_string(generator[e] + 1));
        Word image = to_vertex[y.edge(e).source];
        image.push_back(m.edge_image[e]);
        Word const back = inverse(to_vertex[y.edge(e).target]);
        image.insert(image.end(), back.begin(), back.end());
        result.generator_images.push_back(free_reduce(image));
      }
    }
    for (int s = 0; s < y.cell_count(); ++s) {
      Word r;
      for (DirectedEdge d : y.boundary(s)) {
        if (generator[edge_of(d)] >= 0) {
          r.push_back(make_letter(generator[edge_of(d)], is_reversed(d)));
        }
      }
      r = cyclic_reduce(r);
      if (!r.empty()) {
        result.presentation.relators.push_back(std::move(r));
      }
    }
    return result;
  }

  Weight relator_bound(Weighting const& w, std::vector<Word> const& words) {
    Weight total = 0;
    for (Word const& u : words) {
      total += path_perimeter(w, u);
    }
    return total;
  }

  Weight euler_perimeter(CombMap const& m, Weighting const& w) {
    return m.domain.euler_characteristic() + map_perimeter(w, m);
  }

}  // namespace perim

#include "perim/subgroups.hpp"

#include <tuple>

#include "perim/error.hpp"
#include "perim/mapping.hpp"

namespace perim {

  namespace {
    Verdict free_verdict() {
      Verdict v;
      v.criterion  = "free";
      v.holds      = true;
      v.conclusion = Conclusion::both;
      v.notes.push_back("no relators: Stallings folding is exact");
      return v;
    }
  }  // namespace

  std::optional<Verdict> find_certificate(Presentation const& p,
                                          Weighting const&    w,
                                          Purpose             purpose) {
    Complex2 const& x = w.complex();
    if (x.cell_count() == 0) {
      return free_verdict();
    }
    auto const pieces = compute_pieces(x);
    for (auto variant : {ScVariant::c6t3, ScVariant::c4t4}) {
      Verdict v = check_sc_weight(w, pieces, variant, true, &p);
      if (v.holds) {
        return v;
      }
    }
    bool const one_relator = x.cell_count() == 1 && x.vertex_count() == 1;
    bool const unit        = w == unit_weighting(w.complex_ptr());
    std::optional<PeriodExponent> pe;
    if (one_relator) {
      pe = period_exponent(p.relators.at(0));
    }
    if (purpose == Purpose::intersection) {
      if (one_relator && unit) {
        Verdict v = check_equalweights(pe->period, pe->exponent);
        if (v.conclusion == Conclusion::both) {
          return v;
        }
      }
      return std::nullopt;
    }
    if (Verdict v = check_one_relator_torsion(w, &p); v.holds) {
      return v;
    }
    if (one_relator && unit) {
      if (Verdict v = check_equalweights(pe->period, pe->exponent); v.holds) {
        return v;
      }
    }
    if (one_relator) {
      auto const mg = min_generator(pe->period);
      if (w == min_generator_weighting(w.complex_ptr(), mg.generator)) {
        if (Verdict v = check_min_generator(pe->period, pe->exponent);
            v.holds) {
          return v;
        }
      }
    }
    for (auto variant : {ScVariant::c6t3, ScVariant::c4t4}) {
      Verdict v = check_sc_weight(w, pieces, variant, false, &p);
      if (v.holds) {
        return v;
      }
    }
    return std::nullopt;
  }

  namespace {
    std::optional<Verdict> require_certificate(Presentation const&    p,
                                               Weighting const&       w,
                                               Purpose                purpose,
                                               SubgroupOptions const& options,
                                               bool&                  heuristic) {
      auto cert = find_certificate(p, w, purpose);
      if (!cert && !options.force) {
        throw NoCertificate("no criterion certifies this computation; "
                            "use force for a heuristic answer");
      }
      heuristic = !cert;
      return cert;
    }

    ReduceOptions reduce_options(SubgroupOptions const& options) {
      return {Mode::strict, options.step_limit, options.verify};
    }

    CombMap run(CombMap const&         m,
                Weighting const&       w,
                SubgroupOptions const& options,
                SubgroupResult&        result) {
      auto r = reduce(m, w, reduce_options(options));
      result.traces.push_back(std::move(r.trace));
      result.exhausted = result.exhausted || r.exhausted;
      return std::move(r.map);
    }

    // Reduced, augmented and reduced again.
    CombMap prepared(CombMap const&         m,
                     Weighting const&       w,
                     SubgroupOptions const& options,
                     SubgroupResult&        result) {
      CombMap const reduced = run(m, w, options, result);
      CombMap const grown =
          repair_packing(fold_to_immersion(augment_vertices(reduced)));
      return run(grown, w, options, result);
    }
  }  // namespace

  SubgroupResult subgroup_presentation(Presentation const&      p,
                                       Weighting const&         w,
                                       std::vector<Word> const& gens,
                                       SubgroupOptions const&   options) {
    SubgroupResult result;
    result.certificate = require_certificate(
        p, w, Purpose::presentation, options, result.heuristic);
    result.complex =
        run(bouquet_map(w.complex_ptr(), gens), w, options, result);
    result.presentation = extract_presentation(result.complex);
    return result;
  }

  MemberResult member(Presentation const&      p,
                      Weighting const&         w,
                      std::vector<Word> const& gens,
                      Word const&              u,
                      SubgroupOptions const&   options) {
    MemberResult result;
    result.certificate = require_certificate(
        p, w, Purpose::membership, options, result.heuristic);
    auto r = reduce(bouquet_map(w.complex_ptr(), gens, u),
                    w,
                    reduce_options(options));
    result.member    = r.map.basepoint == r.map.endpoint;
    result.trace     = std::move(r.trace);
    result.exhausted = r.exhausted;
    return result;
  }

  CombMap augment_vertices(CombMap const& m) {
    Complex2 const& x = m.target();
    LiftIndex const index(m);
    std::set<std::tuple<int, int, DirectedEdge>> present;  // (R, p, edge)
    for (int s = 0; s < m.domain.cell_count(); ++s) {
      auto const c = aligned_boundary(m, s);
      for (int p = 0; p < static_cast<int>(c.size()); ++p) {
        present.emplace(m.cell_image[s].cell, p, c[p]);
      }
    }
    CombMap   result = m;
    int const count  = m.domain.vertex_count();
    for (int v = 0; v < count; ++v) {
      for (int r = 0; r < x.cell_count(); ++r) {
        auto const& b = x.boundary(r);
        int const   n = static_cast<int>(b.size());
        for (int p = 0; p < n; ++p) {
          if (x.source(b[p]) != m.vertex_image[v]) {
            continue;
          }
          DirectedEdge const d = index.out(v, b[p]);
          if (d >= 0 && present.count({r, p, d}) > 0) {
            continue;  // would fold onto that cell and be redundant
          }
          std::vector<DirectedEdge> circle;
          int                       at = v;
          for (int t = 0; t < n; ++t) {
            DirectedEdge const image = b[(p + t) % n];
            int                to    = v;
            if (t + 1 < n) {
              to = result.domain.add_vertex();
              result.vertex_image.push_back(x.target(image));
            }
            int const e =
                result.domain.add_edge(at, to, x.label(edge_of(image)));
            result.edge_image.push_back(image);
            circle.push_back(forward(e));
            at = to;
          }
          std::vector<DirectedEdge> aligned(n);
          for (int j = 0; j < n; ++j) {
            aligned[j] = circle[((j - p) % n + n) % n];
          }
          add_aligned_cell(result, r, std::move(aligned));
        }
      }
    }
    return result;
  }

  SubgroupResult intersect(Presentation const&      p,
                           Weighting const&         w,
                           std::vector<Word> const& gens_h,
                           std::vector<Word> const& gens_k,
                           SubgroupOptions const&   options) {
    SubgroupResult result;
    result.certificate = require_certificate(
        p, w, Purpose::intersection, options, result.heuristic);
    CombMap const a =
        prepared(bouquet_map(w.complex_ptr(), gens_h), w, options, result);
    CombMap const b =
        prepared(bouquet_map(w.complex_ptr(), gens_k), w, options, result);
    result.complex      = fiber_product(a, b).based;
    result.presentation = extract_presentation(result.complex);
    return result;
  }

  SubgroupResult magnus_intersect(Presentation const&      p,
                                  std::set<int> const&     generators,
                                  std::vector<Word> const& gens_h,
                                  SubgroupOptions const&   options) {
    auto const x  = std::make_shared<Complex2 const>(standard_complex(p));
    auto const mw = magnus_weighting(x, generators);
    if (!mw.weighting) {
      throw PreconditionError("subgraph weighting is invalid: "
                              + mw.verdict.witnesses.at(0).detail);
    }
    Weighting const& w = *mw.weighting;
    SubgroupResult   result;
    result.certificate = require_certificate(
        p, w, Purpose::intersection, options, result.heuristic);
    CombMap const a =
        prepared(bouquet_map(x, gens_h), w, options, result);
    // the subgraph as a map: one vertex and the listed loops
    CombMap sub;
    sub.codomain  = x;
    sub.basepoint = sub.domain.add_vertex();
    sub.vertex_image.push_back(0);
    for (int g : generators) {
      sub.domain.add_edge(0, 0, x->label(g));
      sub.edge_image.push_back(forward(g));
    }
    result.complex      = fiber_product(a, sub).based;
    result.presentation = extract_presentation(result.complex);
    return result;
  }

}  // namespace perim

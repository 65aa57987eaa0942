#include "perim/report.hpp"

#include "perim/pieces.hpp"

namespace perim {

  namespace {
    Json count(int value) {
      return value == infinity ? Json("infinite") : Json(value);
    }

    Json certificate_json(std::optional<Verdict> const& v, bool heuristic) {
      if (!v) {
        return Json{{"criterion", nullptr}, {"heuristic", heuristic}};
      }
      return Json{{"criterion", v->criterion},
                  {"conclusion", to_string(v->conclusion)},
                  {"heuristic", heuristic}};
    }
  }  // namespace

  Json to_json(Verdict const& v) {
    Json witnesses = Json::array();
    for (Witness const& w : v.witnesses) {
      witnesses.push_back(Json{{"cell", w.cell},
                               {"start", w.start},
                               {"length", w.length},
                               {"path", w.path},
                               {"lhs", w.lhs},
                               {"rhs", w.rhs},
                               {"detail", w.detail}});
    }
    return Json{{"criterion", v.criterion},
                {"holds", v.holds},
                {"conclusion", to_string(v.conclusion)},
                {"witnesses", witnesses},
                {"notes", v.notes}};
  }

  Json to_json(Presentation const& p) {
    Json relators = Json::array();
    for (Word const& r : p.relators) {
      relators.push_back(to_string(p, r));
    }
    return Json{{"generators", p.generators}, {"relators", relators}};
  }

  Json info_report(InputFile const& f) {
    auto const x = std::make_shared<Complex2 const>(
        standard_complex(f.presentation));
    Weighting const w = make_weighting(f, x);
    auto const pieces = compute_pieces(*x);
    Json       edges  = Json::array();
    for (int e = 0; e < x->edge_count(); ++e) {
      edges.push_back(Json{{"generator", f.presentation.generators[e]},
                           {"perimeter", w.edge_perimeter(e)},
                           {"sides", sides_at(*x, e).size()}});
    }
    Json cells = Json::array();
    for (int c = 0; c < x->cell_count(); ++c) {
      auto const per = cell_period(*x, c);
      cells.push_back(
          Json{{"relator", to_string(f.presentation, f.presentation.relators[c])},
               {"length", x->boundary_length(c)},
               {"weight", w.cell_weight(c)},
               {"period", per.period_length},
               {"exponent", per.exponent},
               {"longest_piece", pieces.max_piece[c]},
               {"piece_cover", count(cyclic_piece_cover(pieces, c))}});
    }
    auto const c6 = check_small_cancellation(*x, pieces, 6, 3, std::nullopt);
    auto const c4 = check_small_cancellation(*x, pieces, 4, 4, std::nullopt);
    int        girth = infinity;
    for (int g : c6.vertex_girth) {
      girth = std::min(girth, g);
    }
    Json sc{{"C(6)", c6.c_p},
            {"C(4)", c4.c_p},
            {"T(3)", c6.t_q},
            {"T(4)", c4.t_q},
            {"link_girth", count(girth)},
            {"largest_C'(1/n)",
             count(largest_small_cancellation_denominator(*x, pieces))},
            {"note", "T(q) via link girth"}};
    return Json{{"presentation", to_json(f.presentation)},
                {"edges", edges},
                {"cells", cells},
                {"small_cancellation", sc},
                {"notes", f.notes}};
  }

  Json to_json(SubgroupResult const& r, Presentation const& ambient) {
    Json images = Json::array();
    for (Word const& u : r.presentation.generator_images) {
      images.push_back(to_string(ambient, u));
    }
    return Json{{"presentation", to_json(r.presentation.presentation)},
                {"generator_words", images},
                {"certificate", certificate_json(r.certificate, r.heuristic)},
                {"exhausted", r.exhausted},
                {"vertices", r.complex.domain.vertex_count()},
                {"edges", r.complex.domain.edge_count()},
                {"cells", r.complex.domain.cell_count()}};
  }

  Json to_json(MemberResult const& r) {
    return Json{{"member", r.member},
                {"certificate", certificate_json(r.certificate, r.heuristic)},
                {"exhausted", r.exhausted},
                {"steps", r.trace.steps.size()}};
  }

}  // namespace perim

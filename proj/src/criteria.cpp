#include "perim/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "perim/error.hpp"

namespace perim {

  std::string to_string(Conclusion c) {
    switch (c) {
      case Conclusion::none: return "none";
      case Conclusion::coherent: return "coherent";
      case Conclusion::locally_quasiconvex: return "locally-quasiconvex";
      case Conclusion::both: return "both";
    }
    return "none";
  }

  Verdict inapplicable(std::string criterion, std::string reason) {
    Verdict v;
    v.criterion = std::move(criterion);
    v.notes.push_back("inapplicable: " + std::move(reason));
    return v;
  }

  namespace {
    std::string path_text(Weighting const&    w,
                          Presentation const* names,
                          int                 cell,
                          int                 start,
                          int                 length) {
      auto const path = boundary_path(w.complex(), cell, start, length);
      if (names != nullptr) {
        return spell(*names, path);
      }
      std::string out;
      for (DirectedEdge d : path) {
        out += (out.empty() ? "" : " ") + w.complex().label_of(d);
      }
      return out;
    }

    // Tracks the subpath with the largest excess, ties to smaller
    // (start, length).
    struct Worst {
      bool   found = false;
      Weight excess = 0;
      int    start  = 0;
      int    length = 0;
      Weight lhs    = 0;

      void offer(Weight ex, int s, int len, Weight p) {
        if (!found || ex > excess
            || (ex == excess && std::tie(s, len) < std::tie(start, length))) {
          found  = true;
          excess = ex;
          start  = s;
          length = len;
          lhs    = p;
        }
      }
    };
  }  // namespace

  Verdict check_one_relator_torsion(Weighting const&    w,
                                    Presentation const* names) {
    std::string const id = "one-relator-torsion";
    Complex2 const&   x  = w.complex();
    if (x.cell_count() != 1 || x.vertex_count() != 1) {
      return inapplicable(id, "needs exactly one 2-cell and one 0-cell");
    }
    auto const per = cell_period(x, 0);
    if (per.exponent < 2) {
      return inapplicable(id, "relator is not a proper power (n = 1)");
    }
    Weight const bound = per.exponent * w.cell_weight(0);
    int const    n     = x.boundary_length(0);
    Worst        worst;
    Weight       max_p = 0;
    for (int s = 0; s < n; ++s) {
      for (int len = 1; len < per.period_length; ++len) {
        Weight const p = w.boundary_perimeter(0, s, len);
        max_p          = std::max(max_p, p);
        if (p > bound) {
          worst.offer(p - bound, s, len, p);
        }
      }
    }
    Verdict v;
    v.criterion = id;
    v.holds     = !worst.found;
    v.notes.push_back("n = " + std::to_string(per.exponent) + ", |W| = "
                      + std::to_string(per.period_length)
                      + ", max P(S) over |S| < |W| is "
                      + std::to_string(max_p) + ", n Wt(R) = "
                      + std::to_string(bound));
    if (v.holds) {
      v.conclusion = Conclusion::coherent;
    } else {
      v.witnesses.push_back({0,
                             worst.start,
                             worst.length,
                             path_text(w, names, 0, worst.start, worst.length),
                             worst.lhs,
                             bound,
                             "P(S) > n Wt(R)"});
    }
    return v;
  }

  Verdict check_equalweights(Word const& w, int n) {
    std::string const id = "equalweights";
    if (w.empty() || !is_cyclically_reduced(w)) {
      throw PreconditionError("equalweights needs a cyclically reduced word");
    }
    if (n < 1) {
      throw PreconditionError("equalweights needs n >= 1");
    }
    auto const len = static_cast<int>(w.size());
    Verdict    v;
    v.criterion = id;
    v.holds     = n >= len - 1;
    v.notes.push_back("n = " + std::to_string(n) + ", |W| = "
                      + std::to_string(len) + "; coherent needs n >= "
                      + std::to_string(len - 1)
                      + ", locally quasiconvex needs n >= "
                      + std::to_string(3 * len));
    if (v.holds) {
      v.conclusion = n >= 3 * len ? Conclusion::both : Conclusion::coherent;
    } else {
      Witness wit;
      wit.lhs    = n;
      wit.rhs    = len - 1;
      wit.detail = "n < |W| - 1";
      v.witnesses.push_back(wit);
    }
    return v;
  }

  MinGenerator min_generator(Word const& w) {
    if (w.empty()) {
      throw PreconditionError("min_generator: empty word");
    }
    int top = 0;
    for (Letter x : w) {
      top = std::max(top, generator_of(x));
    }
    std::vector<int> count(top + 1, 0);
    for (Letter x : w) {
      ++count[generator_of(x)];
    }
    MinGenerator best{-1, 0};
    for (int g = 0; g <= top; ++g) {
      if (count[g] > 0 && (best.generator < 0 || count[g] < best.occurrences)) {
        best = {g, count[g]};
      }
    }
    return best;
  }

  Verdict check_min_generator(Word const& w, int n) {
    std::string const id = "min-generator";
    if (!is_cyclically_reduced(w)) {
      throw PreconditionError("min-generator needs a cyclically reduced word");
    }
    if (n < 2) {
      return inapplicable(id, "needs exponent n >= 2");
    }
    auto const mg = min_generator(w);
    Verdict    v;
    v.criterion = id;
    v.holds     = n >= mg.occurrences;
    v.notes.push_back("k = " + std::to_string(mg.occurrences)
                      + " occurrences of generator "
                      + std::to_string(mg.generator + 1)
                      + "; certificate weighting: 1 on its sides, 0 elsewhere");
    if (v.holds) {
      v.conclusion = Conclusion::coherent;
    } else {
      Witness wit;
      wit.lhs    = n;
      wit.rhs    = mg.occurrences;
      wit.detail = "n < k";
      v.witnesses.push_back(wit);
    }
    return v;
  }

  Weighting min_generator_weighting(std::shared_ptr<Complex2 const> x,
                                    int                             generator) {
    std::vector<Weight> per_edge(x->edge_count(), 0);
    per_edge.at(generator) = 1;
    return edge_weighting(std::move(x), per_edge);
  }

  Verdict check_sc_weight(Weighting const&    w,
                          ScVariant           variant,
                          bool                strict,
                          Presentation const* names) {
    return check_sc_weight(
        w, compute_pieces(w.complex()), variant, strict, names);
  }

  Verdict check_sc_weight(Weighting const&    w,
                          PieceTable const&   pieces,
                          ScVariant           variant,
                          bool                strict,
                          Presentation const* names) {
    bool const        c6 = variant == ScVariant::c6t3;
    std::string const id = std::string(c6 ? "sc-c6t3" : "sc-c4t4")
                           + (strict ? "-strict" : "");
    int const         p  = c6 ? 6 : 4;
    int const         q  = c6 ? 3 : 4;
    int const         k  = c6 ? 3 : 2;
    Complex2 const&   x  = w.complex();
    auto const sc = check_small_cancellation(x, pieces, p, q, std::nullopt);
    if (!sc.holds()) {
      Verdict v = inapplicable(id,
                               std::string(c6 ? "C(6)-T(3)" : "C(4)-T(4)")
                                   + " fails (T(q) via link girth)");
      for (auto const& why : sc.witnesses) {
        Witness wit;
        wit.detail = why;
        v.witnesses.push_back(wit);
      }
      return v;
    }
    Verdict v;
    v.criterion = id;
    v.notes.push_back(std::string(c6 ? "C(6)-T(3)" : "C(4)-T(4)")
                      + " holds (T(q) via link girth)");
    for (int c = 0; c < x.cell_count(); ++c) {
      int const    n     = x.boundary_length(c);
      Weight const bound = cell_period(x, c).exponent * w.cell_weight(c);
      Worst        worst;
      Weight       max_p = 0;
      for (int s = 0; s < n; ++s) {
        for (int len = 1; len <= n; ++len) {
          if (min_piece_cover(pieces, c, s, len) > k) {
            break;  // covers only grow with the length
          }
          Weight const pp = w.boundary_perimeter(c, s, len);
          max_p           = std::max(max_p, pp);
          if (pp > bound || (strict && pp == bound)) {
            worst.offer(pp - bound, s, len, pp);
          }
        }
      }
      v.notes.push_back("cell " + std::to_string(c) + ": max P(S) "
                        + std::to_string(max_p) + ", n Wt(R) "
                        + std::to_string(bound));
      if (worst.found) {
        v.witnesses.push_back(
            {c,
             worst.start,
             worst.length,
             path_text(w, names, c, worst.start, worst.length),
             worst.lhs,
             bound,
             strict ? "P(S) >= n Wt(R)" : "P(S) > n Wt(R)"});
      }
    }
    v.holds = v.witnesses.empty();
    if (v.holds) {
      v.conclusion = strict ? Conclusion::both : Conclusion::coherent;
    }
    return v;
  }

  int largest_small_cancellation_denominator(Complex2 const&   x,
                                             PieceTable const& pieces) {
    int best = infinity;
    for (int c = 0; c < x.cell_count(); ++c) {
      int const m = pieces.max_piece[c];
      if (m > 0) {
        best = std::min(best, (x.boundary_length(c) - 1) / m);
      }
    }
    return best;
  }

  Verdict check_few_occurrences(Presentation const& p) {
    Complex2 const x      = standard_complex(p);
    auto const     pieces = compute_pieces(x);
    int const      n = largest_small_cancellation_denominator(x, pieces);
    auto const     occ = generator_occurrences(p);
    Verdict        v;
    v.criterion = "few-occurrences";
    v.notes.push_back(n == infinity ? "no pieces: C'(1/n) for every n"
                                    : "largest n with C'(1/n) is "
                                          + std::to_string(n));
    for (int g = 0; g < p.generator_count(); ++g) {
      if (n != infinity && 3LL * occ[g] > n) {
        Witness wit;
        wit.path   = p.generators[g];
        wit.lhs    = 3LL * occ[g];
        wit.rhs    = n;
        wit.detail = "generator " + p.generators[g] + " occurs "
                     + std::to_string(occ[g]) + " times, more than n/3";
        v.witnesses.push_back(wit);
      }
    }
    v.holds = v.witnesses.empty();
    if (v.holds) {
      v.conclusion = Conclusion::both;
    }
    return v;
  }

  PowerBound power_theorem(std::vector<Word> const&                words,
                           std::optional<std::vector<int>> const& exponents) {
    if (words.empty()) {
      throw PreconditionError("power_theorem needs at least one word");
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word const& u = words[i];
      if (u.empty() || !is_cyclically_reduced(u)) {
        throw PreconditionError("power_theorem: word "
                                + std::to_string(i + 1)
                                + " is not cyclically reduced");
      }
      if (period_exponent(u).exponent > 1) {
        throw PreconditionError("power_theorem: word " + std::to_string(i + 1)
                                + " is a proper power");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (cyclically_conjugate(u, words[j])) {
          throw PreconditionError("power_theorem: words "
                                  + std::to_string(j + 1) + " and "
                                  + std::to_string(i + 1)
                                  + " are conjugate up to inversion");
        }
      }
    }
    if (exponents && exponents->size() != words.size()) {
      throw PreconditionError("power_theorem: one exponent per word needed");
    }
    std::int64_t longest = 0, shortest = words[0].size(), total = 0;
    for (Word const& u : words) {
      auto const len = static_cast<std::int64_t>(u.size());
      longest        = std::max(longest, len);
      shortest       = std::min(shortest, len);
      total += len;
    }
    PowerBound b;
    b.num = 6 * longest * total;
    b.den = shortest;
    auto const g = std::gcd(b.num, b.den);
    b.num /= g;
    b.den /= g;
    b.N = (b.num + b.den - 1) / b.den;
    b.verdict.criterion = "power";
    b.verdict.notes.push_back("N = ceil(6 * " + std::to_string(longest)
                              + " / " + std::to_string(shortest) + " * "
                              + std::to_string(total)
                              + ") = " + std::to_string(b.N));
    if (!exponents) {
      Verdict v = inapplicable("power", "no exponents supplied");
      v.notes.push_back(b.verdict.notes.back());
      b.verdict = v;
      return b;
    }
    bool all_ge = true;
    bool all_gt = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
      int const n = (*exponents)[i];
      all_ge      = all_ge && n >= b.N;
      all_gt      = all_gt && n > b.N;
      if (n < b.N) {
        Witness wit;
        wit.cell   = static_cast<int>(i);
        wit.lhs    = n;
        wit.rhs    = b.N;
        wit.detail = "exponent below N";
        b.verdict.witnesses.push_back(wit);
      }
    }
    b.verdict.holds      = all_ge;
    b.verdict.conclusion = all_gt   ? Conclusion::both
                           : all_ge ? Conclusion::coherent
                                    : Conclusion::none;
    return b;
  }

  MagnusWeighting magnus_weighting(std::shared_ptr<Complex2 const> x,
                                   std::set<int> const&            generators) {
    MagnusWeighting result;
    result.verdict.criterion = "magnus";
    std::vector<Weight> per_edge(x->edge_count(), 1);
    for (int g : generators) {
      if (g < 0 || g >= x->edge_count()) {
        throw PreconditionError("magnus_weighting: unknown generator");
      }
      per_edge[g] = 0;
    }
    for (int c = 0; c < x->cell_count(); ++c) {
      bool inside = true;
      for (DirectedEdge d : x->boundary(c)) {
        inside = inside && per_edge[edge_of(d)] == 0;
      }
      if (inside) {
        Witness wit;
        wit.cell   = c;
        wit.lhs    = 0;
        wit.detail = "relator uses only subgraph generators (free factor "
                     "case): cell weight 0";
        result.verdict.witnesses.push_back(wit);
      }
    }
    if (!result.verdict.witnesses.empty()) {
      return result;
    }
    result.weighting.emplace(edge_weighting(x, per_edge));
    result.verdict.holds = true;
    for (int c = 0; c < x->cell_count(); ++c) {
      result.verdict.notes.push_back(
          "cell " + std::to_string(c) + " weight "
          + std::to_string(result.weighting->cell_weight(c)));
    }
    result.verdict.notes.push_back("subgraph perimeter 0");
    return result;
  }

  Verdict small_cancellation_verdict(Complex2 const& x) {
    auto const pieces = compute_pieces(x);
    auto const a      = check_small_cancellation(x, pieces, 6, 3, std::nullopt);
    auto const b      = check_small_cancellation(x, pieces, 4, 4, std::nullopt);
    Verdict    v;
    v.criterion = "small-cancellation";
    v.holds     = a.holds() || b.holds();
    v.notes.push_back(std::string("C(6)-T(3) ") + (a.holds() ? "holds" : "fails")
                      + ", C(4)-T(4) " + (b.holds() ? "holds" : "fails")
                      + " (T(q) via link girth)");
    for (int c = 0; c < x.cell_count(); ++c) {
      v.notes.push_back("cell " + std::to_string(c) + ": cyclic piece cover "
                        + (a.cell_cover[c] == infinity
                               ? std::string("infinite")
                               : std::to_string(a.cell_cover[c]))
                        + ", longest piece "
                        + std::to_string(a.cell_max_piece[c]));
    }
    for (int u = 0; u < x.vertex_count(); ++u) {
      v.notes.push_back("vertex " + std::to_string(u) + ": link girth "
                        + (a.vertex_girth[u] == infinity
                               ? std::string("infinite")
                               : std::to_string(a.vertex_girth[u])));
    }
    if (!v.holds) {
      for (auto const& why : b.witnesses) {
        Witness wit;
        wit.detail = why;
        v.witnesses.push_back(wit);
      }
    }
    return v;
  }

}  // namespace perim

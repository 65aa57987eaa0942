#ifndef PERIM_CRITERIA_HPP_
#define PERIM_CRITERIA_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perim/perimeter.hpp"
#include "perim/pieces.hpp"
#include "perim/presentation.hpp"

namespace perim {

  enum class Conclusion { none, coherent, locally_quasiconvex, both };

  std::string to_string(Conclusion c);

  // One failing inequality, or a structural reason.  Unused fields stay -1
  // or empty.
  struct Witness {
    int         cell   = -1;
    int         start  = -1;
    int         length = -1;
    std::string path;
    Weight      lhs = 0;
    Weight      rhs = 0;
    std::string detail;
  };

  // The outcome of a sufficient condition.  A failed check establishes
  // nothing about the group.  An inapplicable check has holds false and a
  // first note starting "inapplicable:".
  struct Verdict {
    std::string              criterion;
    bool                     holds      = false;
    Conclusion               conclusion = Conclusion::none;
    std::vector<Witness>     witnesses;
    std::vector<std::string> notes;

    bool applicable() const {
      return notes.empty() || notes.front().rfind("inapplicable:", 0) != 0;
    }
  };

  Verdict inapplicable(std::string criterion, std::string reason);

  // One 2-cell and one 0-cell, exponent n > 1: every boundary subpath S
  // shorter than the period has P(S) <= n Wt(R).  Concludes coherence.
  Verdict check_one_relator_torsion(Weighting const&    w,
                                    Presentation const* names = nullptr);

  // <A | W^n> with n >= |W| - 1 is coherent; with n >= 3|W| it is also
  // locally quasiconvex.  W must be cyclically reduced.
  Verdict check_equalweights(Word const& w, int n);

  struct MinGenerator {
    int generator;    // least frequent generator occurring in W
    int occurrences;  // k
  };

  // Throws PreconditionError when W is empty.
  MinGenerator min_generator(Word const& w);

  // <A | W^n> is coherent when n >= max(2, k), k the fewest occurrences of
  // a generator of W; the certificate weighting puts 1 on that generator's
  // sides and 0 elsewhere.  n = 1 is inapplicable.
  Verdict check_min_generator(Word const& w, int n);

  // The 0/1 weighting of check_min_generator on a one-relator complex.
  Weighting min_generator_weighting(std::shared_ptr<Complex2 const> x,
                                    int                             generator);

  enum class ScVariant { c6t3, c4t4 };

  // Needs C(6)-T(3) [C(4)-T(4)].  Every boundary subpath S that is a union
  // of at most three [two] pieces must satisfy P(S) <= n Wt(R), or < when
  // strict.  The non-strict form concludes coherence, the strict form both.
  // Per failing cell the witness has the largest excess, then the smallest
  // (start, length).
  Verdict check_sc_weight(Weighting const&    w,
                          ScVariant           variant,
                          bool                strict,
                          Presentation const* names = nullptr);

  Verdict check_sc_weight(Weighting const&    w,
                          PieceTable const&   pieces,
                          ScVariant           variant,
                          bool                strict,
                          Presentation const* names = nullptr);

  // C'(1/n) for the largest such n, and every generator occurs at most n/3
  // times among the relators.  Concludes both.
  Verdict check_few_occurrences(Presentation const& p);

  // Largest n with C'(1/n), or infinity when there are no pieces.
  int largest_small_cancellation_denominator(Complex2 const&   x,
                                             PieceTable const& pieces);

  struct PowerBound {
    std::int64_t N;    // ceiling of the bound
    std::int64_t num;  // the bound is num / den before rounding
    std::int64_t den;
    Verdict      verdict;
  };

  // N = 6 |W_max| / |W_min| * sum |W_i|, rounded up.  With exponents,
  // coherent when every n_i >= N and both when every n_i > N.  Throws
  // PreconditionError for an empty list, a word that is not cyclically
  // reduced, a proper power, or a pair conjugate up to inversion.
  PowerBound power_theorem(std::vector<Word> const&                words,
                           std::optional<std::vector<int>> const& exponents =
                               std::nullopt);

  struct MagnusWeighting {
    std::optional<Weighting> weighting;
    Verdict                  verdict;
  };

  // Weight 0 on sides over the listed generators and 1 elsewhere.  Fails
  // when a relator uses only listed generators, the free factor case.
  MagnusWeighting magnus_weighting(std::shared_ptr<Complex2 const> x,
                                   std::set<int> const&            generators);

  // Small cancellation report as a verdict: holds when C(6)-T(3) or
  // C(4)-T(4) holds.  Draws no conclusion about the group.
  Verdict small_cancellation_verdict(Complex2 const& x);

}  // namespace perim

#endif  // PERIM_CRITERIA_HPP_

#ifndef PERIM_REDUCTION_HPP_
#define PERIM_REDUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "perim/combmap.hpp"
#include "perim/perimeter.hpp"
#include "perim/presentation.hpp"

namespace perim {

  // strict: attach only when the perimeter drops.  weak: also attach when
  // it stays the same; such runs need not terminate.
  enum class Mode { strict, weak };

  // A boundary subpath Q = (start, length) of a cell whose packet, glued
  // along Q, does not raise the perimeter: P(S) < n Wt(R), or <= when not
  // strict, S the complement of Q.
  struct Candidate {
    int  cell;
    int  start;
    int  length;
    bool strict;
    friend bool operator==(Candidate const&, Candidate const&) = default;
  };

  // All candidates qualifying under mode, by (cell, start, length).
  std::vector<Candidate> enumerate_candidates(Weighting const& w, Mode mode);

  // The candidates of a weighting indexed for constant-time lookup.
  class CandidateTable {
   public:
    CandidateTable(Weighting const& w, Mode mode);
    // 0: does not qualify, 1: qualifies with equality, 2: strictly.
    int grade(int cell, int start, int length) const;
    Mode mode() const noexcept {
      return _mode;
    }

   private:
    Mode                          _mode;
    std::vector<std::vector<char>> _grade;  // [cell][start * (L+1) + length]
    std::vector<int>               _length;
  };

  // A lift of a maximal candidate Q to the domain that no lift of the
  // packet restricts to.
  struct AttachmentSite {
    Candidate                 candidate;
    int                       start_vertex;
    std::vector<DirectedEdge> lift;
    bool                      complete;
  };

  // Scans cells, then longer Q first, then start vertices, then start
  // positions.  In weak mode sites that keep P fixed come before strict
  // ones.  m must be a packed 1-immersion.
  std::optional<AttachmentSite> find_attachment(CombMap const&        m,
                                                CandidateTable const& table);

  std::optional<AttachmentSite> find_attachment(CombMap const&   m,
                                                Weighting const& w,
                                                Mode             mode);

  struct AttachResult {
    CombMap map;
    Weight  perimeter_change;  // exact
  };

  // Glues the packet of the site's cell along Q.  A complete site first
  // identifies the endpoints of Q.  Throws PreconditionError when the site
  // does not match m.
  AttachResult attach_packet(CombMap const&        m,
                             Weighting const&      w,
                             AttachmentSite const& site);

  enum class StepKind { fold, attach_complete, attach_incomplete, repair };

  std::string to_string(StepKind k);

  struct TraceStep {
    StepKind kind;
    Weight   perimeter;  // after the step
    int      edges;      // after the step
    int      euler;      // Euler characteristic after the step
    Weight   delta;      // perimeter change of the step
    int      cell = -1;  // attached cell, for attachments
  };

  struct ReductionTrace {
    Weight                 initial_perimeter = 0;
    int                    initial_edges     = 0;
    int                    initial_euler     = 0;
    std::vector<TraceStep> steps;

    // One `step=<k> kind=<kind> P=<int> edges=<int>` line per step.
    std::string to_text() const;
  };

  struct ReduceOptions {
    Mode               mode = Mode::strict;
    std::optional<int> step_limit;  // mandatory in weak mode
    // Recompute P from the definition after every step and throw
    // std::logic_error when the tracked value disagrees.
    bool verify = false;
  };

  struct ReduceResult {
    CombMap        map;
    ReductionTrace trace;
    bool           exhausted = false;  // stopped by the step limit
  };

  // Folds, repairs packing and attaches packets until none applies.
  ReduceResult reduce(CombMap const&       m,
                      Weighting const&     w,
                      ReduceOptions const& options = {});

  struct ExtractedPresentation {
    Presentation presentation;  // generators x1, x2, ...
    // The codomain path each generator stands for, as a word over the
    // codomain's edges, freely reduced.
    std::vector<Word> generator_images;
  };

  // Contracts a breadth-first spanning tree grown from the basepoint in
  // edge order.  Non-tree edges become generators and cell boundaries
  // become relators, freely and cyclically reduced; empty ones are dropped.
  // Throws PreconditionError when the domain is disconnected.
  ExtractedPresentation extract_presentation(CombMap const& m);

  // Sum of the perimeters of the words, read as paths in x.
  Weight relator_bound(Weighting const& w, std::vector<Word> const& words);

  // chi(domain) + P(m).
  Weight euler_perimeter(CombMap const& m, Weighting const& w);

}  // namespace perim

#endif  // PERIM_REDUCTION_HPP_

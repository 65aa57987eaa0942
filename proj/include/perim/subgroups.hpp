#ifndef PERIM_SUBGROUPS_HPP_
#define PERIM_SUBGROUPS_HPP_

#include <optional>
#include <set>
#include <vector>

#include "perim/criteria.hpp"
#include "perim/reduction.hpp"

namespace perim {

  enum class Purpose { presentation, membership, intersection };

  // The first criterion that certifies answers for (p, w): a free group,
  // the strict small cancellation weight checks, the one-relator torsion
  // check, the equal-weights and min-generator bounds when w is their
  // weighting, then the non-strict small cancellation checks.  Intersection
  // accepts only a free group, a strict small cancellation check, or the
  // locally quasiconvex equal-weights bound.  Returns nothing when none
  // holds.  w must live on the standard complex of p.
  std::optional<Verdict> find_certificate(Presentation const& p,
                                          Weighting const&    w,
                                          Purpose             purpose);

  // Thrown when no certificate holds and force was not given.
  class NoCertificate : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  struct SubgroupOptions {
    bool               force = false;
    std::optional<int> step_limit;
    bool               verify = false;
  };

  struct SubgroupResult {
    ExtractedPresentation  presentation;
    std::vector<ReductionTrace> traces;  // one per reduction performed
    std::optional<Verdict> certificate;
    bool                   heuristic = false;  // computed without one
    bool                   exhausted = false;  // a step limit was hit
    CombMap                complex;            // the final map
  };

  // Reduces the bouquet of gens and reads off a presentation.
  SubgroupResult subgroup_presentation(Presentation const&      p,
                                       Weighting const&         w,
                                       std::vector<Word> const& gens,
                                       SubgroupOptions const&   options = {});

  struct MemberResult {
    bool                   member = false;
    ReductionTrace         trace;
    std::optional<Verdict> certificate;
    bool                   heuristic = false;
    bool                   exhausted = false;
  };

  // Reduces the bouquet of gens with u attached as an arc from the
  // basepoint; u lies in the subgroup when the arc closes up.
  MemberResult member(Presentation const&      p,
                      Weighting const&         w,
                      std::vector<Word> const& gens,
                      Word const&              u,
                      SubgroupOptions const&   options = {});

  // At every vertex glues one copy of each 2-cell of the codomain per
  // boundary position that starts at the vertex's image, attached at that
  // vertex only.  Copies that would fold onto an existing cell are skipped.
  CombMap augment_vertices(CombMap const& m);

  // Reduce, augment, reduce again, take the based component of the fiber
  // product and read off a presentation.
  SubgroupResult intersect(Presentation const&      p,
                           Weighting const&         w,
                           std::vector<Word> const& gens_h,
                           std::vector<Word> const& gens_k,
                           SubgroupOptions const&   options = {});

  // H intersected with the subgroup generated by the listed generators,
  // using the weighting that vanishes on them.  Throws PreconditionError
  // when that weighting is invalid (a relator over those generators only).
  SubgroupResult magnus_intersect(Presentation const&      p,
                                  std::set<int> const&     generators,
                                  std::vector<Word> const& gens_h,
                                  SubgroupOptions const&   options = {});

}  // namespace perim

#endif  // PERIM_SUBGROUPS_HPP_

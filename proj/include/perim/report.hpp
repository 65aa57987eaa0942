#ifndef PERIM_REPORT_HPP_
#define PERIM_REPORT_HPP_

#include <json.hpp>

#include "perim/criteria.hpp"
#include "perim/input.hpp"
#include "perim/subgroups.hpp"

namespace perim {

  // Objects use sorted keys, so dump(2) output is stable.
  using Json = nlohmann::json;

  // {criterion, holds, conclusion, witnesses[], notes[]}.
  Json to_json(Verdict const& v);

  // Perimeters, weights, periods, pieces and small cancellation of the
  // standard complex of f under its weighting.
  Json info_report(InputFile const& f);

  Json to_json(Presentation const& p);

  Json to_json(SubgroupResult const& r, Presentation const& ambient);

  Json to_json(MemberResult const& r);

}  // namespace perim

#endif  // PERIM_REPORT_HPP_

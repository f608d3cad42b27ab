#ifndef SGIDEALS_REPORT_HPP_
#define SGIDEALS_REPORT_HPP_

#include <json.hpp>

#include "sgideals/classify.hpp"
#include "sgideals/green.hpp"
#include "sgideals/idealprops.hpp"
#include "sgideals/semigroup.hpp"

// JSON views shared by the harness and the command line tool. Sets are
// rendered as arrays of element tokens, tables as nested index arrays.

namespace sgideals {

nlohmann::ordered_json table_to_json(Semigroup const& s);
nlohmann::ordered_json set_to_json(Semigroup const& s, ElemSet const& set);
nlohmann::ordered_json semigroup_to_json(Semigroup const& s);
nlohmann::ordered_json profile_to_json(Semigroup const& s,
                                       IdealProfile const& p);
nlohmann::ordered_json classification_to_json(Semigroup const& s,
                                              ClassificationReport const& r);
nlohmann::ordered_json partition_to_json(Semigroup const& s,
                                         RelationPartition const& p);

}  // namespace sgideals

#endif  // SGIDEALS_REPORT_HPP_

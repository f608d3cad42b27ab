#ifndef SGIDEALS_GREEN_HPP_
#define SGIDEALS_GREEN_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "sgideals/semigroup.hpp"

namespace sgideals {

/// Green's relations L, R, J, H plus the analogous relation I induced by
/// principal interior ideals: a I b iff IN(a) == IN(b). H is the common
/// refinement of L and R.
enum class GreenRelation { L, R, J, H, I };

std::string_view to_string(GreenRelation r);
std::optional<GreenRelation> green_relation_from_string(std::string_view name);

struct RelationPartition {
  GreenRelation relation;
  int order = 0;  // carrier size of the underlying semigroup
  std::vector<ElemSet> classes;  // ordered by least contained element
};

RelationPartition green_partition(Semigroup const& s, GreenRelation r);

/// Every class of p lies inside some class of q. Throws on width mismatch.
bool refines(RelationPartition const& p, RelationPartition const& q);

/// Whether the interior ideal coincides with a class of the I-partition.
bool minimal_ideal_is_class(Semigroup const& s, ElemSet const& ideal);

}  // namespace sgideals

#endif  // SGIDEALS_GREEN_HPP_

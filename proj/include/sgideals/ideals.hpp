#ifndef SGIDEALS_IDEALS_HPP_
#define SGIDEALS_IDEALS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "sgideals/semigroup.hpp"

namespace sgideals {

/// The six ideal notions handled by the library. One-sided and two-sided
/// ideals are defined by containment of S*A resp. A*S in A; the other three
/// additionally require A to be a subsemigroup:
///
///   Quasi:    (A*S) & (S*A) <= A
///   Bi:       A*S*A <= A
///   Interior: S*A*S <= A
enum class IdealKind { Left, Right, TwoSided, Quasi, Bi, Interior };

std::string_view to_string(IdealKind k);
std::optional<IdealKind> ideal_kind_from_string(std::string_view name);

/// The four principal constructions, all of which contain a:
///
///   Left:     Sa + {a}
///   Right:    aS + {a}
///   TwoSided: {a} + Sa + aS + SaS
///   Interior: {a} + {a^2} + SaS
enum class PrincipalKind { Left, Right, TwoSided, Interior };

/// Whether the nonempty subset A satisfies the defining condition of kind k.
bool is_ideal_of_kind(Semigroup const& s, ElemSet const& a, IdealKind k);

ElemSet principal(Semigroup const& s, Elem a, PrincipalKind k);

/// All nonempty subsets satisfying kind k, in ascending bit-vector order.
/// The full carrier always qualifies, so the result is never empty.
std::vector<ElemSet> enumerate_ideals(Semigroup const& s, IdealKind k);

/// The semigroup induced on the subsemigroup T, with elements reindexed in
/// ascending order of their index in s and names carried over.
Semigroup induced_subsemigroup(Semigroup const& s, ElemSet const& t);

/// Whether ideal & t is an interior ideal of the subsemigroup induced on t.
/// Preconditions are reported separately: `ideal` must be an interior ideal
/// of s, `t` must be a subsemigroup, and the intersection must be nonempty.
bool relative_interior_check(Semigroup const& s, ElemSet const& ideal,
                             ElemSet const& t);

}  // namespace sgideals

#endif  // SGIDEALS_IDEALS_HPP_

#ifndef SGIDEALS_CLASSIFY_HPP_
#define SGIDEALS_CLASSIFY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sgideals/semigroup.hpp"

namespace sgideals {

// Semigroup-level classifications. Witness-returning variants yield the
// least witness found by an ascending scan, so results are deterministic.

/// For each a the least x with a = a*x*a; nullopt when some a has none.
std::optional<std::vector<Elem>> regularity_witnesses(Semigroup const& s);

/// For each a the least pair (x, y) with a = x*a^2*y, scanned in row-major
/// order; nullopt when some a has none.
std::optional<std::vector<std::pair<Elem, Elem>>> intra_regularity_witnesses(
    Semigroup const& s);

bool is_regular(Semigroup const& s);
bool is_intra_regular(Semigroup const& s);

/// Every left ideal is a right ideal and vice versa. Decided by comparing
/// the full families of left and right ideals.
bool is_duo(Semigroup const& s);

/// Every interior ideal equals S, or {z} when an absorbing element z exists.
bool is_interior_simple(Semigroup const& s);

/// The interior ideals form a chain under inclusion.
bool interior_chain(Semigroup const& s);

/// An absorbing element z exists and S*a*S = {z} for some a != z. On such
/// semigroups statements quantified over nonzero elements can collapse.
bool is_zero_degenerate(Semigroup const& s);

struct ClassificationReport {
  bool regular = false;
  std::vector<Elem> regular_witnesses;  // filled only when regular
  bool intra_regular = false;
  std::vector<std::pair<Elem, Elem>> intra_regular_witnesses;
  bool duo = false;
  bool interior_simple = false;
  bool interior_chain = false;
  bool zero_degenerate = false;
};

ClassificationReport classify(Semigroup const& s);

}  // namespace sgideals

#endif  // SGIDEALS_CLASSIFY_HPP_

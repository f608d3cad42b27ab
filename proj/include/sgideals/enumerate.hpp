#ifndef SGIDEALS_ENUMERATE_HPP_
#define SGIDEALS_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sgideals/semigroup.hpp"

namespace sgideals {

inline constexpr int kMaxEnumerationOrder = 6;

struct EnumerationConfig {
  enum class Dedup { Labeled, UpToIso };

  int order = 1;  // supported range [1, kMaxEnumerationOrder]
  Dedup dedup = Dedup::Labeled;
  std::optional<std::uint64_t> limit;  // cap on emitted semigroups
  std::function<bool(Semigroup const&)> filter;  // optional keep-predicate
};

/// Receives each emitted semigroup; return false to stop the enumeration.
using SemigroupSink = std::function<bool(Semigroup)>;

/// Streams every associative Cayley table of the configured order in
/// lexicographic order of the flattened table. With Dedup::UpToIso only
/// tables that are their own canonical form are emitted, yielding exactly
/// one representative per isomorphism class. Anti-isomorphic semigroups are
/// distinct unless they happen to be isomorphic.
void enumerate_semigroups(EnumerationConfig const& config,
                          SemigroupSink const& sink);

std::vector<Semigroup> all_semigroups(EnumerationConfig const& config);
std::vector<Semigroup> all_semigroups(int order);  // labeled, unfiltered

/// The image of s under the relabeling perm (old index -> new index).
Semigroup relabel(Semigroup const& s, std::span<const Elem> perm);

/// The lexicographically least table among all relabelings of s. Names
/// follow their elements; two semigroups are isomorphic iff their canonical
/// forms have equal tables.
Semigroup canonical_form(Semigroup const& s);

bool is_canonical(Semigroup const& s);

/// Single-letter element names "a", "b", ... used for generated semigroups.
std::vector<std::string> default_names(int order);

}  // namespace sgideals

#endif  // SGIDEALS_ENUMERATE_HPP_

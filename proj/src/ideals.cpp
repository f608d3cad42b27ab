#include "sgideals/ideals.hpp"

#include <stdexcept>

namespace sgideals {

std::string_view to_string(IdealKind k) {
  switch (k) {
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two-sided";
    case IdealKind::Quasi: return "quasi";
    case IdealKind::Bi: return "bi";
    case IdealKind::Interior: return "interior";
  }
  throw std::logic_error("unreachable");
}

std::optional<IdealKind> ideal_kind_from_string(std::string_view name) {
  for (IdealKind k : {IdealKind::Left, IdealKind::Right, IdealKind::TwoSided,
                      IdealKind::Quasi, IdealKind::Bi, IdealKind::Interior}) {
    if (name == to_string(k)) {
      return k;
    }
  }
  return std::nullopt;
}

bool is_ideal_of_kind(Semigroup const& s, ElemSet const& a, IdealKind k) {
  if (a.width() != s.order()) {
    throw std::invalid_argument("operand width does not match the semigroup");
  }
  if (a.is_empty()) {
    throw std::invalid_argument("ideals are nonempty by definition");
  }
  ElemSet const full = s.full_set();
  switch (k) {
    case IdealKind::Left:
      return subset_product(s, full, a).subset_of(a);
    case IdealKind::Right:
      return subset_product(s, a, full).subset_of(a);
    case IdealKind::TwoSided:
      return subset_product(s, full, a).subset_of(a) &&
             subset_product(s, a, full).subset_of(a);
    case IdealKind::Quasi:
      return is_subsemigroup(s, a) &&
             (subset_product(s, a, full) & subset_product(s, full, a))
                 .subset_of(a);
    case IdealKind::Bi:
      return is_subsemigroup(s, a) &&
             subset_product(s, subset_product(s, a, full), a).subset_of(a);
    case IdealKind::Interior:
      return is_subsemigroup(s, a) && sandwich(s, a).subset_of(a);
  }
  throw std::logic_error("unreachable");
}

ElemSet principal(Semigroup const& s, Elem a, PrincipalKind k) {
  if (a >= s.order()) {
    throw std::invalid_argument("element index out of range");
  }
  ElemSet const full = s.full_set();
  ElemSet const one = s.singleton(a);
  ElemSet const left = subset_product(s, full, one);    // Sa
  ElemSet const right = subset_product(s, one, full);   // aS
  ElemSet const both = subset_product(s, left, full);   // SaS
  switch (k) {
    case PrincipalKind::Left:
      return left | one;
    case PrincipalKind::Right:
      return right | one;
    case PrincipalKind::TwoSided:
      return one | left | right | both;
    case PrincipalKind::Interior:
      return one | s.singleton(s.product(a, a)) | both;
  }
  throw std::logic_error("unreachable");
}

std::vector<ElemSet> enumerate_ideals(Semigroup const& s, IdealKind k) {
  int const n = s.order();
  if (n > 24) {
    // 2^n subset scan; anything this size is outside the library's scope.
    throw std::invalid_argument("ideal enumeration supports order <= 24");
  }
  std::vector<ElemSet> result;
  std::uint64_t const limit = std::uint64_t(1) << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    ElemSet const candidate(n, bits);
    if (is_ideal_of_kind(s, candidate, k)) {
      result.push_back(candidate);
    }
  }
  return result;
}

Semigroup induced_subsemigroup(Semigroup const& s, ElemSet const& t) {
  if (!is_subsemigroup(s, t)) {
    throw std::invalid_argument("subset is not a subsemigroup");
  }
  auto const members = t.elements();
  std::vector<Elem> to_new(s.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    to_new[members[i]] = static_cast<Elem>(i);
  }
  std::vector<std::string> names;
  names.reserve(members.size());
  for (Elem e : members) {
    names.push_back(s.name_of(e));
  }
  std::vector<Elem> table;
  table.reserve(members.size() * members.size());
  for (Elem x : members) {
    for (Elem y : members) {
      table.push_back(to_new[s.product(x, y)]);
    }
  }
  return Semigroup::from_table(std::move(names), std::move(table));
}

bool relative_interior_check(Semigroup const& s, ElemSet const& ideal,
                             ElemSet const& t) {
  if (!is_ideal_of_kind(s, ideal, IdealKind::Interior)) {
    throw std::invalid_argument(
        "relative check requires an interior ideal of the ambient semigroup");
  }
  if (t.is_empty() || !is_subsemigroup(s, t)) {
    throw std::invalid_argument("relative check requires a subsemigroup");
  }
  ElemSet const meet = ideal & t;
  if (meet.is_empty()) {
    throw std::invalid_argument(
        "ideal and subsemigroup intersect emptily; nothing to check");
  }
  Semigroup const sub = induced_subsemigroup(s, t);
  auto const members = t.elements();
  std::vector<Elem> to_new(s.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    to_new[members[i]] = static_cast<Elem>(i);
  }
  ElemSet inner = sub.empty_set();
  for (Elem e : meet.elements()) {
    inner.insert(to_new[e]);
  }
  return is_ideal_of_kind(sub, inner, IdealKind::Interior);
}

}  // namespace sgideals

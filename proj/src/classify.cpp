#include "sgideals/classify.hpp"

#include <algorithm>

#include "sgideals/ideals.hpp"

namespace sgideals {

std::optional<std::vector<Elem>> regularity_witnesses(Semigroup const& s) {
  int const n = s.order();
  std::vector<Elem> witnesses(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x) {
      if (s.product(s.product(a, x), a) == a) {
        witnesses[a] = x;
        found = true;
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return witnesses;
}

std::optional<std::vector<std::pair<Elem, Elem>>> intra_regularity_witnesses(
    Semigroup const& s) {
  int const n = s.order();
  std::vector<std::pair<Elem, Elem>> witnesses(n);
  for (Elem a = 0; a < n; ++a) {
    Elem const sq = s.product(a, a);
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x) {
      for (Elem y = 0; y < n && !found; ++y) {
        if (s.product(s.product(x, sq), y) == a) {
          witnesses[a] = {x, y};
          found = true;
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return witnesses;
}

bool is_regular(Semigroup const& s) {
  return regularity_witnesses(s).has_value();
}

bool is_intra_regular(Semigroup const& s) {
  return intra_regularity_witnesses(s).has_value();
}

bool is_duo(Semigroup const& s) {
  return enumerate_ideals(s, IdealKind::Left) ==
         enumerate_ideals(s, IdealKind::Right);
}

bool is_interior_simple(Semigroup const& s) {
  ElemSet const full = s.full_set();
  std::optional<Elem> const z = s.zero();
  for (ElemSet const& ideal : enumerate_ideals(s, IdealKind::Interior)) {
    if (ideal == full) {
      continue;
    }
    if (z.has_value() && ideal == s.singleton(*z)) {
      continue;
    }
    return false;
  }
  return true;
}

bool interior_chain(Semigroup const& s) {
  auto const family = enumerate_ideals(s, IdealKind::Interior);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family[i].subset_of(family[j]) && !family[j].subset_of(family[i])) {
        return false;
      }
    }
  }
  return true;
}

bool is_zero_degenerate(Semigroup const& s) {
  std::optional<Elem> const z = s.zero();
  if (!z.has_value()) {
    return false;
  }
  ElemSet const zero_set = s.singleton(*z);
  for (Elem a = 0; a < s.order(); ++a) {
    if (a != *z && sandwich(s, s.singleton(a)).subset_of(zero_set)) {
      return true;
    }
  }
  return false;
}

ClassificationReport classify(Semigroup const& s) {
  ClassificationReport report;
  if (auto w = regularity_witnesses(s)) {
    report.regular = true;
    report.regular_witnesses = std::move(*w);
  }
  if (auto w = intra_regularity_witnesses(s)) {
    report.intra_regular = true;
    report.intra_regular_witnesses = std::move(*w);
  }
  report.duo = is_duo(s);
  report.interior_simple = is_interior_simple(s);
  report.interior_chain = interior_chain(s);
  report.zero_degenerate = is_zero_degenerate(s);
  return report;
}

}  // namespace sgideals

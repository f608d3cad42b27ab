#include "sgideals/idealprops.hpp"

#include <stdexcept>

#include "sgideals/ideals.hpp"

namespace sgideals {

namespace {

void require_interior(Semigroup const& s, ElemSet const& ideal) {
  if (!is_ideal_of_kind(s, ideal, IdealKind::Interior)) {
    throw std::invalid_argument("subset is not an interior ideal");
  }
}

bool ideal_irreducible(Semigroup const& s, ElemSet const& ideal,
                       std::span<const ElemSet> family) {
  for (ElemSet const& a : family) {
    for (ElemSet const& b : family) {
      if ((a & b) == ideal && a != ideal && b != ideal) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

IdealProfile profile(Semigroup const& s, ElemSet const& ideal,
                     std::span<const ElemSet> family) {
  require_interior(s, ideal);
  IdealProfile p;
  p.elements = ideal;
  p.proper = ideal != s.full_set();
  p.idempotent = subset_product(s, ideal, ideal) == ideal;

  p.completely_semiprime = true;
  for (Elem a = 0; a < s.order(); ++a) {
    if (ideal.contains(s.product(a, a)) && !ideal.contains(a)) {
      p.completely_semiprime = false;
      break;
    }
  }

  p.semiprime = true;
  for (ElemSet const& a : family) {
    if (subset_product(s, a, a).subset_of(ideal) && !a.subset_of(ideal)) {
      p.semiprime = false;
      break;
    }
  }

  p.prime = true;
  p.strongly_prime = true;
  p.irreducible = true;
  p.strongly_irreducible = true;
  for (ElemSet const& a : family) {
    for (ElemSet const& b : family) {
      ElemSet const ab = subset_product(s, a, b);
      bool const either_in = a.subset_of(ideal) || b.subset_of(ideal);
      if (ab.subset_of(ideal) && !either_in) {
        p.prime = false;
      }
      if ((ab & subset_product(s, b, a)).subset_of(ideal) && !either_in) {
        p.strongly_prime = false;
      }
      ElemSet const meet = a & b;
      if (meet == ideal && a != ideal && b != ideal) {
        p.irreducible = false;
      }
      if (meet.subset_of(ideal) && !either_in) {
        p.strongly_irreducible = false;
      }
    }
  }

  p.minimal = true;
  for (ElemSet const& a : family) {
    if (a != ideal && a.subset_of(ideal)) {
      p.minimal = false;
      break;
    }
  }
  return p;
}

IdealProfile profile(Semigroup const& s, ElemSet const& ideal) {
  return profile(s, ideal, enumerate_ideals(s, IdealKind::Interior));
}

ElemSet irreducible_witness(Semigroup const& s, ElemSet const& ideal,
                            Elem excluded) {
  require_interior(s, ideal);
  if (excluded >= s.order()) {
    throw std::invalid_argument("element index out of range");
  }
  if (ideal.contains(excluded)) {
    throw std::invalid_argument(
        "excluded element belongs to the ideal; no separating ideal exists");
  }
  auto const family = enumerate_ideals(s, IdealKind::Interior);
  std::vector<ElemSet> avoiding;
  for (ElemSet const& j : family) {
    if (ideal.subset_of(j) && !j.contains(excluded)) {
      avoiding.push_back(j);
    }
  }
  // `ideal` itself belongs to the avoiding family, so it is nonempty.
  ElemSet best = s.empty_set();
  bool found = false;
  for (ElemSet const& j : avoiding) {
    bool maximal = true;
    for (ElemSet const& k : avoiding) {
      if (j != k && j.subset_of(k)) {
        maximal = false;
        break;
      }
    }
    if (maximal && !found) {
      best = j;
      found = true;  // ascending scan: first maximal has least bit-vector
    }
  }
  if (!found || !ideal_irreducible(s, best, family)) {
    throw std::logic_error(
        "maximal avoiding ideal failed the irreducibility re-check");
  }
  return best;
}

IrreducibleDecomposition decompose_into_irreducibles(Semigroup const& s,
                                                     ElemSet const& ideal) {
  require_interior(s, ideal);
  if (ideal == s.full_set()) {
    throw std::invalid_argument("decomposition requires a proper ideal");
  }
  auto const family = enumerate_ideals(s, IdealKind::Interior);
  IrreducibleDecomposition d;
  d.intersection = s.full_set();
  for (ElemSet const& j : family) {
    if (j == s.full_set() || !ideal.subset_of(j)) {
      continue;
    }
    if (ideal_irreducible(s, j, family)) {
      d.components.push_back(j);
      d.intersection = d.intersection & j;
    }
  }
  return d;
}

}  // namespace sgideals

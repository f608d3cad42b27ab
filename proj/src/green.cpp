#include "sgideals/green.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgideals/ideals.hpp"

namespace sgideals {

std::string_view to_string(GreenRelation r) {
  switch (r) {
    case GreenRelation::L: return "L";
    case GreenRelation::R: return "R";
    case GreenRelation::J: return "J";
    case GreenRelation::H: return "H";
    case GreenRelation::I: return "I";
  }
  throw std::logic_error("unreachable");
}

std::optional<GreenRelation> green_relation_from_string(
    std::string_view name) {
  for (GreenRelation r : {GreenRelation::L, GreenRelation::R, GreenRelation::J,
                          GreenRelation::H, GreenRelation::I}) {
    if (name == to_string(r)) {
      return r;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<ElemSet> classes_by_key(Semigroup const& s,
                                    std::vector<ElemSet> const& keys) {
  int const n = s.order();
  std::vector<ElemSet> classes;
  std::vector<bool> seen(n, false);
  for (Elem a = 0; a < n; ++a) {
    if (seen[a]) {
      continue;
    }
    ElemSet cls = s.empty_set();
    for (Elem b = a; b < n; ++b) {
      if (!seen[b] && keys[b] == keys[a]) {
        cls.insert(b);
        seen[b] = true;
      }
    }
    classes.push_back(cls);  // outer loop ascends, so least elements ascend
  }
  return classes;
}

}  // namespace

RelationPartition green_partition(Semigroup const& s, GreenRelation r) {
  int const n = s.order();
  RelationPartition part;
  part.relation = r;
  part.order = n;
  if (r == GreenRelation::H) {
    auto const left = green_partition(s, GreenRelation::L);
    auto const right = green_partition(s, GreenRelation::R);
    for (ElemSet const& lc : left.classes) {
      for (ElemSet const& rc : right.classes) {
        ElemSet const meet = lc & rc;
        if (!meet.is_empty()) {
          part.classes.push_back(meet);
        }
      }
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](ElemSet const& a, ElemSet const& b) {
                return a.elements().front() < b.elements().front();
              });
    return part;
  }
  PrincipalKind kind;
  switch (r) {
    case GreenRelation::L: kind = PrincipalKind::Left; break;
    case GreenRelation::R: kind = PrincipalKind::Right; break;
    case GreenRelation::J: kind = PrincipalKind::TwoSided; break;
    case GreenRelation::I: kind = PrincipalKind::Interior; break;
    default: throw std::logic_error("unreachable");
  }
  std::vector<ElemSet> keys;
  keys.reserve(n);
  for (Elem a = 0; a < n; ++a) {
    keys.push_back(principal(s, a, kind));
  }
  part.classes = classes_by_key(s, keys);
  return part;
}

bool refines(RelationPartition const& p, RelationPartition const& q) {
  if (p.order != q.order) {
    throw std::invalid_argument("partitions live on different carriers");
  }
  for (ElemSet const& a : p.classes) {
    bool inside = false;
    for (ElemSet const& b : q.classes) {
      if (a.subset_of(b)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      return false;
    }
  }
  return true;
}

bool minimal_ideal_is_class(Semigroup const& s, ElemSet const& ideal) {
  if (!is_ideal_of_kind(s, ideal, IdealKind::Interior)) {
    throw std::invalid_argument("subset is not an interior ideal");
  }
  for (ElemSet const& cls :
       green_partition(s, GreenRelation::I).classes) {
    if (cls == ideal) {
      return true;
    }
  }
  return false;
}

}  // namespace sgideals

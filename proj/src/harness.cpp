#include "sgideals/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sgideals/classify.hpp"
#include "sgideals/enumerate.hpp"
#include "sgideals/green.hpp"
#include "sgideals/idealprops.hpp"
#include "sgideals/ideals.hpp"
#include "sgideals/report.hpp"

namespace sgideals {

using nlohmann::ordered_json;

namespace {

struct TheoremInfo {
  TheoremId id;
  char const* name;
  char const* summary;
};

constexpr TheoremInfo kTheoremTable[] = {
    {TheoremId::IdealIsInterior, "T-IDEAL-IS-INTERIOR",
     "every two-sided ideal is an interior ideal"},
    {TheoremId::Intersection, "T-INTERSECTION",
     "a nonempty intersection of two interior ideals is an interior ideal"},
    {TheoremId::Relative, "T-RELATIVE",
     "an interior ideal meets every subsemigroup in a relative interior "
     "ideal"},
    {TheoremId::RegSis, "T-REG-SIS",
     "in a regular semigroup, SIS = I for every interior ideal I"},
    {TheoremId::RegEquivQjq, "T-REG-EQUIV-QJQ",
     "regularity is equivalent to the QJQ-style intersection identities"},
    {TheoremId::RegEquivBil, "T-REG-EQUIV-BIL",
     "regularity is equivalent to the one-sided triple-product inclusions"},
    {TheoremId::RegCoincide, "T-REG-COINCIDE",
     "in a regular semigroup, interior ideals and two-sided ideals "
     "coincide"},
    {TheoremId::IntraCoincide, "T-INTRA-COINCIDE",
     "in an intra-regular semigroup, interior ideals and two-sided ideals "
     "coincide"},
    {TheoremId::IntraSemiprime, "T-INTRA-SEMIPRIME",
     "in an intra-regular semigroup, every proper interior ideal is "
     "semiprime"},
    {TheoremId::IntraCompsemiIff, "T-INTRA-COMPSEMI-IFF",
     "intra-regularity is equivalent to every interior ideal being "
     "completely semiprime"},
    {TheoremId::DuoBi, "T-DUO-BI",
     "in a regular duo semigroup, every bi-ideal is an interior ideal"},
    {TheoremId::DuoQuasi, "T-DUO-QUASI",
     "in a regular duo semigroup, every quasi-ideal is an interior ideal"},
    {TheoremId::SimpleIff, "T-SIMPLE-IFF",
     "interior simplicity is equivalent to SaS = S, and to IN(a) = S, for "
     "every nonzero a"},
    {TheoremId::SirrSp, "T-SIRR-SP",
     "a strongly irreducible semiprime interior ideal is strongly prime"},
    {TheoremId::ZornWitness, "T-ZORN-WITNESS",
     "for a in S \\ I there is an irreducible interior ideal containing I "
     "and avoiding a"},
    {TheoremId::IdempotentEquiv, "T-IDEMPOTENT-EQUIV",
     "for regular semigroups, the idempotency conditions on interior "
     "ideals agree"},
    {TheoremId::ChainEquiv, "T-CHAIN-EQUIV",
     "the interior ideals form a chain iff each is strongly irreducible "
     "iff each is irreducible"},
    {TheoremId::MinIff, "T-MIN-IFF",
     "an interior ideal I is minimal iff SaS = I for all a in I iff "
     "IN(a) = I for all a in I"},
    {TheoremId::MinDisjoint, "T-MIN-DISJOINT",
     "every proper interior ideal is minimal iff proper interior ideals "
     "are pairwise disjoint"},
    {TheoremId::MinInab, "T-MIN-INAB",
     "an interior ideal I is minimal iff IN(a) = IN(b) for all a, b in I"},
    {TheoremId::JSubI, "T-J-SUB-I",
     "the relation J refines the relation I"},
    {TheoremId::RegJi, "T-REG-JI",
     "in a regular or intra-regular semigroup the relations J and I "
     "coincide"},
    {TheoremId::MinIclass, "T-MIN-ICLASS",
     "an interior ideal is minimal iff it is an I-class"},
    {TheoremId::MinJclass, "T-MIN-JCLASS",
     "in a regular semigroup an interior ideal is minimal iff it is a "
     "J-class"},
    {TheoremId::ProbeInLeast, "P-IN-LEAST",
     "IN(a) is the least interior ideal containing a"},
    {TheoremId::ProbeProdReg, "P-PROD-REG",
     "in a regular semigroup the product of two interior ideals is an "
     "interior ideal"},
};

TheoremInfo const& info_for(TheoremId t) {
  for (TheoremInfo const& info : kTheoremTable) {
    if (info.id == t) return info;
  }
  throw std::invalid_argument("unknown theorem id");
}

ElemSet set_from_json(Semigroup const& s, ordered_json const& j) {
  ElemSet out = s.empty_set();
  for (auto const& tok : j) {
    out.insert(s.element_of(tok.get<std::string>()));
  }
  return out;
}

ordered_json pair_json(Semigroup const& s, char const* ka, ElemSet const& a,
                       char const* kb, ElemSet const& b) {
  ordered_json out;
  out[ka] = set_to_json(s, a);
  out[kb] = set_to_json(s, b);
  return out;
}

bool minimal_in_family(std::vector<ElemSet> const& family, ElemSet const& ideal) {
  for (ElemSet const& other : family) {
    if (!(other == ideal) && other.subset_of(ideal)) return false;
  }
  return true;
}

// Outcome of checking one side of an equivalence: ok, or a first violation.
struct Item {
  bool ok = true;
  ordered_json violation;
};

Item item_ok() { return Item{}; }

Item item_fail(ordered_json violation) {
  return Item{false, std::move(violation)};
}

// QJQ-style identity: for all A of kind `outer` and B of kind `inner`,
// A n B == product(A, B, A).
Item intersection_identity(Semigroup const& s, IdealKind outer,
                           IdealKind inner) {
  for (ElemSet const& a : enumerate_ideals(s, outer)) {
    for (ElemSet const& b : enumerate_ideals(s, inner)) {
      ElemSet lhs = a & b;
      ElemSet rhs = subset_product(s, subset_product(s, a, b), a);
      if (!(lhs == rhs)) {
        ordered_json v;
        v["outer"] = set_to_json(s, a);
        v["inner"] = set_to_json(s, b);
        v["intersection"] = set_to_json(s, lhs);
        v["product"] = set_to_json(s, rhs);
        return item_fail(std::move(v));
      }
    }
  }
  return item_ok();
}

// One-sided inclusion: for all A of kind `outer`, I interior, C of kind
// `side`, the set A n I n C is contained in A*I*C (left) or C*I*A (right).
Item sided_inclusion(Semigroup const& s, IdealKind outer, IdealKind side) {
  bool left = side == IdealKind::Left;
  for (ElemSet const& a : enumerate_ideals(s, outer)) {
    for (ElemSet const& i : enumerate_ideals(s, IdealKind::Interior)) {
      for (ElemSet const& c : enumerate_ideals(s, side)) {
        ElemSet lhs = a & i & c;
        ElemSet rhs = left ? subset_product(s, subset_product(s, a, i), c)
                           : subset_product(s, subset_product(s, c, i), a);
        if (!lhs.subset_of(rhs)) {
          ordered_json v;
          v["outer"] = set_to_json(s, a);
          v["interior"] = set_to_json(s, i);
          v["sided"] = set_to_json(s, c);
          v["intersection"] = set_to_json(s, lhs);
          v["product"] = set_to_json(s, rhs);
          return item_fail(std::move(v));
        }
      }
    }
  }
  return item_ok();
}

Item regular_item(Semigroup const& s) {
  auto witnesses = regularity_witnesses(s);
  if (witnesses) return item_ok();
  for (int a = 0; a < s.order(); ++a) {
    bool found = false;
    for (int x = 0; x < s.order() && !found; ++x) {
      Elem ax = s.product(static_cast<Elem>(a), static_cast<Elem>(x));
      found = s.product(ax, static_cast<Elem>(a)) == static_cast<Elem>(a);
    }
    if (!found) {
      ordered_json v;
      v["element"] = s.name_of(static_cast<Elem>(a));
      return item_fail(std::move(v));
    }
  }
  throw std::logic_error("regularity witness scan disagrees with classify");
}

Item intra_regular_item(Semigroup const& s) {
  if (intra_regularity_witnesses(s)) return item_ok();
  for (int a = 0; a < s.order(); ++a) {
    Elem aa = s.product(static_cast<Elem>(a), static_cast<Elem>(a));
    bool found = false;
    for (int x = 0; x < s.order() && !found; ++x) {
      Elem xaa = s.product(static_cast<Elem>(x), aa);
      for (int y = 0; y < s.order() && !found; ++y) {
        found = s.product(xaa, static_cast<Elem>(y)) == static_cast<Elem>(a);
      }
    }
    if (!found) {
      ordered_json v;
      v["element"] = s.name_of(static_cast<Elem>(a));
      return item_fail(std::move(v));
    }
  }
  throw std::logic_error("intra-regularity witness scan disagrees with classify");
}

Item simple_item(Semigroup const& s) {
  if (is_interior_simple(s)) return item_ok();
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    if (i == s.full_set()) continue;
    if (s.zero() && i == s.singleton(*s.zero())) continue;
    ordered_json v;
    v["ideal"] = set_to_json(s, i);
    return item_fail(std::move(v));
  }
  throw std::logic_error("interior simplicity scan disagrees with classify");
}

Item sandwich_full_item(Semigroup const& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (s.zero() && static_cast<Elem>(a) == *s.zero()) continue;
    ElemSet span = sandwich(s, s.singleton(static_cast<Elem>(a)));
    if (!(span == s.full_set())) {
      ordered_json v;
      v["element"] = s.name_of(static_cast<Elem>(a));
      v["sandwich"] = set_to_json(s, span);
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item principal_full_item(Semigroup const& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (s.zero() && static_cast<Elem>(a) == *s.zero()) continue;
    ElemSet gen = principal(s, static_cast<Elem>(a), PrincipalKind::Interior);
    if (!(gen == s.full_set())) {
      ordered_json v;
      v["element"] = s.name_of(static_cast<Elem>(a));
      v["principal"] = set_to_json(s, gen);
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item all_completely_semiprime_item(Semigroup const& s) {
  for (ElemSet const& i : enumerate_ideals(s, IdealKind::Interior)) {
    for (int a = 0; a < s.order(); ++a) {
      Elem e = static_cast<Elem>(a);
      if (i.contains(s.product(e, e)) && !i.contains(e)) {
        ordered_json v;
        v["ideal"] = set_to_json(s, i);
        v["element"] = s.name_of(e);
        return item_fail(std::move(v));
      }
    }
  }
  return item_ok();
}

Item chain_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family[i].subset_of(family[j]) && !family[j].subset_of(family[i])) {
        return item_fail(
            pair_json(s, "first", family[i], "second", family[j]));
      }
    }
  }
  return item_ok();
}

Item all_profile_flag_item(Semigroup const& s, bool IdealProfile::*flag) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    IdealProfile p = profile(s, i, family);
    if (!(p.*flag)) {
      ordered_json v;
      v["ideal"] = set_to_json(s, i);
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item idempotent_product_item(Semigroup const& s) {
  for (ElemSet const& i : enumerate_ideals(s, IdealKind::Interior)) {
    if (!(subset_product(s, i, i) == i)) {
      ordered_json v;
      v["ideal"] = set_to_json(s, i);
      v["square"] = set_to_json(s, subset_product(s, i, i));
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item idempotent_meet_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& a : family) {
    for (ElemSet const& b : family) {
      ElemSet lhs = a & b;
      ElemSet rhs = subset_product(s, a, b) & subset_product(s, b, a);
      if (!(lhs == rhs)) {
        ordered_json v = pair_json(s, "first", a, "second", b);
        v["intersection"] = set_to_json(s, lhs);
        v["products_meet"] = set_to_json(s, rhs);
        return item_fail(std::move(v));
      }
    }
  }
  return item_ok();
}

Item all_semiprime_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    for (ElemSet const& a : family) {
      if (subset_product(s, a, a).subset_of(i) && !a.subset_of(i)) {
        ordered_json v;
        v["ideal"] = set_to_json(s, i);
        v["violating"] = set_to_json(s, a);
        return item_fail(std::move(v));
      }
    }
  }
  return item_ok();
}

Item irreducible_hull_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    if (i == s.full_set()) continue;
    ElemSet hull = s.full_set();
    for (ElemSet const& j : family) {
      if (!i.subset_of(j)) continue;
      IdealProfile p = profile(s, j, family);
      if (p.irreducible && p.semiprime) hull = hull & j;
    }
    if (!(hull == i)) {
      ordered_json v;
      v["ideal"] = set_to_json(s, i);
      v["hull"] = set_to_json(s, hull);
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item disjoint_minimal_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    if (i == s.full_set()) continue;
    if (!minimal_in_family(family, i)) {
      ordered_json v;
      v["ideal"] = set_to_json(s, i);
      return item_fail(std::move(v));
    }
  }
  return item_ok();
}

Item disjoint_pairwise_item(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == s.full_set()) continue;
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[j] == s.full_set()) continue;
      ElemSet meet = family[i] & family[j];
      if (!meet.is_empty()) {
        ordered_json v = pair_json(s, "first", family[i], "second", family[j]);
        v["intersection"] = set_to_json(s, meet);
        return item_fail(std::move(v));
      }
    }
  }
  return item_ok();
}

// Assembles an equivalence verdict: all items must agree.  The witness for a
// disagreement records the item truth values plus the first violation found
// for the first false item.
std::optional<ordered_json> equivalence_witness(std::vector<Item> const& items) {
  bool all_true = true;
  bool all_false = true;
  for (Item const& item : items) {
    all_true = all_true && item.ok;
    all_false = all_false && !item.ok;
  }
  if (all_true || all_false) return std::nullopt;
  ordered_json values = ordered_json::array();
  for (Item const& item : items) values.push_back(item.ok);
  ordered_json witness;
  witness["items"] = std::move(values);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!items[k].ok) {
      ordered_json detail = items[k].violation;
      detail["item"] = static_cast<int>(k + 1);
      witness["detail"] = std::move(detail);
      break;
    }
  }
  return witness;
}

std::vector<Item> items_for(Semigroup const& s, TheoremId t) {
  switch (t) {
    case TheoremId::RegEquivQjq:
      return {regular_item(s),
              intersection_identity(s, IdealKind::Quasi, IdealKind::TwoSided),
              intersection_identity(s, IdealKind::Quasi, IdealKind::Interior),
              intersection_identity(s, IdealKind::Bi, IdealKind::Interior)};
    case TheoremId::RegEquivBil:
      return {regular_item(s),
              sided_inclusion(s, IdealKind::Bi, IdealKind::Left),
              sided_inclusion(s, IdealKind::Quasi, IdealKind::Left),
              sided_inclusion(s, IdealKind::Bi, IdealKind::Right),
              sided_inclusion(s, IdealKind::Quasi, IdealKind::Right)};
    case TheoremId::IntraCompsemiIff:
      return {intra_regular_item(s), all_completely_semiprime_item(s)};
    case TheoremId::SimpleIff:
      return {simple_item(s), sandwich_full_item(s), principal_full_item(s)};
    case TheoremId::IdempotentEquiv:
      return {idempotent_product_item(s), idempotent_meet_item(s),
              all_semiprime_item(s), irreducible_hull_item(s)};
    case TheoremId::ChainEquiv:
      return {chain_item(s),
              all_profile_flag_item(s, &IdealProfile::strongly_irreducible),
              all_profile_flag_item(s, &IdealProfile::irreducible)};
    case TheoremId::MinDisjoint:
      return {disjoint_minimal_item(s), disjoint_pairwise_item(s)};
    default:
      throw std::invalid_argument("theorem has no item decomposition");
  }
}

// Hypothesis gate; nullopt means the theorem is unconditional.
std::optional<bool> hypothesis_met(Semigroup const& s, TheoremId t) {
  switch (t) {
    case TheoremId::RegSis:
    case TheoremId::RegCoincide:
    case TheoremId::IdempotentEquiv:
    case TheoremId::MinJclass:
    case TheoremId::ProbeProdReg:
      return is_regular(s);
    case TheoremId::DuoBi:
    case TheoremId::DuoQuasi:
      return is_regular(s) && is_duo(s);
    case TheoremId::IntraCoincide:
    case TheoremId::IntraSemiprime:
      return is_intra_regular(s);
    case TheoremId::RegJi:
      return is_regular(s) || is_intra_regular(s);
    default:
      return std::nullopt;
  }
}

std::optional<ordered_json> family_mismatch_witness(Semigroup const& s) {
  auto interior = enumerate_ideals(s, IdealKind::Interior);
  auto two_sided = enumerate_ideals(s, IdealKind::TwoSided);
  std::size_t ii = 0;
  std::size_t ti = 0;
  auto emit = [&](ElemSet const& set) {
    ordered_json w;
    w["set"] = set_to_json(s, set);
    w["two_sided"] = is_ideal_of_kind(s, set, IdealKind::TwoSided);
    w["interior"] = is_ideal_of_kind(s, set, IdealKind::Interior);
    return w;
  };
  while (ii < interior.size() && ti < two_sided.size()) {
    if (interior[ii] == two_sided[ti]) {
      ++ii;
      ++ti;
    } else if (interior[ii].bits() < two_sided[ti].bits()) {
      return emit(interior[ii]);
    } else {
      return emit(two_sided[ti]);
    }
  }
  if (ii < interior.size()) return emit(interior[ii]);
  if (ti < two_sided.size()) return emit(two_sided[ti]);
  return std::nullopt;
}

std::optional<ordered_json> evaluate_ideal_is_interior(Semigroup const& s) {
  for (ElemSet const& a : enumerate_ideals(s, IdealKind::TwoSided)) {
    if (!is_ideal_of_kind(s, a, IdealKind::Interior)) {
      ordered_json w;
      w["ideal"] = set_to_json(s, a);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_intersection(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ElemSet meet = family[i] & family[j];
      if (meet.is_empty()) continue;
      if (!is_ideal_of_kind(s, meet, IdealKind::Interior)) {
        ordered_json w = pair_json(s, "first", family[i], "second", family[j]);
        w["intersection"] = set_to_json(s, meet);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_relative(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  std::uint64_t full = s.full_set().bits();
  for (ElemSet const& i : family) {
    for (std::uint64_t bits = 1; bits <= full; ++bits) {
      ElemSet sub{s.order(), bits};
      if (!is_subsemigroup(s, sub)) continue;
      if ((i & sub).is_empty()) continue;
      if (!relative_interior_check(s, i, sub)) {
        ordered_json w;
        w["ideal"] = set_to_json(s, i);
        w["subsemigroup"] = set_to_json(s, sub);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_reg_sis(Semigroup const& s) {
  for (ElemSet const& i : enumerate_ideals(s, IdealKind::Interior)) {
    ElemSet span = sandwich(s, i);
    if (!(span == i)) {
      ordered_json w;
      w["ideal"] = set_to_json(s, i);
      w["sandwich"] = set_to_json(s, span);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_intra_semiprime(Semigroup const& s,
                                                     bool& vacuous) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  vacuous = true;
  for (ElemSet const& i : family) {
    if (i == s.full_set()) continue;
    vacuous = false;
    for (ElemSet const& a : family) {
      if (subset_product(s, a, a).subset_of(i) && !a.subset_of(i)) {
        ordered_json w;
        w["ideal"] = set_to_json(s, i);
        w["violating"] = set_to_json(s, a);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_duo_kind(Semigroup const& s,
                                              IdealKind kind,
                                              char const* label) {
  for (ElemSet const& a : enumerate_ideals(s, kind)) {
    if (!is_ideal_of_kind(s, a, IdealKind::Interior)) {
      ordered_json w;
      w[label] = set_to_json(s, a);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_sirr_sp(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    IdealProfile p = profile(s, i, family);
    if (!(p.strongly_irreducible && p.semiprime) || p.strongly_prime) continue;
    for (ElemSet const& a : family) {
      for (ElemSet const& b : family) {
        ElemSet mixed = subset_product(s, a, b) & subset_product(s, b, a);
        if (mixed.subset_of(i) && !a.subset_of(i) && !b.subset_of(i)) {
          ordered_json w;
          w["ideal"] = set_to_json(s, i);
          w["first"] = set_to_json(s, a);
          w["second"] = set_to_json(s, b);
          return w;
        }
      }
    }
    throw std::logic_error("strong primeness scan disagrees with profile");
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_zorn(Semigroup const& s, bool& vacuous) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  vacuous = true;
  for (ElemSet const& i : family) {
    for (int a = 0; a < s.order(); ++a) {
      Elem e = static_cast<Elem>(a);
      if (i.contains(e)) continue;
      vacuous = false;
      ordered_json w;
      w["ideal"] = set_to_json(s, i);
      w["excluded"] = s.name_of(e);
      try {
        ElemSet found = irreducible_witness(s, i, e);
        IdealProfile p = profile(s, found, family);
        if (i.subset_of(found) && !found.contains(e) && p.irreducible) {
          continue;
        }
        w["witness"] = set_to_json(s, found);
        w["reason"] = "candidate fails a required property";
      } catch (std::exception const&) {
        w["reason"] = "no candidate exists";
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_min_iff(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    bool minimal = minimal_in_family(family, i);
    bool sandwich_all = true;
    bool principal_all = true;
    std::optional<Elem> bad;
    for (Elem a : i.elements()) {
      if (!(sandwich(s, s.singleton(a)) == i)) {
        sandwich_all = false;
        if (!bad) bad = a;
      }
      if (!(principal(s, a, PrincipalKind::Interior) == i)) {
        principal_all = false;
        if (!bad) bad = a;
      }
    }
    if (minimal != sandwich_all || sandwich_all != principal_all) {
      ordered_json w;
      w["ideal"] = set_to_json(s, i);
      w["minimal"] = minimal;
      w["sandwich_all"] = sandwich_all;
      w["principal_all"] = principal_all;
      if (bad) w["element"] = s.name_of(*bad);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_min_inab(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    bool minimal = minimal_in_family(family, i);
    bool agree = true;
    std::optional<std::pair<Elem, Elem>> bad;
    auto elems = i.elements();
    for (std::size_t x = 0; x < elems.size() && agree; ++x) {
      for (std::size_t y = x + 1; y < elems.size() && agree; ++y) {
        if (!(principal(s, elems[x], PrincipalKind::Interior) ==
              principal(s, elems[y], PrincipalKind::Interior))) {
          agree = false;
          bad = {elems[x], elems[y]};
        }
      }
    }
    if (minimal != agree) {
      ordered_json w;
      w["ideal"] = set_to_json(s, i);
      w["minimal"] = minimal;
      w["generators_agree"] = agree;
      if (bad) {
        w["a"] = s.name_of(bad->first);
        w["b"] = s.name_of(bad->second);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_j_sub_i(Semigroup const& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = a + 1; b < s.order(); ++b) {
      Elem ea = static_cast<Elem>(a);
      Elem eb = static_cast<Elem>(b);
      bool j_rel = principal(s, ea, PrincipalKind::TwoSided) ==
                   principal(s, eb, PrincipalKind::TwoSided);
      bool i_rel = principal(s, ea, PrincipalKind::Interior) ==
                   principal(s, eb, PrincipalKind::Interior);
      if (j_rel && !i_rel) {
        ordered_json w;
        w["a"] = s.name_of(ea);
        w["b"] = s.name_of(eb);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_reg_ji(Semigroup const& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = a + 1; b < s.order(); ++b) {
      Elem ea = static_cast<Elem>(a);
      Elem eb = static_cast<Elem>(b);
      bool j_rel = principal(s, ea, PrincipalKind::TwoSided) ==
                   principal(s, eb, PrincipalKind::TwoSided);
      bool i_rel = principal(s, ea, PrincipalKind::Interior) ==
                   principal(s, eb, PrincipalKind::Interior);
      if (j_rel != i_rel) {
        ordered_json w;
        w["a"] = s.name_of(ea);
        w["b"] = s.name_of(eb);
        w["j_related"] = j_rel;
        w["i_related"] = i_rel;
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_min_class(Semigroup const& s,
                                               GreenRelation relation) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  RelationPartition partition = green_partition(s, relation);
  for (ElemSet const& i : family) {
    bool minimal = minimal_in_family(family, i);
    bool is_class = std::find(partition.classes.begin(),
                              partition.classes.end(),
                              i) != partition.classes.end();
    if (minimal != is_class) {
      ordered_json w;
      w["ideal"] = set_to_json(s, i);
      w["minimal"] = minimal;
      w["is_class"] = is_class;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_in_least(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (int a = 0; a < s.order(); ++a) {
    Elem e = static_cast<Elem>(a);
    ElemSet gen = principal(s, e, PrincipalKind::Interior);
    if (!is_ideal_of_kind(s, gen, IdealKind::Interior) || !gen.contains(e)) {
      ordered_json w;
      w["element"] = s.name_of(e);
      w["principal"] = set_to_json(s, gen);
      w["reason"] = "not an interior ideal containing the generator";
      return w;
    }
    for (ElemSet const& j : family) {
      if (j.contains(e) && !gen.subset_of(j)) {
        ordered_json w;
        w["element"] = s.name_of(e);
        w["principal"] = set_to_json(s, gen);
        w["containing"] = set_to_json(s, j);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> evaluate_prod_reg(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& a : family) {
    for (ElemSet const& b : family) {
      ElemSet prod = subset_product(s, a, b);
      if (!is_ideal_of_kind(s, prod, IdealKind::Interior)) {
        ordered_json w = pair_json(s, "first", a, "second", b);
        w["product"] = set_to_json(s, prod);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool has_proper_interior_ideal(Semigroup const& s) {
  auto family = enumerate_ideals(s, IdealKind::Interior);
  for (ElemSet const& i : family) {
    if (!(i == s.full_set())) return true;
  }
  return false;
}

TheoremVerdict finish(Semigroup const& s, TheoremId t, VerdictStatus status,
                      ordered_json witness, bool vacuous) {
  TheoremVerdict verdict;
  verdict.theorem = t;
  verdict.status = status;
  verdict.witness = std::move(witness);
  if (vacuous) {
    verdict.degeneracy_flags.emplace_back(kFlagVacuousHypothesis);
  }
  if (is_zero_degenerate(s)) {
    verdict.degeneracy_flags.emplace_back(kFlagZeroDegenerate);
  }
  return verdict;
}

}  // namespace

std::string_view to_string(TheoremId t) { return info_for(t).name; }

std::string_view theorem_summary(TheoremId t) { return info_for(t).summary; }

std::optional<TheoremId> theorem_from_string(std::string_view text) {
  for (TheoremInfo const& info : kTheoremTable) {
    if (text == info.name) return info.id;
  }
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() {
  static std::vector<TheoremId> const ids = [] {
    std::vector<TheoremId> out;
    for (TheoremInfo const& info : kTheoremTable) out.push_back(info.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds:
      return "holds";
    case VerdictStatus::Fails:
      return "fails";
    case VerdictStatus::Skipped:
      return "skipped";
  }
  throw std::invalid_argument("unknown verdict status");
}

TheoremVerdict verify(Semigroup const& s, TheoremId t) {
  if (auto met = hypothesis_met(s, t); met && !*met) {
    return finish(s, t, VerdictStatus::Skipped, ordered_json(), false);
  }
  std::optional<ordered_json> witness;
  bool vacuous = false;
  switch (t) {
    case TheoremId::IdealIsInterior:
      witness = evaluate_ideal_is_interior(s);
      break;
    case TheoremId::Intersection:
      witness = evaluate_intersection(s);
      break;
    case TheoremId::Relative:
      witness = evaluate_relative(s);
      break;
    case TheoremId::RegSis:
      witness = evaluate_reg_sis(s);
      break;
    case TheoremId::RegEquivQjq:
    case TheoremId::RegEquivBil:
    case TheoremId::IntraCompsemiIff:
    case TheoremId::SimpleIff:
    case TheoremId::IdempotentEquiv:
    case TheoremId::ChainEquiv:
      witness = equivalence_witness(items_for(s, t));
      break;
    case TheoremId::MinDisjoint:
      witness = equivalence_witness(items_for(s, t));
      vacuous = !has_proper_interior_ideal(s);
      break;
    case TheoremId::RegCoincide:
    case TheoremId::IntraCoincide:
      witness = family_mismatch_witness(s);
      break;
    case TheoremId::IntraSemiprime:
      witness = evaluate_intra_semiprime(s, vacuous);
      break;
    case TheoremId::DuoBi:
      witness = evaluate_duo_kind(s, IdealKind::Bi, "bi_ideal");
      break;
    case TheoremId::DuoQuasi:
      witness = evaluate_duo_kind(s, IdealKind::Quasi, "quasi_ideal");
      break;
    case TheoremId::SirrSp:
      witness = evaluate_sirr_sp(s);
      break;
    case TheoremId::ZornWitness:
      witness = evaluate_zorn(s, vacuous);
      break;
    case TheoremId::MinIff:
      witness = evaluate_min_iff(s);
      break;
    case TheoremId::MinInab:
      witness = evaluate_min_inab(s);
      break;
    case TheoremId::JSubI:
      witness = evaluate_j_sub_i(s);
      break;
    case TheoremId::RegJi:
      witness = evaluate_reg_ji(s);
      break;
    case TheoremId::MinIclass:
      witness = evaluate_min_class(s, GreenRelation::I);
      break;
    case TheoremId::MinJclass:
      witness = evaluate_min_class(s, GreenRelation::J);
      break;
    case TheoremId::ProbeInLeast:
      witness = evaluate_in_least(s);
      break;
    case TheoremId::ProbeProdReg:
      witness = evaluate_prod_reg(s);
      break;
  }
  if (witness) {
    return finish(s, t, VerdictStatus::Fails, std::move(*witness), vacuous);
  }
  return finish(s, t, VerdictStatus::Holds, ordered_json(), vacuous);
}

bool replay_witness(Semigroup const& s, TheoremId t,
                    nlohmann::ordered_json const& witness) {
  if (auto met = hypothesis_met(s, t); met && !*met) {
    return false;  // a skipped statement has nothing to refute
  }
  auto set_at = [&](char const* key) {
    return set_from_json(s, witness.at(key));
  };
  auto elem_at = [&](char const* key) {
    return s.element_of(witness.at(key).get<std::string>());
  };
  auto interior = [&](ElemSet const& x) {
    return is_ideal_of_kind(s, x, IdealKind::Interior);
  };
  switch (t) {
    case TheoremId::IdealIsInterior: {
      ElemSet a = set_at("ideal");
      return is_ideal_of_kind(s, a, IdealKind::TwoSided) && !interior(a);
    }
    case TheoremId::Intersection: {
      ElemSet a = set_at("first");
      ElemSet b = set_at("second");
      ElemSet meet = a & b;
      return interior(a) && interior(b) && !meet.is_empty() &&
             meet == set_at("intersection") && !interior(meet);
    }
    case TheoremId::Relative: {
      ElemSet i = set_at("ideal");
      ElemSet sub = set_at("subsemigroup");
      return interior(i) && is_subsemigroup(s, sub) && !(i & sub).is_empty() &&
             !relative_interior_check(s, i, sub);
    }
    case TheoremId::RegSis: {
      ElemSet i = set_at("ideal");
      return is_regular(s) && interior(i) && !(sandwich(s, i) == i) &&
             sandwich(s, i) == set_at("sandwich");
    }
    case TheoremId::RegEquivQjq:
    case TheoremId::RegEquivBil:
    case TheoremId::IntraCompsemiIff:
    case TheoremId::SimpleIff:
    case TheoremId::IdempotentEquiv:
    case TheoremId::ChainEquiv:
    case TheoremId::MinDisjoint: {
      std::vector<Item> items = items_for(s, t);
      auto const& recorded = witness.at("items");
      if (recorded.size() != items.size()) return false;
      bool all_agree = true;
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (recorded[k].get<bool>() != items[k].ok) return false;
        all_agree = all_agree && (items[k].ok == items[0].ok);
      }
      return !all_agree;
    }
    case TheoremId::RegCoincide:
    case TheoremId::IntraCoincide: {
      bool hyp = t == TheoremId::RegCoincide ? is_regular(s)
                                             : is_intra_regular(s);
      ElemSet set = set_at("set");
      bool two_sided = is_ideal_of_kind(s, set, IdealKind::TwoSided);
      return hyp && two_sided != interior(set) &&
             two_sided == witness.at("two_sided").get<bool>();
    }
    case TheoremId::IntraSemiprime: {
      ElemSet i = set_at("ideal");
      ElemSet a = set_at("violating");
      return is_intra_regular(s) && interior(i) && !(i == s.full_set()) &&
             interior(a) && subset_product(s, a, a).subset_of(i) &&
             !a.subset_of(i);
    }
    case TheoremId::DuoBi: {
      ElemSet b = set_at("bi_ideal");
      return is_regular(s) && is_duo(s) &&
             is_ideal_of_kind(s, b, IdealKind::Bi) && !interior(b);
    }
    case TheoremId::DuoQuasi: {
      ElemSet q = set_at("quasi_ideal");
      return is_regular(s) && is_duo(s) &&
             is_ideal_of_kind(s, q, IdealKind::Quasi) && !interior(q);
    }
    case TheoremId::SirrSp: {
      ElemSet i = set_at("ideal");
      ElemSet a = set_at("first");
      ElemSet b = set_at("second");
      IdealProfile p = profile(s, i);
      ElemSet mixed = subset_product(s, a, b) & subset_product(s, b, a);
      return p.strongly_irreducible && p.semiprime && interior(a) &&
             interior(b) && mixed.subset_of(i) && !a.subset_of(i) &&
             !b.subset_of(i);
    }
    case TheoremId::ZornWitness: {
      ElemSet i = set_at("ideal");
      Elem e = elem_at("excluded");
      if (!interior(i) || i.contains(e)) return false;
      try {
        ElemSet found = irreducible_witness(s, i, e);
        IdealProfile p = profile(s, found);
        return !(i.subset_of(found) && !found.contains(e) && p.irreducible);
      } catch (std::exception const&) {
        return true;
      }
    }
    case TheoremId::MinIff: {
      ElemSet i = set_at("ideal");
      if (!interior(i)) return false;
      auto family = enumerate_ideals(s, IdealKind::Interior);
      bool minimal = minimal_in_family(family, i);
      bool sandwich_all = true;
      bool principal_all = true;
      for (Elem a : i.elements()) {
        sandwich_all = sandwich_all && sandwich(s, s.singleton(a)) == i;
        principal_all = principal_all &&
                        principal(s, a, PrincipalKind::Interior) == i;
      }
      return minimal == witness.at("minimal").get<bool>() &&
             sandwich_all == witness.at("sandwich_all").get<bool>() &&
             principal_all == witness.at("principal_all").get<bool>() &&
             (minimal != sandwich_all || sandwich_all != principal_all);
    }
    case TheoremId::MinInab: {
      ElemSet i = set_at("ideal");
      if (!interior(i)) return false;
      auto family = enumerate_ideals(s, IdealKind::Interior);
      bool minimal = minimal_in_family(family, i);
      bool agree = true;
      auto elems = i.elements();
      for (std::size_t x = 0; x < elems.size(); ++x) {
        for (std::size_t y = x + 1; y < elems.size(); ++y) {
          agree = agree &&
                  principal(s, elems[x], PrincipalKind::Interior) ==
                      principal(s, elems[y], PrincipalKind::Interior);
        }
      }
      return minimal == witness.at("minimal").get<bool>() &&
             agree == witness.at("generators_agree").get<bool>() &&
             minimal != agree;
    }
    case TheoremId::JSubI: {
      Elem a = elem_at("a");
      Elem b = elem_at("b");
      return principal(s, a, PrincipalKind::TwoSided) ==
                 principal(s, b, PrincipalKind::TwoSided) &&
             !(principal(s, a, PrincipalKind::Interior) ==
               principal(s, b, PrincipalKind::Interior));
    }
    case TheoremId::RegJi: {
      Elem a = elem_at("a");
      Elem b = elem_at("b");
      bool j_rel = principal(s, a, PrincipalKind::TwoSided) ==
                   principal(s, b, PrincipalKind::TwoSided);
      bool i_rel = principal(s, a, PrincipalKind::Interior) ==
                   principal(s, b, PrincipalKind::Interior);
      return (is_regular(s) || is_intra_regular(s)) && j_rel != i_rel;
    }
    case TheoremId::MinIclass:
    case TheoremId::MinJclass: {
      if (t == TheoremId::MinJclass && !is_regular(s)) return false;
      ElemSet i = set_at("ideal");
      if (!interior(i)) return false;
      auto family = enumerate_ideals(s, IdealKind::Interior);
      bool minimal = minimal_in_family(family, i);
      RelationPartition partition = green_partition(
          s, t == TheoremId::MinIclass ? GreenRelation::I : GreenRelation::J);
      bool is_class = std::find(partition.classes.begin(),
                                partition.classes.end(),
                                i) != partition.classes.end();
      return minimal == witness.at("minimal").get<bool>() &&
             is_class == witness.at("is_class").get<bool>() &&
             minimal != is_class;
    }
    case TheoremId::ProbeInLeast: {
      Elem e = elem_at("element");
      ElemSet gen = principal(s, e, PrincipalKind::Interior);
      if (!(gen == set_at("principal"))) return false;
      if (!interior(gen) || !gen.contains(e)) return true;
      ElemSet j = set_at("containing");
      return interior(j) && j.contains(e) && !gen.subset_of(j);
    }
    case TheoremId::ProbeProdReg: {
      ElemSet a = set_at("first");
      ElemSet b = set_at("second");
      return is_regular(s) && interior(a) && interior(b) &&
             !interior(subset_product(s, a, b));
    }
  }
  throw std::invalid_argument("unknown theorem id");
}

SuiteReport run_suite(std::span<const Semigroup> corpus,
                      std::span<const TheoremId> theorems, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  std::vector<std::vector<TheoremVerdict>> verdicts(corpus.size());
  auto worker = [&](std::size_t begin, std::size_t step) {
    for (std::size_t idx = begin; idx < corpus.size(); idx += step) {
      auto& row = verdicts[idx];
      row.reserve(theorems.size());
      for (TheoremId t : theorems) {
        TheoremVerdict v = verify(corpus[idx], t);
        if (v.status == VerdictStatus::Fails &&
            !replay_witness(corpus[idx], t, v.witness)) {
          throw std::logic_error("witness replay failed for " +
                                 std::string(to_string(t)));
        }
        row.push_back(std::move(v));
      }
    }
  };
  std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), corpus.size());
  if (n_threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    for (std::size_t k = 0; k < n_threads; ++k) {
      pool.emplace_back([&, k] {
        try {
          worker(k, n_threads);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (std::exception_ptr const& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  SuiteReport report;
  report.corpus.count = static_cast<std::int64_t>(corpus.size());
  for (Semigroup const& s : corpus) {
    if (report.corpus.order == 0) {
      report.corpus.order = s.order();
    } else if (report.corpus.order != s.order()) {
      report.corpus.order = 0;
      break;
    }
  }
  for (TheoremId t : theorems) {
    TheoremTally tally;
    tally.theorem = t;
    report.theorems.push_back(tally);
  }
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    for (std::size_t k = 0; k < theorems.size(); ++k) {
      TheoremVerdict const& v = verdicts[idx][k];
      TheoremTally& tally = report.theorems[k];
      switch (v.status) {
        case VerdictStatus::Holds:
          ++tally.holds;
          break;
        case VerdictStatus::Skipped:
          ++tally.skipped;
          break;
        case VerdictStatus::Fails:
          ++tally.fails;
          tally.witnesses.push_back(
              WitnessRecord{corpus[idx], v.witness, v.degeneracy_flags});
          break;
      }
    }
  }
  return report;
}

nlohmann::ordered_json report_to_json(SuiteReport const& report) {
  ordered_json out;
  out["schema"] = 1;
  out["corpus"]["order"] = report.corpus.order;
  out["corpus"]["count"] = report.corpus.count;
  out["corpus"]["dedup"] = report.corpus.dedup;
  ordered_json theorems = ordered_json::array();
  ordered_json errata = ordered_json::array();
  for (TheoremTally const& tally : report.theorems) {
    ordered_json entry;
    entry["id"] = to_string(tally.theorem);
    entry["holds"] = tally.holds;
    entry["fails"] = tally.fails;
    entry["skipped"] = tally.skipped;
    ordered_json witnesses = ordered_json::array();
    std::uint64_t degenerate = 0;
    for (WitnessRecord const& record : tally.witnesses) {
      ordered_json w;
      w["table"] = table_to_json(record.semigroup);
      ordered_json detail = record.detail;
      if (!record.degeneracy_flags.empty()) {
        detail["degeneracy"] = record.degeneracy_flags;
      }
      w["detail"] = std::move(detail);
      witnesses.push_back(std::move(w));
      bool is_degenerate = std::find(record.degeneracy_flags.begin(),
                                     record.degeneracy_flags.end(),
                                     kFlagZeroDegenerate) !=
                           record.degeneracy_flags.end();
      if (is_degenerate) ++degenerate;
    }
    entry["witnesses"] = std::move(witnesses);
    theorems.push_back(std::move(entry));
    if (tally.fails > 0 && degenerate == tally.fails) {
      ordered_json erratum;
      erratum["id"] = to_string(tally.theorem);
      erratum["class"] = std::string(kFlagZeroDegenerate);
      erratum["count"] = degenerate;
      erratum["note"] =
          "every failure occurs on a semigroup where some nonzero element "
          "generates a sandwich set inside the zero; statements quantified "
          "over nonzero elements cannot see past such collapse";
      errata.push_back(std::move(erratum));
    }
  }
  out["theorems"] = std::move(theorems);
  out["errata"] = std::move(errata);
  return out;
}

std::optional<Counterexample> find_counterexample(TheoremId t, int max_order) {
  if (max_order < 1 || max_order > kMaxEnumerationOrder) {
    throw std::invalid_argument("max_order out of range");
  }
  std::optional<Counterexample> found;
  for (int order = 1; order <= max_order && !found; ++order) {
    EnumerationConfig config;
    config.order = order;
    config.dedup = EnumerationConfig::Dedup::Labeled;
    enumerate_semigroups(config, [&](Semigroup s) {
      TheoremVerdict v = verify(s, t);
      if (v.status == VerdictStatus::Fails) {
        if (!replay_witness(s, t, v.witness)) {
          throw std::logic_error("witness replay failed for " +
                                 std::string(to_string(t)));
        }
        found = Counterexample{std::move(s), std::move(v.witness)};
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace sgideals

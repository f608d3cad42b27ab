#include "sgideals/report.hpp"

namespace sgideals {

using nlohmann::ordered_json;

ordered_json table_to_json(Semigroup const& s) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < s.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < s.order(); ++j) {
      row.push_back(
          static_cast<int>(s.product(static_cast<Elem>(i), static_cast<Elem>(j))));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json set_to_json(Semigroup const& s, ElemSet const& set) {
  ordered_json out = ordered_json::array();
  for (Elem e : set.elements()) {
    out.push_back(s.name_of(e));
  }
  return out;
}

ordered_json semigroup_to_json(Semigroup const& s) {
  ordered_json out;
  out["elements"] = s.names();
  out["zero"] = s.zero() ? ordered_json(s.name_of(*s.zero())) : ordered_json();
  out["table"] = table_to_json(s);
  return out;
}

ordered_json profile_to_json(Semigroup const& s, IdealProfile const& p) {
  ordered_json out;
  out["elements"] = set_to_json(s, p.elements);
  out["proper"] = p.proper;
  out["semiprime"] = p.semiprime;
  out["completely_semiprime"] = p.completely_semiprime;
  out["prime"] = p.prime;
  out["strongly_prime"] = p.strongly_prime;
  out["irreducible"] = p.irreducible;
  out["strongly_irreducible"] = p.strongly_irreducible;
  out["minimal"] = p.minimal;
  out["idempotent"] = p.idempotent;
  return out;
}

ordered_json classification_to_json(Semigroup const& s,
                                    ClassificationReport const& r) {
  ordered_json out;
  out["regular"] = r.regular;
  if (r.regular) {
    ordered_json w;
    for (int a = 0; a < s.order(); ++a) {
      w[s.name_of(static_cast<Elem>(a))] =
          s.name_of(r.regular_witnesses[a]);
    }
    out["regular_witnesses"] = std::move(w);
  }
  out["intra_regular"] = r.intra_regular;
  if (r.intra_regular) {
    ordered_json w;
    for (int a = 0; a < s.order(); ++a) {
      auto const& [x, y] = r.intra_regular_witnesses[a];
      w[s.name_of(static_cast<Elem>(a))] =
          ordered_json::array({s.name_of(x), s.name_of(y)});
    }
    out["intra_regular_witnesses"] = std::move(w);
  }
  out["duo"] = r.duo;
  out["interior_simple"] = r.interior_simple;
  out["interior_chain"] = r.interior_chain;
  out["zero_degenerate"] = r.zero_degenerate;
  return out;
}

ordered_json partition_to_json(Semigroup const& s,
                               RelationPartition const& p) {
  ordered_json out = ordered_json::array();
  for (ElemSet const& cls : p.classes) {
    out.push_back(set_to_json(s, cls));
  }
  return out;
}

}  // namespace sgideals

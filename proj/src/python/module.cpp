#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgideals/classify.hpp"
#include "sgideals/enumerate.hpp"
#include "sgideals/green.hpp"
#include "sgideals/harness.hpp"
#include "sgideals/idealprops.hpp"
#include "sgideals/ideals.hpp"
#include "sgideals/report.hpp"
#include "sgideals/semigroup.hpp"

namespace py = pybind11;
using namespace sgideals;
using nlohmann::ordered_json;

namespace {

py::object to_py(ordered_json const& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ElemSet set_from_tokens(Semigroup const& s,
                        std::vector<std::string> const& tokens) {
  ElemSet out = s.empty_set();
  for (std::string const& t : tokens) {
    out.insert(s.element_of(t));
  }
  return out;
}

std::vector<std::string> tokens_of(Semigroup const& s, ElemSet const& set) {
  std::vector<std::string> out;
  for (Elem e : set.elements()) {
    out.push_back(s.name_of(e));
  }
  return out;
}

IdealKind ideal_kind(std::string const& name) {
  auto k = ideal_kind_from_string(name);
  if (!k) throw std::invalid_argument("unknown ideal kind: " + name);
  return *k;
}

PrincipalKind principal_kind(std::string const& name) {
  if (name == "left") return PrincipalKind::Left;
  if (name == "right") return PrincipalKind::Right;
  if (name == "two-sided") return PrincipalKind::TwoSided;
  if (name == "interior") return PrincipalKind::Interior;
  throw std::invalid_argument("unknown principal kind: " + name);
}

GreenRelation green_relation(std::string const& name) {
  auto r = green_relation_from_string(name);
  if (!r) throw std::invalid_argument("unknown relation: " + name);
  return *r;
}

TheoremId theorem(std::string const& name) {
  auto t = theorem_from_string(name);
  if (!t) throw std::invalid_argument("unknown theorem id: " + name);
  return *t;
}

std::vector<TheoremId> theorem_list(
    std::optional<std::vector<std::string>> const& names) {
  if (!names) {
    auto span = all_theorems();
    return {span.begin(), span.end()};
  }
  std::vector<TheoremId> out;
  for (std::string const& n : *names) {
    out.push_back(theorem(n));
  }
  return out;
}

std::vector<std::vector<int>> table_rows(Semigroup const& s) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < s.order(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < s.order(); ++j) {
      row.push_back(s.product(static_cast<Elem>(i), static_cast<Elem>(j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

py::object verdict_to_py(TheoremVerdict const& v) {
  py::dict out;
  out["theorem"] = std::string(to_string(v.theorem));
  out["status"] = std::string(to_string(v.status));
  out["witness"] = v.witness.is_null() ? py::object(py::none())
                                       : to_py(v.witness);
  out["degeneracy"] = v.degeneracy_flags;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sgideals, m) {
  m.doc() =
      "finite semigroup analysis: ideal families, classifications, Green's "
      "relations and exhaustive statement verification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotAssociativeError>(m, "NotAssociativeError",
                                              PyExc_ValueError);

  py::class_<Semigroup>(m, "Semigroup")
      .def_static(
          "from_table",
          [](std::vector<std::string> names, std::vector<int> flat) {
            std::vector<Elem> table;
            table.reserve(flat.size());
            for (int v : flat) {
              if (v < 0 || v >= kMaxOrder) {
                throw std::invalid_argument("table entry out of range");
              }
              table.push_back(static_cast<Elem>(v));
            }
            return Semigroup::from_table(std::move(names), std::move(table));
          },
          py::arg("names"), py::arg("table"),
          "Build a semigroup from element names and a flat row-major table "
          "of indices.")
      .def_property_readonly("order", &Semigroup::order)
      .def_property_readonly(
          "names", [](Semigroup const& s) { return s.names(); })
      .def_property_readonly("zero",
                             [](Semigroup const& s) -> std::optional<std::string> {
                               if (!s.zero()) return std::nullopt;
                               return s.name_of(*s.zero());
                             })
      .def("product",
           [](Semigroup const& s, std::string const& a, std::string const& b) {
             return s.name_of(s.product(s.element_of(a), s.element_of(b)));
           },
           py::arg("a"), py::arg("b"))
      .def("table", &table_rows)
      .def("serialize",
           [](Semigroup const& s) { return serialize_semigroup(s); })
      .def("__eq__",
           [](Semigroup const& a, Semigroup const& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](Semigroup const& s) {
        std::string out = "Semigroup(order=" + std::to_string(s.order()) +
                          ", elements=[";
        for (int i = 0; i < s.order(); ++i) {
          if (i) out += ", ";
          out += s.name_of(static_cast<Elem>(i));
        }
        return out + "])";
      });

  m.def("parse", [](std::string const& text) { return parse_semigroup(text); },
        py::arg("text"), "Parse one .sg document.");
  m.def("parse_catalog",
        [](std::string const& text) { return parse_catalog(text); },
        py::arg("text"), "Parse a catalog of .sg documents separated by ---.");

  m.def("is_ideal",
        [](Semigroup const& s, std::vector<std::string> const& elements,
           std::string const& kind) {
          return is_ideal_of_kind(s, set_from_tokens(s, elements),
                                  ideal_kind(kind));
        },
        py::arg("semigroup"), py::arg("elements"),
        py::arg("kind") = "interior");

  m.def("ideals",
        [](Semigroup const& s, std::string const& kind) {
          std::vector<std::vector<std::string>> out;
          for (ElemSet const& i : enumerate_ideals(s, ideal_kind(kind))) {
            out.push_back(tokens_of(s, i));
          }
          return out;
        },
        py::arg("semigroup"), py::arg("kind") = "interior",
        "All ideals of the kind, ascending by carrier bit-vector.");

  m.def("principal",
        [](Semigroup const& s, std::string const& a, std::string const& kind) {
          return tokens_of(
              s, principal(s, s.element_of(a), principal_kind(kind)));
        },
        py::arg("semigroup"), py::arg("element"),
        py::arg("kind") = "interior");

  m.def("classify",
        [](Semigroup const& s) {
          return to_py(classification_to_json(s, classify(s)));
        },
        py::arg("semigroup"));

  m.def("profile",
        [](Semigroup const& s, std::vector<std::string> const& elements) {
          return to_py(
              profile_to_json(s, profile(s, set_from_tokens(s, elements))));
        },
        py::arg("semigroup"), py::arg("elements"),
        "Property flags of one interior ideal.");

  m.def("green",
        [](Semigroup const& s, std::string const& relation) {
          std::vector<std::vector<std::string>> out;
          for (ElemSet const& cls :
               green_partition(s, green_relation(relation)).classes) {
            out.push_back(tokens_of(s, cls));
          }
          return out;
        },
        py::arg("semigroup"), py::arg("relation"),
        "Classes of L, R, J, H or I ordered by least element.");

  m.def("theorems", [] {
    std::vector<std::string> out;
    for (TheoremId t : all_theorems()) {
      out.push_back(std::string(to_string(t)));
    }
    return out;
  });
  m.def("theorem_summary",
        [](std::string const& id) {
          return std::string(theorem_summary(theorem(id)));
        },
        py::arg("theorem"));

  m.def("verify",
        [](Semigroup const& s, std::string const& id) {
          return verdict_to_py(verify(s, theorem(id)));
        },
        py::arg("semigroup"), py::arg("theorem"));

  m.def("verify_order",
        [](int order, std::optional<std::vector<std::string>> const& theorems,
           bool up_to_iso, int jobs) {
          EnumerationConfig config;
          config.order = order;
          config.dedup = up_to_iso ? EnumerationConfig::Dedup::UpToIso
                                   : EnumerationConfig::Dedup::Labeled;
          auto corpus = all_semigroups(config);
          SuiteReport report = run_suite(corpus, theorem_list(theorems), jobs);
          report.corpus.dedup = up_to_iso ? "iso" : "labeled";
          return to_py(report_to_json(report));
        },
        py::arg("order"), py::arg("theorems") = py::none(),
        py::arg("up_to_iso") = false, py::arg("jobs") = 1,
        "Check statements over every semigroup of one order; returns the "
        "suite report.");

  m.def("find_counterexample",
        [](std::string const& id, int max_order) -> py::object {
          auto found = find_counterexample(theorem(id), max_order);
          if (!found) return py::none();
          py::dict out;
          out["semigroup"] = to_py(semigroup_to_json(found->semigroup));
          out["witness"] = to_py(found->witness);
          return out;
        },
        py::arg("theorem"), py::arg("max_order") = 4);

  m.def("count_semigroups",
        [](int order, bool up_to_iso) {
          EnumerationConfig config;
          config.order = order;
          config.dedup = up_to_iso ? EnumerationConfig::Dedup::UpToIso
                                   : EnumerationConfig::Dedup::Labeled;
          std::uint64_t count = 0;
          enumerate_semigroups(config, [&](Semigroup) {
            ++count;
            return true;
          });
          return count;
        },
        py::arg("order"), py::arg("up_to_iso") = false);

  m.def("enumerate_tables",
        [](int order, bool up_to_iso, std::optional<std::uint64_t> limit) {
          EnumerationConfig config;
          config.order = order;
          config.dedup = up_to_iso ? EnumerationConfig::Dedup::UpToIso
                                   : EnumerationConfig::Dedup::Labeled;
          config.limit = limit;
          std::vector<std::vector<std::vector<int>>> out;
          enumerate_semigroups(config, [&](Semigroup s) {
            out.push_back(table_rows(s));
            return true;
          });
          return out;
        },
        py::arg("order"), py::arg("up_to_iso") = false,
        py::arg("limit") = py::none());

  m.def("canonical_table",
        [](Semigroup const& s) { return table_rows(canonical_form(s)); },
        py::arg("semigroup"),
        "Lexicographically least table over all relabelings.");
}

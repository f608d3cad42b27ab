// Command line front end: validation, analysis, enumeration and theorem
// verification over .sg Cayley-table files. Output is deterministic for
// fixed inputs and flags; exit code 2 signals a refuted statement so that
// shell pipelines can branch on it.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sgideals/classify.hpp"
#include "sgideals/enumerate.hpp"
#include "sgideals/green.hpp"
#include "sgideals/harness.hpp"
#include "sgideals/idealprops.hpp"
#include "sgideals/ideals.hpp"
#include "sgideals/report.hpp"
#include "sgideals/semigroup.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sgideals;

constexpr std::array<GreenRelation, 5> kRelations = {
    GreenRelation::L, GreenRelation::R, GreenRelation::J, GreenRelation::H,
    GreenRelation::I};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Semigroup load_semigroup(std::string const& path) {
  return parse_semigroup(read_file(path));
}

std::string format_set(Semigroup const& s, ElemSet const& set) {
  std::string out = "{";
  bool first = true;
  for (Elem e : set.elements()) {
    if (!first) out += ", ";
    out += s.name_of(e);
    first = false;
  }
  out += "}";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void dump_json(ordered_json const& j) { std::cout << j.dump(2) << "\n"; }

int run_validate(std::string const& path) {
  Semigroup s = load_semigroup(path);
  std::cout << "order: " << s.order() << "\n";
  std::cout << "zero: " << (s.zero() ? s.name_of(*s.zero()) : "none") << "\n";
  std::cout << "associative: yes\n";
  return 0;
}

ordered_json green_to_json(Semigroup const& s) {
  ordered_json out;
  for (GreenRelation r : kRelations) {
    out[std::string(to_string(r))] =
        partition_to_json(s, green_partition(s, r));
  }
  return out;
}

void print_profile_line(Semigroup const& s, IdealProfile const& p) {
  std::cout << "  " << format_set(s, p.elements) << ":";
  struct Flag {
    char const* label;
    bool value;
  };
  Flag const flags[] = {
      {"proper", p.proper},
      {"semiprime", p.semiprime},
      {"completely-semiprime", p.completely_semiprime},
      {"prime", p.prime},
      {"strongly-prime", p.strongly_prime},
      {"irreducible", p.irreducible},
      {"strongly-irreducible", p.strongly_irreducible},
      {"minimal", p.minimal},
      {"idempotent", p.idempotent},
  };
  for (Flag const& f : flags) {
    if (f.value) std::cout << " " << f.label;
  }
  std::cout << "\n";
}

int run_analyze(std::string const& path, bool json) {
  Semigroup s = load_semigroup(path);
  ClassificationReport c = classify(s);
  auto family = enumerate_ideals(s, IdealKind::Interior);
  if (json) {
    ordered_json out;
    out["schema"] = 1;
    out["semigroup"] = semigroup_to_json(s);
    out["classifications"] = classification_to_json(s, c);
    ordered_json ideals = ordered_json::array();
    for (ElemSet const& i : family) {
      ideals.push_back(profile_to_json(s, profile(s, i, family)));
    }
    out["interiorIdeals"] = std::move(ideals);
    out["green"] = green_to_json(s);
    dump_json(out);
    return 0;
  }
  std::cout << "order: " << s.order() << "\n";
  std::cout << "elements:";
  for (auto const& name : s.names()) std::cout << " " << name;
  std::cout << "\n";
  std::cout << "zero: " << (s.zero() ? s.name_of(*s.zero()) : "none") << "\n";
  std::cout << "regular: " << yes_no(c.regular) << "\n";
  std::cout << "intra-regular: " << yes_no(c.intra_regular) << "\n";
  std::cout << "duo: " << yes_no(c.duo) << "\n";
  std::cout << "interior-simple: " << yes_no(c.interior_simple) << "\n";
  std::cout << "interior-chain: " << yes_no(c.interior_chain) << "\n";
  std::cout << "zero-degenerate: " << yes_no(c.zero_degenerate) << "\n";
  std::cout << "interior ideals (" << family.size() << "):\n";
  for (ElemSet const& i : family) {
    print_profile_line(s, profile(s, i, family));
  }
  for (GreenRelation r : kRelations) {
    RelationPartition p = green_partition(s, r);
    std::cout << "green " << to_string(r) << ":";
    for (ElemSet const& cls : p.classes) {
      std::cout << " " << format_set(s, cls);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_ideals(std::string const& path, std::string const& kind_name,
               bool json) {
  auto kind = ideal_kind_from_string(kind_name);
  if (!kind) {
    throw std::runtime_error("unknown ideal kind: " + kind_name);
  }
  Semigroup s = load_semigroup(path);
  auto family = enumerate_ideals(s, *kind);
  if (json) {
    ordered_json out;
    out["schema"] = 1;
    out["kind"] = kind_name;
    ordered_json sets = ordered_json::array();
    for (ElemSet const& i : family) sets.push_back(set_to_json(s, i));
    out["ideals"] = std::move(sets);
    dump_json(out);
    return 0;
  }
  for (ElemSet const& i : family) {
    std::cout << format_set(s, i) << "\n";
  }
  return 0;
}

int run_green(std::string const& path, bool json) {
  Semigroup s = load_semigroup(path);
  if (json) {
    ordered_json out;
    out["schema"] = 1;
    out["green"] = green_to_json(s);
    dump_json(out);
    return 0;
  }
  for (GreenRelation r : kRelations) {
    RelationPartition p = green_partition(s, r);
    std::cout << to_string(r) << ":";
    for (ElemSet const& cls : p.classes) {
      std::cout << " " << format_set(s, cls);
    }
    std::cout << "\n";
  }
  return 0;
}

std::vector<TheoremId> parse_theorems(std::string const& ids) {
  if (ids == "all") {
    auto span = all_theorems();
    return {span.begin(), span.end()};
  }
  std::vector<TheoremId> out;
  std::stringstream stream(ids);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    auto id = theorem_from_string(token);
    if (!id) {
      throw std::runtime_error("unknown theorem id: " + token);
    }
    out.push_back(*id);
  }
  if (out.empty()) {
    throw std::runtime_error("no theorem ids given");
  }
  return out;
}

int run_verify(std::optional<std::string> const& file,
               std::optional<std::string> const& catalog,
               std::optional<int> order, bool up_to_iso,
               std::string const& theorem_ids, int jobs, bool json) {
  int sources = (file ? 1 : 0) + (catalog ? 1 : 0) + (order ? 1 : 0);
  if (sources != 1) {
    throw std::runtime_error(
        "verify needs exactly one of FILE, --catalog, --order");
  }
  std::vector<TheoremId> theorems = parse_theorems(theorem_ids);
  std::vector<Semigroup> corpus;
  std::string dedup = "labeled";
  if (file) {
    corpus.push_back(load_semigroup(*file));
  } else if (catalog) {
    corpus = parse_catalog(read_file(*catalog));
  } else {
    EnumerationConfig config;
    config.order = *order;
    config.dedup = up_to_iso ? EnumerationConfig::Dedup::UpToIso
                             : EnumerationConfig::Dedup::Labeled;
    corpus = all_semigroups(config);
    if (up_to_iso) dedup = "iso";
  }
  SuiteReport report = run_suite(corpus, theorems, jobs);
  report.corpus.dedup = dedup;
  bool any_fails = false;
  for (TheoremTally const& tally : report.theorems) {
    any_fails = any_fails || tally.fails > 0;
  }
  if (json) {
    dump_json(report_to_json(report));
  } else {
    std::cout << "corpus: order " << report.corpus.order << ", "
              << report.corpus.count << " semigroups, "
              << report.corpus.dedup << "\n";
    for (TheoremTally const& tally : report.theorems) {
      std::cout << to_string(tally.theorem) << ": holds " << tally.holds
                << ", fails " << tally.fails << ", skipped " << tally.skipped
                << "\n";
    }
    ordered_json rendered = report_to_json(report);
    for (auto const& erratum : rendered["errata"]) {
      std::cout << "erratum: " << erratum["id"].get<std::string>() << " ["
                << erratum["class"].get<std::string>() << "] count "
                << erratum["count"].get<std::int64_t>() << "\n";
    }
  }
  return any_fails ? 2 : 0;
}

int run_enumerate(int order, bool up_to_iso, std::optional<std::uint64_t> limit,
                  bool json) {
  EnumerationConfig config;
  config.order = order;
  config.dedup = up_to_iso ? EnumerationConfig::Dedup::UpToIso
                           : EnumerationConfig::Dedup::Labeled;
  config.limit = limit;
  bool first = true;
  enumerate_semigroups(config, [&](Semigroup s) {
    if (json) {
      std::cout << table_to_json(s).dump() << "\n";
    } else {
      if (!first) std::cout << "---\n";
      std::cout << serialize_semigroup(s);
    }
    first = false;
    return true;
  });
  return 0;
}

int run_counterexample(std::string const& theorem_name, int max_order,
                       bool json) {
  auto id = theorem_from_string(theorem_name);
  if (!id) {
    throw std::runtime_error("unknown theorem id: " + theorem_name);
  }
  auto found = find_counterexample(*id, max_order);
  if (json) {
    ordered_json out;
    out["schema"] = 1;
    out["theorem"] = std::string(to_string(*id));
    out["found"] = found.has_value();
    if (found) {
      out["semigroup"] = semigroup_to_json(found->semigroup);
      out["witness"] = found->witness;
    }
    dump_json(out);
  } else if (found) {
    std::cout << "counterexample to " << to_string(*id) << ":\n";
    std::cout << serialize_semigroup(found->semigroup);
    std::cout << "witness: " << found->witness.dump() << "\n";
  } else {
    std::cout << "no counterexample to " << to_string(*id)
              << " up to order " << max_order << "\n";
  }
  return found ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup analysis: ideals, classifications, Green's "
               "relations, and exhaustive statement verification"};
  app.require_subcommand(1);

  int default_jobs =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::string path;
  std::string kind = "interior";
  std::string theorem_ids = "all";
  std::string theorem_name;
  std::optional<std::string> verify_file;
  std::optional<std::string> catalog;
  std::optional<int> verify_order;
  std::optional<std::uint64_t> limit;
  int order = 1;
  int max_order = 4;
  int jobs = default_jobs;
  bool json = false;
  bool up_to_iso = false;
  bool timing = false;
  app.add_flag("--timing", timing,
               "report elapsed wall time on standard error");

  auto* validate = app.add_subcommand("validate", "parse and validate a .sg file");
  validate->add_option("file", path, "input .sg file")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "classifications, interior-ideal profiles and Green classes");
  analyze->add_option("file", path, "input .sg file")->required();
  analyze->add_flag("--json", json, "JSON output");

  auto* ideals = app.add_subcommand("ideals", "enumerate one ideal family");
  ideals->add_option("file", path, "input .sg file")->required();
  ideals->add_option("--kind", kind,
                     "left, right, two-sided, quasi, bi or interior");
  ideals->add_flag("--json", json, "JSON output");

  auto* green = app.add_subcommand("green", "Green relation partitions");
  green->add_option("file", path, "input .sg file")->required();
  green->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand(
      "verify", "check registered statements over a corpus");
  verify->add_option("file", verify_file, "single .sg input");
  verify->add_option("--catalog", catalog, "---separated .sg catalog");
  verify->add_option("--order", verify_order,
                     "verify over all semigroups of this order");
  verify->add_flag("--up-to-iso", up_to_iso,
                   "with --order: one representative per isomorphism class");
  verify->add_option("--theorems", theorem_ids,
                     "comma-separated statement ids, or 'all'");
  verify->add_option("--jobs", jobs, "worker threads for the corpus sweep");
  verify->add_flag("--json", json, "JSON report");

  auto* enumerate = app.add_subcommand(
      "enumerate", "stream every semigroup of one order");
  enumerate->add_option("--order", order, "carrier size, 1 to 6")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso,
                      "emit canonical representatives only");
  enumerate->add_option("--limit", limit, "stop after this many semigroups");
  enumerate->add_flag("--json", json, "one JSON table per line");

  auto* counterexample = app.add_subcommand(
      "counterexample", "search ascending orders for a refuting semigroup");
  counterexample->add_option("--theorem", theorem_name, "statement id")
      ->required();
  counterexample->add_option("--max-order", max_order, "search bound, max 6");
  counterexample->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  auto const started = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    if (timing) {
      std::chrono::duration<double> const elapsed =
          std::chrono::steady_clock::now() - started;
      std::cerr << "elapsed: " << std::fixed << std::setprecision(3)
                << elapsed.count() << "s\n";
    }
    return code;
  };

  try {
    if (validate->parsed()) return finish(run_validate(path));
    if (analyze->parsed()) return finish(run_analyze(path, json));
    if (ideals->parsed()) return finish(run_ideals(path, kind, json));
    if (green->parsed()) return finish(run_green(path, json));
    if (verify->parsed()) {
      return finish(run_verify(verify_file, catalog, verify_order, up_to_iso,
                               theorem_ids, jobs, json));
    }
    if (enumerate->parsed()) {
      return finish(run_enumerate(order, up_to_iso, limit, json));
    }
    if (counterexample->parsed()) {
      return finish(run_counterexample(theorem_name, max_order, json));
    }
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line() << ", column "
              << e.column() << ")\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

// Acceptance checklist for the library and CLI. Each numbered criterion
// prints exactly one PASS/FAIL line with its runtime; the exit code is the
// number of failed criteria. The CLI binary path arrives as argv[1].

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "sgideals/classify.hpp"
#include "sgideals/enumerate.hpp"
#include "sgideals/green.hpp"
#include "sgideals/idealprops.hpp"
#include "sgideals/ideals.hpp"
#include "sgideals/semigroup.hpp"

using namespace sgideals;
using nlohmann::ordered_json;

namespace {

std::string g_cli;

std::string fixture(std::string const& name) {
  return std::string(SGIDEALS_FIXTURE_DIR) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(std::string const& args) {
  std::string const cmd = "\"" + g_cli + "\" " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    result.output = "popen failed";
    return result;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, n);
  }
  int const status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

bool fail(std::string const& why) {
  std::cout << " [" << why << "]";
  return false;
}

// Criterion 1: the catalog example with three elements yields exactly the
// four interior ideals, the full carrier is strongly prime and the zero
// singleton is not.
bool criterion1() {
  CliResult const ideals =
      run_cli("ideals " + fixture("example2.sg") + " --kind interior");
  if (ideals.exit_code != 0) return fail("ideals exit " + std::to_string(ideals.exit_code));
  if (ideals.output != "{a}\n{a, b}\n{a, c}\n{a, b, c}\n") {
    return fail("unexpected ideal list: " + ideals.output);
  }
  CliResult const analyze =
      run_cli("analyze " + fixture("example2.sg") + " --json");
  if (analyze.exit_code != 0) return fail("analyze exit");
  ordered_json const j = ordered_json::parse(analyze.output);
  bool full_strongly_prime = false;
  bool zero_strongly_prime = true;
  for (auto const& p : j.at("interiorIdeals")) {
    if (p.at("elements") == ordered_json::array({"a", "b", "c"})) {
      full_strongly_prime = p.at("strongly_prime").get<bool>();
    }
    if (p.at("elements") == ordered_json::array({"a"})) {
      zero_strongly_prime = p.at("strongly_prime").get<bool>();
    }
  }
  if (!full_strongly_prime) return fail("carrier not strongly prime");
  if (zero_strongly_prime) return fail("zero singleton strongly prime");
  return true;
}

// Criterion 2: the symmetric four-element table is rejected with the first
// associativity violation at (a, a, b).
bool criterion2() {
  CliResult const r = run_cli("validate " + fixture("example1.sg"));
  if (r.exit_code != 1) return fail("exit " + std::to_string(r.exit_code));
  std::string const expected =
      "table is not associative: (a*a)*b = c but a*(a*b) = b";
  if (r.output.find(expected) == std::string::npos) {
    return fail("message missing: " + r.output);
  }
  return true;
}

// Criterion 3: two-sided => interior and left/right => quasi => bi on every
// nonempty subset of every labeled order-3 semigroup.
bool criterion3() {
  auto const corpus = all_semigroups(3);
  if (corpus.size() != 113) return fail("corpus size");
  std::int64_t checked = 0;
  for (Semigroup const& s : corpus) {
    for (std::uint64_t bits = 1; bits < 8; ++bits) {
      ElemSet const a(3, bits);
      bool const left = is_ideal_of_kind(s, a, IdealKind::Left);
      bool const right = is_ideal_of_kind(s, a, IdealKind::Right);
      bool const two = is_ideal_of_kind(s, a, IdealKind::TwoSided);
      bool const quasi = is_ideal_of_kind(s, a, IdealKind::Quasi);
      bool const bi = is_ideal_of_kind(s, a, IdealKind::Bi);
      bool const interior = is_ideal_of_kind(s, a, IdealKind::Interior);
      if (two && !interior) return fail("two-sided not interior");
      if ((left || right) && !quasi) return fail("one-sided not quasi");
      if (quasi && !bi) return fail("quasi not bi");
      ++checked;
    }
  }
  return checked == 113 * 7 || fail("check count");
}

// Independent generator for criterion 4: fills cells in column-major order
// and prunes with a full rescan of the decided triples, sharing no code
// with the library's row-major incremental backtracker.
void column_major_tables(int n, std::vector<std::vector<Elem>>& out) {
  constexpr Elem kUnset = 0xFF;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n, kUnset);
  auto at = [&](int i, int j) -> Elem& {
    return t[static_cast<std::size_t>(i) * n + j];
  };
  auto consistent = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Elem const ij = at(i, j);
        if (ij == kUnset) continue;
        for (int k = 0; k < n; ++k) {
          Elem const jk = at(j, k);
          if (jk == kUnset) continue;
          Elem const lhs = at(ij, k);
          Elem const rhs = at(i, jk);
          if (lhs == kUnset || rhs == kUnset) continue;
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  };
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    int const col = cell / n;
    int const row = cell % n;
    for (int v = 0; v < n; ++v) {
      at(row, col) = static_cast<Elem>(v);
      if (consistent()) {
        fill(cell + 1);
      }
    }
    at(row, col) = kUnset;
  };
  fill(0);
}

// Criterion 4: enumeration counts 1, 8, 113, 3492, cross-checked against a
// naive filter at orders <= 3 and a second-implementation generator at 4.
bool criterion4() {
  std::array<std::size_t, 4> const expected = {1, 8, 113, 3492};
  for (int n = 1; n <= 4; ++n) {
    if (all_semigroups(n).size() != expected[n - 1]) {
      return fail("count at order " + std::to_string(n));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<Elem>> naive;
    std::size_t const cells = static_cast<std::size_t>(n) * n;
    std::vector<Elem> table(cells, 0);
    while (true) {
      if (check_associativity(table, n).empty()) naive.push_back(table);
      std::size_t i = cells;
      while (i > 0 && table[i - 1] == n - 1) table[--i] = 0;
      if (i == 0) break;
      ++table[i - 1];
    }
    auto const ours = all_semigroups(n);
    if (naive.size() != ours.size()) return fail("naive count");
    for (std::size_t k = 0; k < ours.size(); ++k) {
      if (ours[k].table() != naive[k]) return fail("naive order mismatch");
    }
  }
  std::vector<std::vector<Elem>> second;
  column_major_tables(4, second);
  if (second.size() != 3492) {
    return fail("second generator count " + std::to_string(second.size()));
  }
  std::vector<std::vector<Elem>> ours;
  for (Semigroup const& s : all_semigroups(4)) ours.push_back(s.table());
  std::sort(second.begin(), second.end());
  std::sort(ours.begin(), ours.end());
  return second == ours || fail("table sets differ");
}

// Criterion 5: the order-3 sweep of every registered statement reports no
// failures outside the documented zero-degenerate errata class.
bool criterion5() {
  CliResult const r = run_cli("verify --order 3 --theorems all --json");
  if (r.exit_code != 0 && r.exit_code != 2) {
    return fail("exit " + std::to_string(r.exit_code));
  }
  ordered_json const j = ordered_json::parse(r.output);
  if (j.at("corpus").at("count") != 113) return fail("corpus count");
  if (j.at("theorems").size() != 26) return fail("registry size");
  for (auto const& entry : j.at("theorems")) {
    std::int64_t const fails = entry.at("fails").get<std::int64_t>();
    if (fails == 0) continue;
    bool excused = false;
    for (auto const& erratum : j.at("errata")) {
      excused = excused || (erratum.at("id") == entry.at("id") &&
                            erratum.at("class") == "zero-degenerate" &&
                            erratum.at("count").get<std::int64_t>() == fails);
    }
    if (!excused) {
      return fail(entry.at("id").get<std::string>() + " fails " +
                  std::to_string(fails) + " without erratum");
    }
  }
  return true;
}

// Criterion 6: on every order-<=3 semigroup, every interior ideal I and
// every element outside it admit an irreducible interior ideal containing I
// and avoiding the element; irreducibility is re-verified from scratch.
bool criterion6() {
  std::int64_t checked = 0;
  for (int order = 1; order <= 3; ++order) {
    for (Semigroup const& s : all_semigroups(order)) {
      auto const family = enumerate_ideals(s, IdealKind::Interior);
      for (ElemSet const& ideal : family) {
        for (Elem a = 0; a < s.order(); ++a) {
          if (ideal.contains(a)) continue;
          ElemSet witness = s.empty_set();
          try {
            witness = irreducible_witness(s, ideal, a);
          } catch (std::exception const& e) {
            return fail(std::string("witness threw: ") + e.what());
          }
          if (!is_ideal_of_kind(s, witness, IdealKind::Interior)) {
            return fail("witness not interior");
          }
          if (!ideal.subset_of(witness)) return fail("ideal escapes witness");
          if (witness.contains(a)) return fail("witness contains element");
          for (ElemSet const& x : family) {
            for (ElemSet const& y : family) {
              if ((x & y) == witness && x != witness && y != witness) {
                return fail("witness reducible");
              }
            }
          }
          ++checked;
        }
      }
    }
  }
  return checked > 0 || fail("nothing checked");
}

// Criterion 7: the criterion-5 sweep is byte-deterministic across runs.
bool criterion7() {
  CliResult const a = run_cli("verify --order 3 --theorems all --json");
  CliResult const b = run_cli("verify --order 3 --theorems all --json");
  if (a.exit_code != b.exit_code) return fail("exit codes differ");
  if (a.output.empty()) return fail("empty report");
  return a.output == b.output || fail("reports differ");
}

// Criterion 8: property suite over 1000 fixed-seed samples of orders 2..4.
bool criterion8() {
  std::vector<Semigroup> pool;
  for (int order = 2; order <= 4; ++order) {
    for (Semigroup& s : all_semigroups(order)) pool.push_back(std::move(s));
  }
  if (pool.size() != 8 + 113 + 3492) return fail("pool size");
  std::mt19937 rng(95014);
  auto subset = [&](Semigroup const& s) {
    std::uint64_t const mask = (std::uint64_t(1) << s.order()) - 1;
    return ElemSet(s.order(), rng() & mask);
  };
  for (int sample = 0; sample < 1000; ++sample) {
    Semigroup const& s = pool[rng() % pool.size()];

    for (int trial = 0; trial < 2; ++trial) {
      ElemSet const a = subset(s);
      ElemSet const b = subset(s);
      ElemSet const c = subset(s);
      if (subset_product(s, subset_product(s, a, b), c) !=
          subset_product(s, a, subset_product(s, b, c))) {
        return fail("complex product not associative");
      }
      ElemSet const bigger = a | subset(s);
      if (!subset_product(s, a, b).subset_of(subset_product(s, bigger, b)) ||
          !subset_product(s, b, a).subset_of(subset_product(s, b, bigger))) {
        return fail("complex product not monotone");
      }
    }

    std::vector<Elem> perm(s.order());
    for (int i = 0; i < s.order(); ++i) perm[i] = static_cast<Elem>(i);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng() % i]);
    }
    if (canonical_form(relabel(s, perm)).table() !=
        canonical_form(s).table()) {
      return fail("canonical form not invariant");
    }

    for (GreenRelation r : {GreenRelation::L, GreenRelation::R,
                            GreenRelation::J, GreenRelation::H,
                            GreenRelation::I}) {
      auto const part = green_partition(s, r);
      ElemSet seen = s.empty_set();
      for (ElemSet const& cls : part.classes) {
        if (cls.is_empty() || !(seen & cls).is_empty()) {
          return fail("partition malformed");
        }
        seen = seen | cls;
      }
      if (seen != s.full_set()) return fail("partition incomplete");
    }

    auto const family = enumerate_ideals(s, IdealKind::Interior);
    for (ElemSet const& ideal : family) {
      IdealProfile const p = profile(s, ideal, family);
      if (p.strongly_prime && !p.prime) return fail("strongly prime chain");
      if (p.prime && !p.semiprime) return fail("prime chain");
      if (p.strongly_irreducible && !p.irreducible) {
        return fail("irreducibility chain");
      }
    }
  }
  return true;
}

struct Criterion {
  int number;
  char const* label;
  double limit_seconds;  // 0 means no stated limit
  std::function<bool()> check;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-sgideals-cli>\n";
    return 64;
  }
  g_cli = argv[1];

  std::vector<Criterion> const criteria = {
      {1, "catalog example interior ideals and profile flags", 1.0,
       criterion1},
      {2, "non-associative table rejected at (a,a,b)", 1.0, criterion2},
      {3, "ideal hierarchy sweep over all order-3 semigroups", 10.0,
       criterion3},
      {4, "enumeration counts 1/8/113/3492 with two oracles", 120.0,
       criterion4},
      {5, "order-3 statement sweep clean outside documented errata", 60.0,
       criterion5},
      {6, "separating irreducible witnesses re-verified at orders <= 3", 30.0,
       criterion6},
      {7, "statement sweep is byte-deterministic", 0.0, criterion7},
      {8, "property suite over 1000 sampled semigroups", 0.0, criterion8},
  };

  int failures = 0;
  for (Criterion const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    std::cout << "criterion " << c.number << ": " << c.label;
    std::cout.flush();
    bool ok = false;
    try {
      ok = c.check();
    } catch (std::exception const& e) {
      std::cout << " [exception: " << e.what() << "]";
    }
    double const elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.limit_seconds > 0 && elapsed > c.limit_seconds) {
      std::cout << " [over time limit of " << c.limit_seconds << "s]";
      ok = false;
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << " ... " << (ok ? "PASS" : "FAIL") << " (" << timing << ")\n";
    if (!ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}

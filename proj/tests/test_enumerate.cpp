#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "sgideals/enumerate.hpp"

using namespace sgideals;

namespace {

// Brute-force oracle: every function table on n elements, kept when the
// associativity scan is clean. Enumeration order matches the backtracker's.
std::vector<std::vector<Elem>> naive_tables(int n) {
  std::vector<std::vector<Elem>> out;
  std::size_t const cells = static_cast<std::size_t>(n) * n;
  std::vector<Elem> table(cells, 0);
  while (true) {
    if (check_associativity(table, n).empty()) {
      out.push_back(table);
    }
    std::size_t i = cells;
    while (i > 0 && table[i - 1] == n - 1) {
      table[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++table[i - 1];
  }
  return out;
}

std::vector<std::vector<Elem>> tables_of(std::vector<Semigroup> const& sgs) {
  std::vector<std::vector<Elem>> out;
  out.reserve(sgs.size());
  for (Semigroup const& s : sgs) {
    out.push_back(s.table());
  }
  return out;
}

}  // namespace

TEST_CASE("labeled enumeration counts match the literature") {
  CHECK(all_semigroups(1).size() == 1);
  CHECK(all_semigroups(2).size() == 8);
  CHECK(all_semigroups(3).size() == 113);
  CHECK(all_semigroups(4).size() == 3492);
}

TEST_CASE("labeled enumeration equals the naive filter at small orders") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(tables_of(all_semigroups(n)) == naive_tables(n));
  }
}

TEST_CASE("the eight order-2 tables are exactly the known ones") {
  std::vector<std::vector<Elem>> const expected = {
      {0, 0, 0, 0},  // null on a
      {0, 0, 0, 1},  // semilattice, a below b
      {0, 0, 1, 1},  // left zero
      {0, 1, 0, 1},  // right zero
      {0, 1, 1, 0},  // group of order 2, identity a
      {0, 1, 1, 1},  // semilattice, b below a
      {1, 0, 0, 1},  // group of order 2, identity b
      {1, 1, 1, 1},  // null on b
  };
  CHECK(tables_of(all_semigroups(2)) == expected);
}

TEST_CASE("isomorphism classes") {
  auto iso = [](int order) {
    EnumerationConfig config;
    config.order = order;
    config.dedup = EnumerationConfig::Dedup::UpToIso;
    return all_semigroups(config);
  };
  CHECK(iso(1).size() == 1);
  auto const two = iso(2);
  CHECK(two.size() == 5);
  CHECK(tables_of(two) == std::vector<std::vector<Elem>>{{0, 0, 0, 0},
                                                         {0, 0, 0, 1},
                                                         {0, 0, 1, 1},
                                                         {0, 1, 0, 1},
                                                         {0, 1, 1, 0}});
  CHECK(iso(3).size() == 24);
  CHECK(iso(4).size() == 188);

  SUBCASE("representatives are canonical and cover every class") {
    std::set<std::vector<Elem>> canon;
    for (Semigroup const& s : all_semigroups(3)) {
      canon.insert(canonical_form(s).table());
    }
    auto const reps = iso(3);
    CHECK(reps.size() == canon.size());
    for (Semigroup const& s : reps) {
      CHECK(is_canonical(s));
      CHECK(canon.count(s.table()) == 1);
    }
  }
}

TEST_CASE("relabel transports the table along a permutation") {
  Semigroup const s = sgtest::make_semilattice3();
  std::vector<Elem> const perm = {1, 0, 2};  // swap a and b
  Semigroup const t = relabel(s, perm);
  CHECK(t.table() == std::vector<Elem>{0, 1, 1, 1, 1, 1, 1, 1, 2});
  CHECK(t.names() == std::vector<std::string>{"b", "a", "c"});
  CHECK(t.zero() == Elem{1});  // the zero travels with its name

  SUBCASE("identity and inverse") {
    CHECK(relabel(s, std::vector<Elem>{0, 1, 2}) == s);
    CHECK(relabel(t, perm) == s);
  }

  SUBCASE("rejects non-permutations") {
    CHECK_THROWS_AS(relabel(s, std::vector<Elem>{0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(relabel(s, std::vector<Elem>{0, 0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(relabel(s, std::vector<Elem>{0, 1, 3}),
                    std::invalid_argument);
  }
}

TEST_CASE("canonical_form is a relabeling invariant") {
  std::vector<std::vector<Elem>> const perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (Semigroup const& s : all_semigroups(3)) {
    Semigroup const canon = canonical_form(s);
    CHECK(is_canonical(canon));
    CHECK(canonical_form(canon).table() == canon.table());
    CHECK(canon.table() <= s.table());
    for (auto const& p : perms) {
      CHECK(canonical_form(relabel(s, p)).table() == canon.table());
    }
  }
}

TEST_CASE("enumeration config controls") {
  SUBCASE("limit caps the stream") {
    EnumerationConfig config;
    config.order = 3;
    config.limit = 10;
    CHECK(all_semigroups(config).size() == 10);
  }

  SUBCASE("filter keeps matching tables only") {
    EnumerationConfig config;
    config.order = 2;
    config.filter = [](Semigroup const& s) { return s.zero().has_value(); };
    auto const with_zero = all_semigroups(config);
    CHECK(with_zero.size() == 4);  // two null tables, two semilattices
    for (Semigroup const& s : with_zero) {
      CHECK(s.zero().has_value());
    }
  }

  SUBCASE("a sink returning false stops early") {
    EnumerationConfig config;
    config.order = 3;
    int seen = 0;
    enumerate_semigroups(config, [&](Semigroup) { return ++seen < 5; });
    CHECK(seen == 5);
  }

  SUBCASE("orders outside 1..6 are rejected") {
    EnumerationConfig config;
    config.order = 0;
    CHECK_THROWS_AS(all_semigroups(config), std::invalid_argument);
    config.order = 7;
    CHECK_THROWS_AS(all_semigroups(config), std::invalid_argument);
  }
}

TEST_CASE("generated semigroups use the default letter names") {
  CHECK(default_names(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(default_names(26).back() == "z");
  CHECK_THROWS_AS(default_names(0), std::invalid_argument);
  CHECK_THROWS_AS(default_names(27), std::invalid_argument);
  for (Semigroup const& s : all_semigroups(2)) {
    CHECK(s.names() == std::vector<std::string>{"a", "b"});
  }
}
